from hypothesis import HealthCheck, settings, strategies as st

from copersist.core import MonomialIdeal, Ring

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def ring(n: int) -> Ring:
    return Ring(tuple(f"x{i}" for i in range(1, n + 1)))


@st.composite
def ideals(draw, max_vars=4, max_exp=3, max_gens=5, min_vars=1, squarefree=False):
    """Proper nonzero monomial ideals."""
    n = draw(st.integers(min_vars, max_vars))
    top = 1 if squarefree else max_exp
    vec = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(ring(n), gens)


@st.composite
def ideal_and_prime(draw, **kw):
    I = draw(ideals(**kw))
    names = draw(st.sets(st.sampled_from(I.ring.vars), min_size=1))
    return I, tuple(v for v in I.ring.vars if v in names)


# acceptance criterion -> (passed, seconds); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.1f} s)")
