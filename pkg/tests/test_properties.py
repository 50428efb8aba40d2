from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from copersist.core import MonomialIdeal, MonomialPrime, Ring, power
from copersist.decompose import associated_primes
from copersist.fixtures import CORPUS, get, verify
from copersist.graphs import cover_ideal, cycle, edge_ideal
from copersist.parse import parse_ideal
from copersist.properties import (
    HOLDS,
    VIOLATED,
    AssComputationError,
    AssSequence,
    PropertyReport,
    ass_sequence,
    check_copersistence,
    check_generalized_nearly_copersistence,
    check_nearly_copersistence,
    check_normally_torsion_free,
    check_persistence,
    check_strong_persistence,
    stabilization_estimate,
)
from copersist.transforms import expand, polarize, scale_by_monomial, weight

from conftest import ideals


def P(text):
    return parse_ideal(text).ideal


def prime(R, *names):
    return MonomialPrime(R, names)


def vars_of(primes):
    return [list(p.vars) for p in primes]


PRIME = P("ideal (x1, x2)")


# a sequence stub, handy for exercising the search logic without decomposing anything
def fake_sequence(ring, per_power):
    return AssSequence(MonomialIdeal(ring, [(1,) * len(ring)]), len(per_power),
                       [tuple(sorted(set(A), key=MonomialPrime.sort_key)) for A in per_power])


def test_ass_sequence_examples():
    A = ass_sequence(edge_ideal(cycle(5)), 3)
    assert A[1] == A[2]
    assert set(A[3]) - set(A[1]) == {prime(A.ideal.ring, "x1", "x2", "x3", "x4", "x5")}
    I = get("exam_polarization_1").ideal()
    A = ass_sequence(I, 3)
    assert vars_of(A[2]) == vars_of(A[3]) == [["x", "y"], ["x", "z"], ["x", "y", "z"]]
    assert len(set(ass_sequence(PRIME, 3).per_power)) == 1
    with pytest.raises(IndexError):
        A[4]
    with pytest.raises(ValueError):
        ass_sequence(PRIME, 0)


def test_ass_failure_carries_power():
    with pytest.raises(AssComputationError) as err:
        ass_sequence(PRIME, 2, method="nope")
    assert err.value.power == 1


def test_copersistence_examples():
    assert check_copersistence(get("exam_polarization_1").ideal(), 4).holds
    L = get("exam_polarization_2_L").ideal()
    r = check_copersistence(L, 2)
    assert r.verdict == VIOLATED
    assert r.first_violation.power == 1
    assert r.first_violation.witness.vars == ("x1", "x2", "x3", "x4")
    r = check_copersistence(polarize(get("exam_polarization_1").ideal()), 2)
    assert r.first_violation.power == 1
    assert r.first_violation.witness.vars == ("x_1", "x_3", "y_3", "z_1")
    with pytest.raises(ValueError):
        check_copersistence(L, 1)


def test_copersistence_index_estimate():
    fx = get("infinite_cop_d3")
    # the family only ever loses a prime, so it is copersistent from the start
    r = check_copersistence(fx.ideal(), 5)
    assert r.holds and r.auxiliary["index_estimate"] == 1
    R = Ring(("a", "b"))
    a, ab = prime(R, "a"), prime(R, "a", "b")
    seq = fake_sequence(R, [[a], [a, ab], [a], [a]])
    r = check_copersistence(seq, 4)
    assert r.first_violation.power == 1 and r.auxiliary["index_estimate"] == 2


def test_persistence_examples():
    assert check_persistence(cover_ideal(cycle(3)), 3).holds
    assert check_persistence(edge_ideal(cycle(5)), 3).holds
    assert check_persistence(PRIME, 3).holds
    r = check_persistence(get("exam_polarization_1").ideal(), 2)
    assert r.first_violation.power == 1 and r.first_violation.witness.vars == ("x", "y", "t")


def test_strong_persistence_examples():
    assert check_strong_persistence(get("not_lem_ncop_1_L").ideal(), 3).holds
    assert check_strong_persistence(cover_ideal(cycle(3)), 3).holds
    assert check_strong_persistence(PRIME, 3).holds


def test_strong_persistence_failure_has_monomial_witness():
    # (x^4, x^3y, xy^3, y^4) is not normal: x^2y^2 lies in (I^2 : I) but not in I
    I = P("ring x,y; ideal (x^4, x^3*y, x*y^3, y^4)")
    r = check_strong_persistence(I, 2)
    assert r.verdict == VIOLATED and r.first_violation.power == 1
    w = r.first_violation.witness
    assert w not in I and all(w * g in power(I, 2) for g in I.generators)


def test_ntf_examples():
    assert check_normally_torsion_free(get("exam_ncop_1_J").ideal(), 4).holds
    assert check_normally_torsion_free(get("exam_polarization_2_Ltilde").ideal(), 3).holds
    r = check_normally_torsion_free(cover_ideal(cycle(3)), 2)
    assert r.first_violation.power == 2
    assert r.first_violation.witness.vars == ("x1", "x2", "x3")


def test_nearly_copersistence_examples():
    L = get("not_lem_ncop_1_L").ideal()
    r = check_nearly_copersistence(L, 4)
    assert r.holds and r.auxiliary["s"] == 1
    assert r.auxiliary["prime"].vars == ("x1", "x2", "x3", "x4", "x5")
    r = check_nearly_copersistence(edge_ideal(cycle(5)), 4)
    assert r.holds and r.auxiliary["s"] == 2
    r = check_nearly_copersistence(get("exam_polarization_1").ideal(), 3)
    assert r.holds and r.auxiliary["prime"] is None
    with pytest.raises(ValueError):
        check_nearly_copersistence(L, 2)


def test_nearly_copersistence_violation_report():
    R = Ring(("a", "b", "c"))
    a, b, c = prime(R, "a"), prime(R, "b"), prime(R, "c")
    # two new primes at once is too many for one augmentation
    r = check_nearly_copersistence(fake_sequence(R, [[a], [a, b, c], [a, b, c]]), 3)
    assert r.verdict == VIOLATED and r.first_violation.power == 1
    assert r.first_violation.offending == (b, c)
    # a new prime at the last step can never be absorbed
    r = check_nearly_copersistence(fake_sequence(R, [[a], [a], [a, b]]), 3)
    assert r.first_violation.power == 2 and r.first_violation.witness == b


def test_generalized_examples():
    I = get("conclusion_example").ideal()
    A = ass_sequence(I, 4)
    r = check_generalized_nearly_copersistence(A, 4, 2)
    assert r.holds and r.auxiliary["t"] == 2 and r.auxiliary["s"] == 2
    assert vars_of(r.auxiliary["primes"]) == [["x1", "x2", "x5", "x6"], ["x1", "x2", "x3", "x4", "x5", "x6"]]
    assert not check_nearly_copersistence(A, 4).holds
    r = check_generalized_nearly_copersistence(get("exam_polarization_1").ideal(), 3, 2)
    assert r.holds and r.auxiliary["t"] == 0
    with pytest.raises(ValueError):
        check_generalized_nearly_copersistence(I, 4, 0)


def test_generalized_on_gaining_example_matches_definition():
    L = get("exam_polarization_2_L").ideal()
    A = ass_sequence(L, 3)
    r = check_generalized_nearly_copersistence(A, 3, 1)
    assert r.holds == brute_force_nearly(A, 3, 1)[0]
    if r.holds:
        assert vars_of(r.auxiliary["primes"]) == [["x1", "x2", "x3", "x4"]]


def test_stabilization_examples():
    r = stabilization_estimate(cover_ideal(cycle(3)), 4)
    assert r.holds and r.auxiliary["stabilization_power"] == 2
    assert stabilization_estimate(PRIME, 3).auxiliary["stabilization_power"] == 1
    r = stabilization_estimate(get("exam_ncop_1_I").ideal(), 4)
    assert r.verdict == VIOLATED and "not stabilized" in r.auxiliary["note"]
    assert r.first_violation.witness.vars == ("x1", "x2", "x3", "x4", "x5")


def test_report_invariants():
    with pytest.raises(ValueError):
        PropertyReport("copersistence", VIOLATED, 3)
    with pytest.raises(ValueError):
        PropertyReport("copersistence", "holds", 3)
    assert "N=3" in str(PropertyReport("copersistence", HOLDS, 3))


@pytest.mark.parametrize(
    "fx", [f for f in CORPUS if not f.slow], ids=lambda f: f.id)
def test_fixture_expectations(fx):
    failures = [o for o in verify(fx) if not o.ok]
    assert not failures, failures


def brute_force_nearly(A, N, t_max):
    """Direct reading of the definition over every subset of observed primes."""
    pool = A.union()
    for s in range(1, N - 1):
        for t in range(t_max + 1):
            for extra in combinations(pool, t):
                ok = all(set(A[m + 1]) <= set(A[m]) | set(extra) for m in range(1, s + 1))
                ok = ok and all(set(A[m + 1]) <= set(A[m]) for m in range(s + 1, N))
                if ok:
                    return True, s, t
    return False, None, None


@st.composite
def sequences(draw):
    R = Ring(("a", "b", "c"))
    pool = [MonomialPrime(R, v) for n in (1, 2, 3) for v in combinations(R.vars, n)]
    N = draw(st.integers(3, 6))
    per = [draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4)) for _ in range(N)]
    return fake_sequence(R, per), N


@given(sequences(), st.integers(1, 3))
def test_augmented_search_matches_definition(data, t_max):
    A, N = data
    r = check_generalized_nearly_copersistence(A, N, t_max)
    ok, s, _ = brute_force_nearly(A, N, t_max)
    assert r.holds == ok
    if ok:
        assert r.auxiliary["s"] == s
        # the smallest t over all s is attained at the reported s
        t_min = next(t for t in range(t_max + 1) if brute_force_nearly(A, N, t)[0])
        assert r.auxiliary["t"] == t_min
    nearly = check_nearly_copersistence(A, N)
    assert nearly.holds == brute_force_nearly(A, N, 1)[0]


@given(sequences())
def test_copersistence_transitivity(data):
    A, N = data
    r = check_copersistence(A, N)
    if r.holds:
        for lam in range(1, N + 1):
            for theta in range(lam, N + 1):
                assert set(A[theta]) <= set(A[lam])
    k0 = r.auxiliary["index_estimate"]
    for lam in range(k0, N + 1):
        for theta in range(lam, N + 1):
            assert set(A[theta]) <= set(A[lam])


@settings(max_examples=30)
@given(ideals(max_vars=3, max_exp=2, max_gens=3))
def test_power_of_copersistent_ideal(I):
    N = 2
    if check_copersistence(I, 2 * N).holds:
        assert check_copersistence(power(I, 2), N).holds


def _shift(I, offset, n):
    # place I on variables offset+1.. of an n-variable ring
    R = Ring(tuple(f"x{i}" for i in range(1, n + 1)))
    gens = [(0,) * offset + g + (0,) * (n - offset - len(g)) for g in I.gens]
    return MonomialIdeal(R, gens)


@settings(max_examples=30)
@given(ideals(max_vars=2, max_exp=2, max_gens=3), ideals(max_vars=2, max_exp=2, max_gens=3))
def test_summation_of_disjoint_ideals(I, J):
    N = 3
    n = len(I.ring) + len(J.ring)
    A, B = _shift(I, 0, n), _shift(J, len(I.ring), n)
    S = A + B
    if check_copersistence(A, N).holds and check_copersistence(B, N).holds:
        assert check_copersistence(S, N).holds
    # every associated prime of S^k splits as p1 + p2 with p1 in Ass(A^k1), p2 in Ass(B^k2), k1 + k2 = k + 1
    for k in (1, 2):
        for p in associated_primes(power(S, k)):
            left = tuple(v for v in p.vars if v in support_names(A))
            right = tuple(v for v in p.vars if v in support_names(B))
            assert any(
                MonomialPrime(S.ring, left) in associated_primes(power(A, k1))
                and MonomialPrime(S.ring, right) in associated_primes(power(B, k + 1 - k1))
                for k1 in range(1, k + 1)
                if left and right
            )


def support_names(I):
    from copersist.core import support
    return set(support(I))


@pytest.mark.parametrize("fid", ["c5_edge", "not_lem_ncop_1_Q", "c3_cover", "exam_ncop_1_J"])
def test_nearly_verdicts_stable_under_operations(fid):
    I = get(fid).ideal()
    N = 4
    base = check_nearly_copersistence(I, N).holds
    n = len(I.ring)
    assert check_nearly_copersistence(expand(I, tuple(1 + (i == 0) for i in range(n))), N).holds == base
    assert check_nearly_copersistence(weight(I, tuple(1 + i % 2 for i in range(n))), N).holds == base
    # multiply by a fresh variable, coprime to every generator
    R = Ring(I.ring.vars + ("h",))
    lifted = MonomialIdeal(R, [g + (0,) for g in I.gens])
    hI = scale_by_monomial(lifted, R.var("h"))
    assert check_nearly_copersistence(hI, N).holds == base
