"""Randomized laws, 100 ideals each on at most 4 variables with exponents at most 3."""

import itertools

from hypothesis import given, settings, strategies as st

from copersist.closure import closure_power_oracle, in_closure, integral_closure
from copersist.core import MonomialPrime, intersect, lcm_gens, power
from copersist.decompose import (
    ass_witness_oracle,
    associated_primes,
    irreducible_decomposition,
)
from copersist.transforms import depolarize, expand, localize, polarize, scale_by_monomial, weight

from conftest import ideal_and_prime, ideals

LAW = settings(max_examples=100, deadline=None)
SMALL = dict(max_vars=4, max_exp=3)


@LAW
@given(ideals(**SMALL))
def test_decomposition_reconstructs(I):
    comps = irreducible_decomposition(I)
    assert intersect(*(c.ideal() for c in comps)) == I
    inc = irreducible_decomposition(I, "incremental")
    assert [c.exps for c in inc] == [c.exps for c in comps]


@LAW
@given(ideals(**SMALL))
def test_ass_matches_witness_oracle(I):
    assert associated_primes(I) == ass_witness_oracle(I)


@LAW
@given(ideals(**SMALL))
def test_closure_matches_power_oracle(I):
    C = integral_closure(I)
    for g in C.generators:
        assert closure_power_oracle(I, g)
    top = lcm_gens(I).exps
    for a in itertools.product(*(range(t + 1) for t in top)):
        if not in_closure(I, a):
            assert not closure_power_oracle(I, a)


@LAW
@given(ideal_and_prime(**SMALL), st.integers(1, 3))
def test_localization_law(data, k):
    I, p = data
    L = localize(I, p)
    assert localize(power(I, k), p) == power(L, k)
    if not L.is_unit():
        want = [q.vars for q in associated_primes(I) if set(q.vars) <= set(p)]
        assert sorted(q.vars for q in associated_primes(L)) == sorted(want)


@LAW
@given(ideals(**SMALL), st.data())
def test_expansion_law(I, data):
    spec = tuple(data.draw(st.integers(1, 2)) for _ in I.ring.vars)
    E = expand(I, spec)
    for k in (1, 2):
        assert expand(power(I, k), spec) == power(E, k)
    blocks = {v: [f"{v}_{j}" for j in range(1, spec[i] + 1)] for i, v in enumerate(I.ring.vars)}
    starred = {MonomialPrime(E.ring, tuple(w for v in p.vars for w in blocks[v])) for p in associated_primes(I)}
    assert set(associated_primes(E)) == starred


@LAW
@given(ideals(**SMALL), st.data())
def test_weighting_law(I, data):
    w = tuple(data.draw(st.integers(1, 3)) for _ in I.ring.vars)
    W = weight(I, w)
    for k in (1, 2, 3):
        assert weight(power(I, k), w) == power(W, k)
    assert associated_primes(W) == associated_primes(I)


@LAW
@given(ideals(**SMALL), st.data())
def test_scale_law(I, data):
    h = tuple(data.draw(st.integers(0, 2)) for _ in I.ring.vars)
    hm = I.ring.monomial(dict(zip(I.ring.vars, h)))
    singles = {MonomialPrime(I.ring, (v,)) for v, a in zip(I.ring.vars, h) if a}
    hI = scale_by_monomial(I, hm)
    assert set(associated_primes(hI)) == set(associated_primes(I)) | singles


@LAW
@given(ideals(**SMALL))
def test_polarization_round_trip(I):
    Pol = polarize(I)
    assert Pol.is_squarefree()
    assert depolarize(Pol, I.ring) == I
