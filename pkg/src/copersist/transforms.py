"""Monomial operations that build new ideals from old ones.

Expansion and polarization move to a larger ring whose variables are named
``<var>_<k>``; localization, contraction and deletion move to a subring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .core import (
    IdealError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    RingMismatchError,
    product,
    support,
)


@dataclass(frozen=True)
class ExpansionSpec:
    tuple: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(i) for i in self.tuple)
        if any(i < 1 for i in t):
            raise ValueError(f"expansion entries must be positive, got {t}")
        object.__setattr__(self, "tuple", t)


@dataclass(frozen=True)
class WeightSpec:
    weights: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, ring: Ring, weights: Mapping[str, int] | Sequence[int]) -> WeightSpec:
        if isinstance(weights, Mapping):
            missing = [v for v in ring.vars if v not in weights]
            if missing:
                raise KeyError(f"no weight given for {missing}")
            extra = [v for v in weights if v not in ring]
            if extra:
                raise KeyError(f"weights for unknown variables {extra}")
            pairs = tuple((v, int(weights[v])) for v in ring.vars)
        else:
            if len(weights) != len(ring):
                raise ValueError(f"need {len(ring)} weights, got {len(weights)}")
            pairs = tuple(zip(ring.vars, (int(w) for w in weights)))
        if any(w < 1 for _, w in pairs):
            raise ValueError("weights must be positive")
        return cls(pairs)


@dataclass(frozen=True)
class PermutationSpec:
    mapping: tuple[tuple[str, str], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, str]) -> PermutationSpec:
        if sorted(mapping) != sorted(mapping.values()):
            raise ValueError(f"{dict(mapping)} is not a bijection of its domain")
        return cls(tuple(sorted(mapping.items())))


def expansion_ring(ring: Ring, spec: Sequence[int]) -> Ring:
    return Ring(tuple(f"{v}_{k}" for v, i in zip(ring.vars, spec) for k in range(1, i + 1)))


def _block_monomials(width: int, degree: int):
    # all exponent vectors of the given degree on `width` variables
    out = []
    for combo in combinations_with_replacement(range(width), degree):
        e = [0] * width
        for j in combo:
            e[j] += 1
        out.append(e)
    return out


def expand(I: MonomialIdeal, spec: ExpansionSpec | Sequence[int]) -> MonomialIdeal:
    """Replace x_j by the prime on its block of new variables, raised to the exponent."""
    if not isinstance(spec, ExpansionSpec):
        spec = ExpansionSpec(tuple(spec))
    sizes = spec.tuple
    if len(sizes) != len(I.ring):
        raise ValueError(f"expansion tuple has length {len(sizes)}, ring has {len(I.ring)} variables")
    if I.is_zero():
        raise IdealError("expansion of the zero ideal")
    ring = expansion_ring(I.ring, sizes)
    gens = []
    for g in I.gens:
        pieces = [[[]]]
        for width, a in zip(sizes, g):
            pieces.append(_block_monomials(width, a))
        partial = [[]]
        for block in pieces[1:]:
            partial = [p + b for p in partial for b in block]
        gens.extend(tuple(p) for p in partial)
    return MonomialIdeal._build(ring, gens)


def weight(I: MonomialIdeal, spec: WeightSpec | Mapping[str, int] | Sequence[int]) -> MonomialIdeal:
    if not isinstance(spec, WeightSpec):
        spec = WeightSpec.of(I.ring, spec)
    if [v for v, _ in spec.weights] != list(I.ring.vars):
        raise KeyError("weight spec does not match the ring")
    if I.is_zero():
        raise IdealError("weighting the zero ideal")
    w = [k for _, k in spec.weights]
    return MonomialIdeal._build(I.ring, (tuple(a * k for a, k in zip(g, w)) for g in I.gens))


def polarization_ring(I: MonomialIdeal) -> Ring:
    tops = [max((g[i] for g in I.gens), default=0) for i in range(len(I.ring))]
    return Ring(tuple(f"{v}_{k}" for v, t in zip(I.ring.vars, tops) for k in range(1, t + 1)))


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree ideal: x^t becomes x_1*...*x_t, with as many shadows as the largest exponent of x."""
    if I.is_zero():
        raise IdealError("polarization of the zero ideal")
    if I.is_unit():
        raise IdealError("polarization of the unit ideal")
    tops = [max(g[i] for g in I.gens) for i in range(len(I.ring))]
    ring = polarization_ring(I)
    gens = []
    for g in I.gens:
        e = []
        for a, t in zip(g, tops):
            e.extend([1] * a + [0] * (t - a))
        gens.append(tuple(e))
    return MonomialIdeal._build(ring, gens)


_SHADOW = re.compile(r"^(.*)_(\d+)$")


def depolarize(J: MonomialIdeal, base: Ring | None = None, shadows: Mapping[str, str] | None = None) -> MonomialIdeal:
    """Substitute every shadow variable by its base variable.

    Without an explicit map, ``v_k`` is read as a shadow of ``v``. Without a
    base ring, base variables are taken in order of first appearance.
    """
    if shadows is None:
        shadows = {}
        for v in J.ring.vars:
            m = _SHADOW.match(v)
            if m:
                shadows[v] = m.group(1)
    used = support(J)
    missing = [v for v in used if v not in shadows]
    if missing:
        raise KeyError(f"no base variable for shadows {missing}")
    if base is None:
        base = Ring(tuple(dict.fromkeys(shadows[v] for v in J.ring.vars if v in shadows)))
    pos = [base.index(shadows[v]) if v in shadows else None for v in J.ring.vars]
    gens = []
    for g in J.gens:
        e = [0] * len(base)
        for p, a in zip(pos, g):
            if a:
                e[p] += a
        gens.append(tuple(e))
    return MonomialIdeal._build(base, gens)


def _prime_names(I: MonomialIdeal, p: MonomialPrime | Iterable[str]) -> tuple[str, ...]:
    names = p.vars if isinstance(p, MonomialPrime) else tuple(p)
    for v in names:
        if v not in I.ring:
            raise KeyError(f"variable {v!r} not in {I.ring!r}")
    if not names:
        raise ValueError("localization needs a nonempty prime")
    return names


def localize(I: MonomialIdeal, p: MonomialPrime | Iterable[str]) -> MonomialIdeal:
    """Monomial localization: set every variable outside p to 1.

    If p does not contain I some generator becomes 1 and the result is the unit ideal.
    """
    return _set_to_one(I, _prime_names(I, p))


def _set_to_one(I: MonomialIdeal, names) -> MonomialIdeal:
    ring = I.ring.restrict(names)
    keep = [I.ring.index(v) for v in ring.vars]
    return MonomialIdeal._build(ring, (tuple(g[i] for i in keep) for g in I.gens))


def contract(I: MonomialIdeal, var: str) -> MonomialIdeal:
    """Set x_j = 1; the ring loses x_j."""
    I.ring.index(var)
    return _set_to_one(I, [v for v in I.ring.vars if v != var])


def delete(I: MonomialIdeal, var: str) -> MonomialIdeal:
    """Set var to 0: drop the generators it divides and remove it from the ring."""
    j = I.ring.index(var)
    ring = Ring(tuple(v for v in I.ring.vars if v != var))
    return MonomialIdeal._build(ring, (g[:j] + g[j + 1:] for g in I.gens if not g[j]))


def permute(I: MonomialIdeal, sigma: PermutationSpec | Mapping[str, str]) -> MonomialIdeal:
    if not I.is_squarefree():
        raise IdealError("permutation is only defined for squarefree ideals")
    if not isinstance(sigma, PermutationSpec):
        sigma = PermutationSpec.of(sigma)
    mapping = dict(sigma.mapping)
    unknown = [v for v in mapping if v not in I.ring]
    if unknown:
        raise KeyError(f"permutation moves variables outside the ring: {unknown}")
    if not set(support(I)) <= set(mapping):
        raise ValueError(f"permutation domain {sorted(mapping)} does not cover supp(I) = {list(support(I))}")
    target = [I.ring.index(mapping.get(v, v)) for v in I.ring.vars]
    gens = []
    for g in I.gens:
        e = [0] * len(g)
        for t, a in zip(target, g):
            e[t] = a
        gens.append(tuple(e))
    return MonomialIdeal._build(I.ring, gens)


def scale_by_monomial(I: MonomialIdeal, h: Monomial) -> MonomialIdeal:
    """The ideal hI."""
    if h.ring != I.ring:
        raise RingMismatchError(f"{h.ring!r} vs {I.ring!r}")
    return product(I, MonomialIdeal._from_minimal(I.ring, (h.exps,)))
