"""Integral closure of monomial ideals and the normality test.

A monomial x^a lies in the integral closure of I exactly when a lies in the
Newton polyhedron conv(G(I)) + R_{>=0}^n. Membership is an LP feasibility
problem, solved in exact rational arithmetic. Since the Newton polyhedron of
I^m is m times that of I, powers are always tested against G(I) itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Sequence

import numpy as np

from .core import (
    BudgetExceededError,
    Exps,
    Monomial,
    MonomialIdeal,
    exps_in,
    grlex_key,
    lcm_gens,
    power,
    require_proper_nonzero,
)
from .lp import nonnegative_solution

CLOSURE_BUDGET = 10**6
POWER_ORACLE_K = 12


def newton_certificate(gens: Sequence[Exps], a: Sequence[int], scale: int = 1):
    """Weights lam_u >= 0 with sum(lam) = scale and sum(lam_u * u) <= a, or None."""
    n = len(a)
    for i in range(n):
        if all(u[i] * scale > a[i] for u in gens):
            return None
    # rows: one per coordinate (with a slack column each), then the weight sum
    m = len(gens)
    A = []
    for i in range(n):
        A.append([u[i] for u in gens] + [1 if j == i else 0 for j in range(n)])
    A.append([1] * m + [0] * n)
    sol = nonnegative_solution(A, list(a) + [scale])
    return None if sol is None else sol[:m]


def in_closure(I: MonomialIdeal, a: Sequence[int] | Monomial) -> bool:
    require_proper_nonzero(I, "integral closure")
    a = a.exps if isinstance(a, Monomial) else tuple(a)
    if len(a) != len(I.ring):
        raise ValueError("query point has the wrong length")
    if exps_in(I.gens, a):
        return True
    return newton_certificate(I.gens, a) is not None


def _box_chunks(top: Exps, budget: int, chunk: int = 1 << 15):
    shape = tuple(t + 1 for t in top)
    size = 1
    for t in shape:
        size *= t
    if size > budget:
        raise BudgetExceededError(f"lattice box has {size} points, budget is {budget}")
    for start in range(0, size, chunk):
        flat = np.arange(start, min(size, start + chunk))
        yield np.stack(np.unravel_index(flat, shape), axis=1).astype(np.int64)


def _members(gens: Sequence[Exps], pts: np.ndarray) -> np.ndarray:
    hit = np.zeros(len(pts), dtype=bool)
    for u in np.asarray(gens, dtype=np.int64):
        hit |= np.all(pts >= u, axis=1)
    return hit


def _cheap_reject(gens: Sequence[Exps], pts: np.ndarray, scale: int) -> np.ndarray:
    # every 0/1 weight vector c gives the valid inequality c.a >= scale * min_u c.u
    n = pts.shape[1]
    if n > 12:
        return np.zeros(len(pts), dtype=bool)
    C = np.array(list(cartesian((0, 1), repeat=n))[1:], dtype=np.int64)
    U = np.asarray(gens, dtype=np.int64)
    floor = scale * (U @ C.T).min(axis=0)
    return np.any(pts @ C.T < floor, axis=1)


def _closure_points(base: Sequence[Exps], scale: int, target: MonomialIdeal, budget: int):
    """Box points of the closure of ``target`` (= I^scale, I generated by ``base``) not in target."""
    rows = []
    for pts in _box_chunks(lcm_gens(target).exps, budget):
        cand = ~_members(target.gens, pts) & ~_cheap_reject(base, pts, scale)
        rows.extend(tuple(int(v) for v in p) for p in pts[cand])
    rows.sort(key=grlex_key)
    for p in rows:
        if newton_certificate(base, p, scale) is not None:
            yield p


def integral_closure(I: MonomialIdeal, budget: int = CLOSURE_BUDGET) -> MonomialIdeal:
    require_proper_nonzero(I, "integral closure")
    extra = list(_closure_points(I.gens, 1, I, budget))
    return MonomialIdeal._build(I.ring, list(I.gens) + extra)


def is_integrally_closed(I: MonomialIdeal, budget: int = CLOSURE_BUDGET) -> bool:
    return _first_gap(I, I, 1, budget) is None


def _first_gap(base: MonomialIdeal, target: MonomialIdeal, scale: int, budget: int):
    for p in _closure_points(base.gens, scale, target, budget):
        return Monomial(target.ring, p)
    return None


@dataclass
class NormalityResult:
    """Outcome of checking closure(I^m) = I^m for m = 1..n-1."""

    normal: bool
    n_vars: int
    checked: list[int] = field(default_factory=list)
    failing_power: int | None = None
    witness: Monomial | None = None

    def __bool__(self):
        return self.normal


def is_normal(I: MonomialIdeal, budget: int = CLOSURE_BUDGET) -> NormalityResult:
    """Normality via the integrally-closed powers criterion.

    Uses the number of ring variables n, even if I involves fewer of them.
    """
    require_proper_nonzero(I, "normality test")
    n = len(I.ring)
    res = NormalityResult(True, n)
    P = I
    for m in range(1, n):
        if m > 1:
            P = P * I
        gap = _first_gap(I, P, m, budget)
        res.checked.append(m)
        if gap is not None:
            res.normal = False
            res.failing_power = m
            res.witness = gap
            break
    return res


def closure_power_oracle(I: MonomialIdeal, a: Sequence[int] | Monomial, K: int = POWER_ORACLE_K) -> bool:
    """True if x^(k a) lies in I^k for some k <= K (one-sided closure test)."""
    a = a.exps if isinstance(a, Monomial) else tuple(a)
    if K < 1:
        raise ValueError("K must be at least 1")
    P = I
    for k in range(1, K + 1):
        if k > 1:
            P = P * I
        if exps_in(P.gens, tuple(k * v for v in a)):
            return True
    return False


def power_closed(I: MonomialIdeal, m: int, budget: int = CLOSURE_BUDGET) -> bool:
    """closure(I^m) == I^m, tested against m times the Newton polyhedron of I."""
    return _first_gap(I, power(I, m), m, budget) is None
