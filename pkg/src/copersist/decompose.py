"""Irreducible and primary decomposition of monomial ideals, associated primes.

The irredundant irreducible decomposition of a monomial ideal is unique, so
both decomposition routes below return the same component list; they differ
only in cost. ``ass_witness_oracle`` is an independent brute-force check that
works straight from the definition of an associated prime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BudgetExceededError,
    Exps,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    grlex_key,
    intersect,
    lcm_gens,
    minimal_exps,
    require_proper_nonzero,
    sorted_primes,
)

ORACLE_BUDGET = 10**7
_CHUNK = 1 << 16


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{b_i} : b_i > 0); ``exps`` holds b with 0 for unused variables."""

    ring: Ring
    exps: Exps

    @property
    def bounds(self) -> dict[str, int]:
        return {v: b for v, b in zip(self.ring.vars, self.exps) if b}

    def ideal(self) -> MonomialIdeal:
        gens = []
        for i, b in enumerate(self.exps):
            if b:
                e = [0] * len(self.exps)
                e[i] = b
                gens.append(tuple(e))
        return MonomialIdeal._build(self.ring, gens)

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(self.bounds))

    def __str__(self):
        return str(self.ideal())


@dataclass(frozen=True)
class PrimaryComponent:
    ring: Ring
    ideal: MonomialIdeal
    radical: MonomialPrime

    def __str__(self):
        return f"{self.ideal} [{self.radical}]"


def _component_key(c: Exps):
    # by number of variables used, then by which ones, then by exponents
    used = tuple(i for i, b in enumerate(c) if b)
    return (len(used), used, c)


def _contains_component(big: Exps, small: Exps) -> bool:
    # ideal(small) is a subset of ideal(big)
    for s, b in zip(small, big):
        if s and (not b or b > s):
            return False
    return True


def _irredundant(comps) -> list[Exps]:
    # drop any component that contains another; that one is redundant
    comps = sorted(set(comps), key=lambda c: (-sum(1 for b in c if b), _component_key(c)))
    kept: list[Exps] = []
    for c in comps:
        if not any(_contains_component(c, k) for k in kept):
            kept = [k for k in kept if not _contains_component(k, c)]
            kept.append(c)
    return sorted(kept, key=_component_key)


def _split(gens: tuple[Exps, ...], memo: dict) -> frozenset[Exps]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    for g in gens:
        nz = [i for i, a in enumerate(g) if a]
        if len(nz) > 1:
            break
    else:
        comp = [0] * len(gens[0])
        for g in gens:
            for i, a in enumerate(g):
                if a:
                    comp[i] = a
        out = frozenset([tuple(comp)])
        memo[gens] = out
        return out
    i = nz[0]
    a = tuple(g[i] if j == i else 0 for j in range(len(g)))
    b = tuple(0 if j == i else g[j] for j in range(len(g)))
    out = _split(minimal_exps(gens + (a,)), memo) | _split(minimal_exps(gens + (b,)), memo)
    memo[gens] = out
    return out


def _incremental(gens: tuple[Exps, ...]) -> list[Exps]:
    # I + (g) = intersection over components C of (C + (g)), and for irreducible C
    # not containing g, C + (g) splits as the intersection of C + (x_i^{g_i}).
    n = len(gens[0])
    comps: list[Exps] = []
    first = gens[0]
    for i, a in enumerate(first):
        if a:
            comps.append(tuple(a if j == i else 0 for j in range(n)))
    for g in gens[1:]:
        keep, fresh = [], []
        for c in comps:
            if any(b and a >= b for a, b in zip(g, c)):
                keep.append(c)
                continue
            for i, a in enumerate(g):
                if a:
                    fresh.append(c[:i] + (a,) + c[i + 1:])
        # a fresh component can only be made redundant by a kept one or another fresh one
        fresh = set(fresh)
        survivors = []
        for c in fresh:
            if any(_contains_component(c, k) for k in keep):
                continue
            survivors.append(c)
        comps = keep + _irredundant(survivors)
    return comps


def irreducible_decomposition(I: MonomialIdeal, method: str = "split") -> list[IrreducibleComponent]:
    """Irredundant decomposition of I into ideals generated by pure powers.

    ``method="split"`` peels the first mixed generator u = x_i^a * b into
    I + (x_i^a) and I + (b) recursively; ``"incremental"`` adds generators one
    at a time to a running decomposition. Both give the same unique answer.
    """
    require_proper_nonzero(I, "irreducible decomposition")
    if method == "split":
        comps = _irredundant(_split(I.gens, {}))
    elif method == "incremental":
        comps = _irredundant(_incremental(I.gens))
    else:
        raise ValueError(f"unknown method {method!r}")
    return [IrreducibleComponent(I.ring, c) for c in comps]


def primary_decomposition(I: MonomialIdeal, method: str = "split") -> list[PrimaryComponent]:
    groups: dict[tuple[str, ...], list[IrreducibleComponent]] = {}
    for c in irreducible_decomposition(I, method):
        groups.setdefault(c.radical().vars, []).append(c)
    out = []
    for vars_, comps in groups.items():
        Q = intersect(*(c.ideal() for c in comps))
        out.append(PrimaryComponent(I.ring, Q, MonomialPrime(I.ring, vars_)))
    out.sort(key=lambda pc: pc.radical.sort_key())
    return out


def associated_primes(I: MonomialIdeal, method: str = "split") -> tuple[MonomialPrime, ...]:
    require_proper_nonzero(I, "associated primes")
    return sorted_primes(c.radical() for c in irreducible_decomposition(I, method))


def minimal_primes(I: MonomialIdeal, method: str = "split") -> tuple[MonomialPrime, ...]:
    ass = associated_primes(I, method)
    return tuple(p for p in ass if not any(q != p and q <= p for q in ass))


def ass_witnesses(I: MonomialIdeal, budget: int = ORACLE_BUDGET) -> dict[MonomialPrime, Monomial]:
    """Every prime of the form (I : f) with f in the box below lcm(G(I)).

    Maps each prime to its grlex-first witness f. Raises
    BudgetExceededError rather than truncating the search.
    """
    require_proper_nonzero(I, "witness oracle")
    top = lcm_gens(I).exps
    size = 1
    for t in top:
        size *= t + 1
    if size > budget:
        raise BudgetExceededError(f"witness box has {size} points, budget is {budget}")
    n = len(top)
    shape = tuple(t + 1 for t in top)
    gens = np.array(I.gens, dtype=np.int64)

    def member(pts):
        hit = np.zeros(len(pts), dtype=bool)
        for u in gens:
            hit |= np.all(pts >= u, axis=1)
        return hit

    found: dict[MonomialPrime, Monomial] = {}
    for start in range(0, size, _CHUNK):
        flat = np.arange(start, min(size, start + _CHUNK))
        grid = np.stack(np.unravel_index(flat, shape), axis=1).astype(np.int64)
        in_I = member(grid)
        # x_i * f in I, for each variable i
        up = np.empty((len(grid), n), dtype=bool)
        for i in range(n):
            shifted = grid.copy()
            shifted[:, i] += 1
            up[:, i] = member(shifted)
        ok = ~in_I & up.any(axis=1)
        # (I : f) is generated by u / gcd(u, f); it equals the prime on `up` iff
        # every such quotient involves a variable of that prime
        for u in gens:
            ok &= np.any(up & (grid < u), axis=1)
        for r in np.nonzero(ok)[0]:
            p = MonomialPrime(I.ring, tuple(v for v, u in zip(I.ring.vars, up[r]) if u))
            f = Monomial(I.ring, tuple(int(a) for a in grid[r]))
            old = found.get(p)
            if old is None or grlex_key(f.exps) < grlex_key(old.exps):
                found[p] = f
    return {p: found[p] for p in sorted_primes(found)}


def ass_witness_oracle(I: MonomialIdeal, budget: int = ORACLE_BUDGET) -> tuple[MonomialPrime, ...]:
    return tuple(ass_witnesses(I, budget))
