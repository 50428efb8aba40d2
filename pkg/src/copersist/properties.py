"""Bounded checks of power-indexed properties of Ass(R/I^k).

Every verdict here is relative to a bound N: "holds-up-to-bound" means the
defining containments were verified for all powers up to N and nothing more.
The checkers accept either an ideal or a precomputed AssSequence, so one
sequence can feed several checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import Monomial, MonomialIdeal, MonomialPrime, colon, require_proper_nonzero, sorted_primes
from .decompose import associated_primes

HOLDS = "holds-up-to-bound"
VIOLATED = "violated"


class AssComputationError(RuntimeError):
    """Ass(I^k) could not be computed; ``power`` says which k failed."""

    def __init__(self, power: int, cause: Exception):
        super().__init__(f"Ass of power {power} failed: {cause}")
        self.power = power
        self.cause = cause


@dataclass
class AssSequence:
    ideal: MonomialIdeal
    max_power: int
    per_power: list[tuple[MonomialPrime, ...]]

    def __getitem__(self, k: int) -> tuple[MonomialPrime, ...]:
        """Ass(I^k), 1-based."""
        if not 1 <= k <= self.max_power:
            raise IndexError(f"power {k} outside 1..{self.max_power}")
        return self.per_power[k - 1]

    def union(self) -> tuple[MonomialPrime, ...]:
        return sorted_primes(p for A in self.per_power for p in A)

    def truncated(self, N: int) -> AssSequence:
        if N > self.max_power:
            raise ValueError(f"sequence only reaches power {self.max_power}")
        return AssSequence(self.ideal, N, self.per_power[:N])


def ass_sequence(I: MonomialIdeal, N: int, method: str = "split") -> AssSequence:
    require_proper_nonzero(I, "Ass sequence")
    if N < 1:
        raise ValueError("N must be at least 1")
    out = []
    P = I
    for k in range(1, N + 1):
        if k > 1:
            P = P * I
        try:
            out.append(associated_primes(P, method))
        except Exception as e:
            raise AssComputationError(k, e) from e
    return AssSequence(I, N, out)


@dataclass
class Violation:
    power: int
    witness: MonomialPrime | Monomial
    offending: tuple[MonomialPrime, ...] = ()


@dataclass
class PropertyReport:
    property: str
    verdict: str
    bound: int
    first_violation: Violation | None = None
    auxiliary: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (HOLDS, VIOLATED):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == VIOLATED and self.first_violation is None:
            raise ValueError("a violated report needs a witness")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def __str__(self):
        s = f"{self.property}: {self.verdict} (N={self.bound})"
        if self.first_violation is not None:
            v = self.first_violation
            s += f", first violation at k={v.power}: {v.witness}"
        return s


def _seq(I: MonomialIdeal | AssSequence, N: int) -> AssSequence:
    if isinstance(I, AssSequence):
        return I.truncated(N)
    return ass_sequence(I, N)


def _diff(A, B) -> tuple[MonomialPrime, ...]:
    return sorted_primes(set(A) - set(B))


def _report(name: str, N: int, bad, **aux) -> PropertyReport:
    if bad is None:
        return PropertyReport(name, HOLDS, N, None, aux)
    k, offending = bad
    return PropertyReport(name, VIOLATED, N, Violation(k, offending[0], offending), aux)


def _need(N: int, least: int):
    if N < least:
        raise ValueError(f"bound N must be at least {least}, got {N}")


def check_copersistence(I: MonomialIdeal | AssSequence, N: int) -> PropertyReport:
    """Ass(I^k) contains Ass(I^{k+1}) for 1 <= k < N."""
    _need(N, 2)
    A = _seq(I, N)
    gaps = {k: _diff(A[k + 1], A[k]) for k in range(1, N)}
    bad = next(((k, g) for k, g in gaps.items() if g), None)
    index = N
    while index > 1 and not gaps[index - 1]:
        index -= 1
    return _report("copersistence", N, bad, index_estimate=index)


def check_persistence(I: MonomialIdeal | AssSequence, N: int) -> PropertyReport:
    """Ass(I^k) is contained in Ass(I^{k+1}) for 1 <= k < N."""
    _need(N, 2)
    A = _seq(I, N)
    gaps = {k: _diff(A[k], A[k + 1]) for k in range(1, N)}
    bad = next(((k, g) for k, g in gaps.items() if g), None)
    index = N
    while index > 1 and not gaps[index - 1]:
        index -= 1
    return _report("persistence", N, bad, index_estimate=index)


def check_strong_persistence(I: MonomialIdeal, N: int) -> PropertyReport:
    """(I^{k+1} : I) = I^k for 1 <= k < N."""
    _need(N, 2)
    require_proper_nonzero(I, "strong persistence")
    prev, cur = I, I * I
    for k in range(1, N):
        C = colon(cur, I)
        if C != prev:
            extra = next(g for g in C.generators if g not in prev)
            return PropertyReport("strong-persistence", VIOLATED, N, Violation(k, extra))
        prev, cur = cur, cur * I
    return PropertyReport("strong-persistence", HOLDS, N)


def check_normally_torsion_free(I: MonomialIdeal | AssSequence, N: int) -> PropertyReport:
    """Ass(I^k) is contained in Ass(I) for 2 <= k <= N."""
    _need(N, 2)
    A = _seq(I, N)
    bad = next(((k, g) for k in range(2, N + 1) if (g := _diff(A[k], A[1]))), None)
    return _report("normally-torsion-free", N, bad)


def _augmented_search(A: AssSequence, N: int, t_max: int):
    """Smallest s (with its primes) making the augmented containments hold.

    For a fixed s, the primes must cover every prime that is new at some m <= s,
    and plain containment must hold for s < m < N. The candidates are the new
    primes themselves, so the search only needs to count them. Both the tail
    condition and the needed primes grow with s, so the smallest feasible s
    also needs the fewest primes.
    """
    new_at = {m: _diff(A[m + 1], A[m]) for m in range(1, N)}
    tail_ok = {}
    ok = True
    for m in range(N - 1, 0, -1):
        tail_ok[m] = ok  # containment for every m' in (m, N)
        ok = ok and not new_at[m]
    best = None
    for s in range(1, N - 1):
        if not tail_ok[s]:
            continue
        needed = sorted_primes(p for m in range(1, s + 1) for p in new_at[m])
        if len(needed) <= t_max:
            best = (s, needed)
            break
    return new_at, tail_ok, best


def check_nearly_copersistence(I: MonomialIdeal | AssSequence, N: int) -> PropertyReport:
    """Copersistence up to one extra prime p for powers m <= s, plain copersistence after s.

    Reports the smallest s. When no prime is needed p is None (the input is
    copersistent up to N).
    """
    _need(N, 3)
    A = _seq(I, N)
    new_at, _, best = _augmented_search(A, N, 1)
    if best is not None:
        s, needed = best
        return PropertyReport(
            "nearly-copersistence", HOLDS, N, None,
            {"s": s, "prime": needed[0] if needed else None},
        )
    return PropertyReport("nearly-copersistence", VIOLATED, N, _augmented_violation(new_at, N, 1))


def _augmented_violation(new_at, N: int, t: int) -> Violation:
    # with s = N - 2 the only plain containment left is at m = N - 1
    if new_at[N - 1]:
        return Violation(N - 1, new_at[N - 1][0], new_at[N - 1])
    seen: list[MonomialPrime] = []
    for m in range(1, N - 1):
        seen.extend(p for p in new_at[m] if p not in seen)
        if len(seen) > t:
            offending = sorted_primes(seen)
            return Violation(m, new_at[m][0], offending)
    raise AssertionError("no violation found")


def check_generalized_nearly_copersistence(I: MonomialIdeal | AssSequence, N: int, t_max: int) -> PropertyReport:
    """Like nearly copersistence with up to t_max extra primes; reports the smallest t, then s."""
    _need(N, 3)
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    A = _seq(I, N)
    new_at, tail_ok, best = _augmented_search(A, N, t_max)
    if best is None:
        return PropertyReport(
            "generalized-nearly-copersistence", VIOLATED, N,
            _augmented_violation(new_at, N, t_max), {"t_max": t_max},
        )
    s, primes = best
    aux = {"t_max": t_max, "t": len(primes), "s": s, "primes": primes}
    if not primes:
        aux["note"] = "copersistent up to the bound"
    return PropertyReport("generalized-nearly-copersistence", HOLDS, N, None, aux)


def stabilization_estimate(I: MonomialIdeal | AssSequence, N: int) -> PropertyReport:
    """Smallest k with Ass(I^k) = ... = Ass(I^N); violated when that k is N itself."""
    _need(N, 2)
    A = _seq(I, N)
    k = N
    while k > 1 and set(A[k - 1]) == set(A[N]):
        k -= 1
    if k < N:
        return PropertyReport("stabilization", HOLDS, N, None, {"stabilization_power": k})
    sym = sorted_primes(set(A[N - 1]) ^ set(A[N]))
    return PropertyReport(
        "stabilization", VIOLATED, N, Violation(N - 1, sym[0], sym),
        {"note": "not stabilized within bound"},
    )


__all__ = [
    "AssComputationError",
    "AssSequence",
    "HOLDS",
    "PropertyReport",
    "VIOLATED",
    "Violation",
    "ass_sequence",
    "check_copersistence",
    "check_generalized_nearly_copersistence",
    "check_nearly_copersistence",
    "check_normally_torsion_free",
    "check_persistence",
    "check_strong_persistence",
    "stabilization_estimate",
]
