"""Monomials and monomial ideals over a polynomial ring with named variables.

Ideals are stored by their minimal generating set, as a tuple of dense
exponent vectors sorted by graded lex order. The zero ideal has no
generators and the unit ideal is generated by the all-zero vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

MAX_EXPONENT = 2**64 - 1

Exps = tuple[int, ...]


class RingMismatchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""


class IdealError(ValueError):
    """An operation was given a zero, unit, or otherwise invalid ideal."""


@dataclass(frozen=True)
class Ring:
    vars: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.vars)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    def __len__(self):
        return len(self.vars)

    def __iter__(self):
        return iter(self.vars)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.vars}") from None

    def restrict(self, names: Iterable[str]) -> Ring:
        """Subring on ``names``, keeping this ring's variable order."""
        keep = set(names)
        for v in keep:
            self.index(v)
        return Ring(tuple(v for v in self.vars if v in keep))

    def var(self, name: str) -> Monomial:
        e = [0] * len(self)
        e[self.index(name)] = 1
        return Monomial(self, tuple(e))

    def one(self) -> Monomial:
        return Monomial(self, (0,) * len(self))

    def monomial(self, powers: dict[str, int]) -> Monomial:
        e = [0] * len(self)
        for v, k in powers.items():
            e[self.index(v)] += k
        return Monomial(self, tuple(e))

    def __repr__(self):
        return f"Ring({', '.join(self.vars)})"


def _check_exps(ring: Ring, e: Sequence[int]) -> Exps:
    e = tuple(int(a) for a in e)
    if len(e) != len(ring):
        raise ValueError(f"exponent vector {e} has wrong length for {ring!r}")
    for a in e:
        if a < 0:
            raise ValueError(f"negative exponent in {e}")
        if a > MAX_EXPONENT:
            raise OverflowError(f"exponent {a} exceeds 64-bit range")
    return e


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def grlex_key(e: Exps):
    # ascending total degree, then x1^2 < x1*x2 < x2^2 within a degree
    return (sum(e), tuple(-a for a in e))


def minimal_exps(exps: Iterable[Exps]) -> tuple[Exps, ...]:
    """Divisibility-minimal elements of a collection of exponent vectors, grlex sorted."""
    uniq = sorted(set(exps), key=grlex_key)
    kept: list[Exps] = []
    for e in uniq:
        for g in kept:
            if _divides(g, e):
                break
        else:
            kept.append(e)
    return tuple(kept)


def _mono_str(ring: Ring, e: Exps) -> str:
    parts = []
    for v, a in zip(ring.vars, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exps: Exps

    def __post_init__(self):
        object.__setattr__(self, "exps", _check_exps(self.ring, self.exps))

    def _same(self, other: Monomial):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __mul__(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.ring, tuple(a * k for a in self.exps))

    def divides(self, other: Monomial) -> bool:
        self._same(other)
        return _divides(self.exps, other.exps)

    def lcm(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(self.ring, tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(self.ring, tuple(map(min, self.exps, other.exps)))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, a in zip(self.ring.vars, self.exps) if a)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def __str__(self):
        return _mono_str(self.ring, self.exps)

    def __repr__(self):
        return f"Monomial({self})"


class MonomialIdeal:
    """A monomial ideal, held as its minimal generators G(I).

    Instances are immutable and compare equal iff their rings and canonical
    generator tuples agree.
    """

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int] | Monomial] = ()):
        exps = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.ring != ring:
                    raise RingMismatchError(f"generator {g} lives in {g.ring!r}, not {ring!r}")
                exps.append(g.exps)
            else:
                exps.append(_check_exps(ring, g))
        self._set(ring, minimal_exps(exps))

    def _set(self, ring, gens):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_minimal(cls, ring: Ring, gens: tuple[Exps, ...]) -> MonomialIdeal:
        obj = object.__new__(cls)
        obj._set(ring, gens)
        return obj

    @classmethod
    def _build(cls, ring: Ring, exps: Iterable[Exps]) -> MonomialIdeal:
        gens = minimal_exps(exps)
        for g in gens:
            if g and max(g) > MAX_EXPONENT:
                raise OverflowError(f"exponent overflow in generator {g}")
        return cls._from_minimal(ring, gens)

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls._from_minimal(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls._from_minimal(ring, ((0,) * len(ring),))

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(self.ring, g) for g in self.gens]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.gens)))
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __contains__(self, f: Monomial) -> bool:
        return contains(self, f)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        return contains_ideal(other, self)

    def __str__(self):
        return "(" + ", ".join(_mono_str(self.ring, g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by a nonempty set of ring variables."""

    ring: Ring
    vars: tuple[str, ...]

    def __post_init__(self):
        names = set(self.vars)
        if not names:
            raise ValueError("a monomial prime needs at least one variable")
        object.__setattr__(self, "vars", tuple(v for v in self.ring.vars if v in names))
        if len(self.vars) != len(names):
            missing = names - set(self.ring.vars)
            raise KeyError(f"variables {sorted(missing)} not in {self.ring!r}")

    @classmethod
    def maximal(cls, ring: Ring) -> MonomialPrime:
        return cls(ring, ring.vars)

    @property
    def names(self) -> frozenset[str]:
        return frozenset(self.vars)

    def indices(self) -> tuple[int, ...]:
        return tuple(self.ring.index(v) for v in self.vars)

    def sort_key(self):
        return (len(self.vars), self.indices())

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [self.ring.var(v).exps for v in self.vars])

    def over(self, ring: Ring) -> MonomialPrime:
        return MonomialPrime(ring, self.vars)

    def __le__(self, other: MonomialPrime) -> bool:
        return set(self.vars) <= set(other.vars)

    def __lt__(self, other: MonomialPrime) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "(" + ", ".join(self.vars) + ")"

    def __repr__(self):
        return f"MonomialPrime{self}"


def sorted_primes(primes: Iterable[MonomialPrime]) -> tuple[MonomialPrime, ...]:
    return tuple(sorted(set(primes), key=MonomialPrime.sort_key))


def _same_ring(*ideals: MonomialIdeal) -> Ring:
    ring = ideals[0].ring
    for J in ideals[1:]:
        if J.ring != ring:
            raise RingMismatchError(f"{ring!r} vs {J.ring!r}")
    return ring


def minimalize(gens: Iterable[Monomial], ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(*ideals)
    return MonomialIdeal._build(ring, (g for J in ideals for g in J.gens))


def disjoint_supports(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when I and J are generated in disjoint sets of variables."""
    _same_ring(I, J)
    return not set(support(I)) & set(support(J))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal._build(
        ring, (tuple(a + b for a, b in zip(u, v)) for u in I.gens for v in J.gens)
    )


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by repeated multiplication; I^0 is the unit ideal."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return MonomialIdeal.unit(I.ring)
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def _lcm(u: Exps, v: Exps) -> Exps:
    return tuple(a if a >= b else b for a, b in zip(u, v))


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(*ideals)

    def meet(I, J):
        return MonomialIdeal._build(ring, (_lcm(u, v) for u in I.gens for v in J.gens))

    return reduce(meet, ideals)


def _colon_exps(gens: tuple[Exps, ...], f: Exps) -> tuple[Exps, ...]:
    return minimal_exps(tuple(a - b if a > b else 0 for a, b in zip(u, f)) for u in gens)


def colon(I: MonomialIdeal, J: MonomialIdeal | Monomial) -> MonomialIdeal:
    """(I : J) for a monomial ideal or a single monomial J."""
    if isinstance(J, Monomial):
        if J.ring != I.ring:
            raise RingMismatchError(f"{I.ring!r} vs {J.ring!r}")
        return MonomialIdeal._from_minimal(I.ring, _colon_exps(I.gens, J.exps))
    ring = _same_ring(I, J)
    if J.is_zero():
        raise IdealError("colon by the zero ideal")
    parts = [MonomialIdeal._from_minimal(ring, _colon_exps(I.gens, v)) for v in J.gens]
    return intersect(*parts)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._build(I.ring, (tuple(1 if a else 0 for a in g) for g in I.gens))


def contains(I: MonomialIdeal, f: Monomial) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"{I.ring!r} vs {f.ring!r}")
    return exps_in(I.gens, f.exps)


def exps_in(gens: tuple[Exps, ...], e: Exps) -> bool:
    for g in gens:
        if _divides(g, e):
            return True
    return False


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when J is a subset of I."""
    _same_ring(I, J)
    return all(exps_in(I.gens, v) for v in J.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I.gens == J.gens


def support(I: MonomialIdeal) -> tuple[str, ...]:
    used = [any(g[i] for g in I.gens) for i in range(len(I.ring))]
    return tuple(v for v, u in zip(I.ring.vars, used) if u)


def lcm_gens(I: MonomialIdeal) -> Monomial:
    if I.is_zero():
        raise IdealError("lcm of generators of the zero ideal is undefined")
    return Monomial(I.ring, reduce(_lcm, I.gens))


def embed(I: MonomialIdeal, ring: Ring) -> MonomialIdeal:
    """The same generators viewed in a ring containing every variable of I's ring."""
    pos = [ring.index(v) for v in I.ring.vars]
    out = []
    for g in I.gens:
        e = [0] * len(ring)
        for i, a in zip(pos, g):
            e[i] = a
        out.append(tuple(e))
    return MonomialIdeal._build(ring, out)


def rename(I: MonomialIdeal, names: Sequence[str]) -> MonomialIdeal:
    """Relabel the ring's variables positionally."""
    ring = Ring(tuple(names))
    if len(ring) != len(I.ring):
        raise ValueError("rename needs one new name per variable")
    return MonomialIdeal._from_minimal(ring, I.gens)


def require_proper_nonzero(I: MonomialIdeal, what: str = "operation"):
    if I.is_zero():
        raise IdealError(f"{what} needs a nonzero ideal")
    if I.is_unit():
        raise IdealError(f"{what} needs a proper ideal")
