"""Associated primes of powers of monomial ideals and the (co)persistence properties."""

from .closure import in_closure, integral_closure, is_integrally_closed, is_normal, power_closed
from .core import (
    BudgetExceededError,
    IdealError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    RingMismatchError,
    colon,
    contains,
    contains_ideal,
    disjoint_supports,
    ideal_sum,
    intersect,
    power,
    product,
    radical,
    support,
)
from .decompose import (
    IrreducibleComponent,
    PrimaryComponent,
    ass_witness_oracle,
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
    primary_decomposition,
)
from .graphs import SimpleGraph, cover_ideal, cycle, edge_ideal, path
from .parse import ParseError, parse_graph, parse_ideal, render_ideal
from .properties import (
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
from .transforms import contract, delete, depolarize, expand, localize, permute, polarize, scale_by_monomial, weight

__version__ = "0.1.0"
