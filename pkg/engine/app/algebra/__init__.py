"""Group algebras, Schur rings and the symbolic algebra W(G)."""

from .element import AlgebraElement, subgroup_product
from .field import RATIONALS, CoefficientField
from .linalg import KeyedSpan, SpanBasis, intersection_dimension, span_rank
from .partition import SchurPartition, labels_to_blocks, sort_blocks
from .quotient import QuotientMap, lift_pi_prime, project_pi
from .schur_ring import (
    ClosureCheck,
    PSRing,
    SchurRing,
    basic_sets_of_span,
    is_central,
    is_primitive,
    is_psring,
    is_rational,
    is_s_set,
    is_sring,
    power_map_permutation,
    product_closure_witness,
    psring_closure,
    sring_closure,
    subgroup_s_sets,
)
from .symbolic import SymbolicRationalAlgebra, check_symbolic_closure, w_algebra

__all__ = [
    "AlgebraElement",
    "ClosureCheck",
    "CoefficientField",
    "KeyedSpan",
    "PSRing",
    "QuotientMap",
    "RATIONALS",
    "SchurPartition",
    "SchurRing",
    "SpanBasis",
    "SymbolicRationalAlgebra",
    "basic_sets_of_span",
    "check_symbolic_closure",
    "intersection_dimension",
    "is_central",
    "is_primitive",
    "is_psring",
    "is_rational",
    "is_s_set",
    "is_sring",
    "labels_to_blocks",
    "lift_pi_prime",
    "power_map_permutation",
    "product_closure_witness",
    "project_pi",
    "psring_closure",
    "sort_blocks",
    "span_rank",
    "sring_closure",
    "subgroup_product",
    "subgroup_s_sets",
    "w_algebra",
]
