"""Tuples, types, regular subgroups and characteristic-subgroup lattices of abelian p-groups."""

from .charlattice import CharLattice, char_lattice
from .classes import (
    automorphism_class,
    automorphism_classes_by_tuple,
    canonical_type_array,
    regular_subgroup,
    regular_subgroup_mask,
    type_array,
    type_set,
)
from .signature import LambdaSignature
from .tuples import (
    PTuple,
    canonical_tuples,
    canonicalize,
    check_range,
    count_classes,
    is_canonical,
    psi_embed,
    psi_signature,
    tuple_join,
    tuple_label,
    tuple_leq,
    tuple_meet,
    tuple_weight,
)

__all__ = [
    "CharLattice",
    "LambdaSignature",
    "PTuple",
    "automorphism_class",
    "automorphism_classes_by_tuple",
    "canonical_tuples",
    "canonical_type_array",
    "canonicalize",
    "char_lattice",
    "check_range",
    "count_classes",
    "is_canonical",
    "psi_embed",
    "psi_signature",
    "regular_subgroup",
    "regular_subgroup_mask",
    "tuple_join",
    "tuple_label",
    "tuple_leq",
    "tuple_meet",
    "tuple_weight",
    "type_array",
    "type_set",
]
