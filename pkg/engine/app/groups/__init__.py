"""Finite groups: concrete representations, subgroups and automorphisms."""

from .automorphisms import (
    GroupAutomorphism,
    aut_generators,
    automorphism_classes,
    automorphism_group,
    automorphism_group_generators,
    brute_force_automorphisms,
    is_characteristic,
    moving_automorphism,
    noncharacteristic_subgroup,
    orbits,
    partition_from_labels,
)
from .base import FiniteGroup
from .cayley import CayleyGroup
from .cyclic_product import CyclicProductGroup
from .gf2m import gf2m_additive_group, multiplier_power
from .isomorphism import extend_homomorphism, find_isomorphism, is_abelian, is_isomorphic
from .permgroup import PermGroup
from .subgroups import Subgroup, all_subgroups, is_cyclic, normal_subgroups, quotient

__all__ = [
    "FiniteGroup",
    "CyclicProductGroup",
    "CayleyGroup",
    "PermGroup",
    "Subgroup",
    "GroupAutomorphism",
    "aut_generators",
    "automorphism_classes",
    "automorphism_group",
    "automorphism_group_generators",
    "brute_force_automorphisms",
    "extend_homomorphism",
    "find_isomorphism",
    "gf2m_additive_group",
    "multiplier_power",
    "is_abelian",
    "is_characteristic",
    "is_cyclic",
    "is_isomorphic",
    "moving_automorphism",
    "noncharacteristic_subgroup",
    "normal_subgroups",
    "orbits",
    "partition_from_labels",
    "all_subgroups",
    "quotient",
]
