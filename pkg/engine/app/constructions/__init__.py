"""S-ring constructions: lattice, cyclotomic, dot and wedge products, enumeration and converse pairs."""

from .base import ConstructionRegistry, SRingConstruction, construction_registry
from .basic import cyclotomic, cyclotomic_by_units, full_algebra, multiplier_automorphism, trivial
from .builders import default_constructions
from .converse import ConversePair, conv_pair
from .enumeration import (
    enumerate_cyclic_srings,
    exhaustive_srings,
    set_partitions,
    srings_from_class_partitions,
    unit_orbit_partition,
    unit_subgroups,
)
from .lattice import (
    SubgroupLattice,
    check_lattice_properties,
    divisor_sublattices,
    lattice_is_rational,
    lattice_partition,
    lattice_sring,
    lattice_srings,
    normal_sublattices,
)
from .products import cyclic_dot_product, dot_product, wedge_product
from .symbolic_lattice import SymbolicLatticeSRing, symbolic_lattice_sring

for _construction in default_constructions():
    construction_registry.register(_construction)

__all__ = [
    "ConstructionRegistry",
    "ConversePair",
    "SRingConstruction",
    "SubgroupLattice",
    "SymbolicLatticeSRing",
    "check_lattice_properties",
    "construction_registry",
    "conv_pair",
    "cyclic_dot_product",
    "cyclotomic",
    "cyclotomic_by_units",
    "divisor_sublattices",
    "dot_product",
    "enumerate_cyclic_srings",
    "exhaustive_srings",
    "full_algebra",
    "lattice_is_rational",
    "lattice_partition",
    "lattice_sring",
    "lattice_srings",
    "multiplier_automorphism",
    "normal_sublattices",
    "set_partitions",
    "srings_from_class_partitions",
    "symbolic_lattice_sring",
    "trivial",
    "unit_orbit_partition",
    "unit_subgroups",
    "wedge_product",
]
