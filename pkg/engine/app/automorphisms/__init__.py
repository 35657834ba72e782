"""Automorphisms of S-rings, isomorphism testing and group realization."""

from .realization import Realization, concrete_crosscheck, lattice_nodes, realize_group
from .sring import SRingMorphism, aut_sring, block_action, sring_isomorphisms, tensor_isomorphisms
from .symbolic import aut_symbolic_lattice_sring

__all__ = [
    "Realization",
    "SRingMorphism",
    "aut_sring",
    "aut_symbolic_lattice_sring",
    "block_action",
    "concrete_crosscheck",
    "lattice_nodes",
    "realize_group",
    "sring_isomorphisms",
    "tensor_isomorphisms",
]
