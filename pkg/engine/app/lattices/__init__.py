"""Finite posets and lattices."""

from .automorphisms import lattice_automorphisms
from .birkhoff import DownsetLattice, birkhoff_embed, downset_lattice, join_irreducible_poset
from .lattice import (
    FiniteLattice,
    boolean_lattice,
    chain_lattice,
    diamond_lattice,
    divisor_lattice,
    is_distributive,
    join_irreducibles,
    lattice_from_poset,
    sublattice_generated,
    sublattices_containing_bounds,
)
from .poset import FinitePoset
from .realization import cayley_digraph_poset, realize_group_as_lattice

__all__ = [
    "FinitePoset",
    "FiniteLattice",
    "DownsetLattice",
    "birkhoff_embed",
    "boolean_lattice",
    "cayley_digraph_poset",
    "chain_lattice",
    "diamond_lattice",
    "divisor_lattice",
    "downset_lattice",
    "is_distributive",
    "join_irreducible_poset",
    "join_irreducibles",
    "lattice_automorphisms",
    "lattice_from_poset",
    "realize_group_as_lattice",
    "sublattice_generated",
    "sublattices_containing_bounds",
]
