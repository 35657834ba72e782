"""Birkhoff duality between finite posets and finite distributive lattices."""

from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional

import numpy as np

from .lattice import FiniteLattice
from .poset import FinitePoset
from ..config import get_settings
from ..groups.permgroup import PermGroup
from ..utils.exceptions import NotDistributiveError


def birkhoff_embed(L: FiniteLattice) -> Dict[int, FrozenSet[int]]:
    """
    The map ``x -> {j in J : j <= x}`` into subsets of join-irreducibles.

    Args:
        L: A distributive lattice

    Returns:
        Mapping from element index to the frozenset of join-irreducible indices below it

    Raises:
        NotDistributiveError: If ``L`` is not distributive
    """
    if not L.distributive:
        raise NotDistributiveError("Birkhoff embedding requires a distributive lattice")
    J = L.join_irreducibles
    leq = L.leq
    return {x: frozenset(j for j in J if leq[j, x]) for x in range(L.size)}


def downset_lattice(P: FinitePoset, cap: int = None) -> FiniteLattice:
    """
    Lattice of order ideals of ``P`` under inclusion.

    Ideals are listed by (size, bitmask); meet is intersection and join is union.

    Args:
        P: The poset
        cap: Maximal number of ideals (defaults to the ``cap_lattice_elements`` setting)

    Raises:
        CapExceededError: If ``P`` has more ideals than the cap; raised while
            enumerating, before any table is allocated
    """
    cap = cap or get_settings().cap_lattice_elements
    ideals = P.downsets(cap)
    labels = ["{" + ",".join(P.labels[i] for i in range(P.size) if m >> i & 1) + "}" for m in ideals]
    n = len(ideals)
    if P.size <= 62:
        masks = np.array(ideals, dtype=np.int64)
        order = np.argsort(masks)
        sorted_masks = masks[order]

        def lookup(values: np.ndarray) -> np.ndarray:
            return order[np.searchsorted(sorted_masks, values)]

        leq = (masks[:, None] & ~masks[None, :]) == 0
        meet = lookup(masks[:, None] & masks[None, :])
        join = lookup(masks[:, None] | masks[None, :])
    else:
        index = {m: i for i, m in enumerate(ideals)}
        leq = np.array([[a & ~b == 0 for b in ideals] for a in ideals], dtype=bool).reshape(n, n)
        meet = np.array([[index[a & b] for b in ideals] for a in ideals], dtype=np.int64).reshape(n, n)
        join = np.array([[index[a | b] for b in ideals] for a in ideals], dtype=np.int64).reshape(n, n)
    return FiniteLattice(FinitePoset(labels, leq, check=False), meet, join, distributive=True)


def join_irreducible_poset(L: FiniteLattice) -> FinitePoset:
    """The subposet of join-irreducible elements, in ``L.join_irreducibles`` order."""
    return L.poset.induced(L.join_irreducibles)


class DownsetLattice:
    """
    The distributive lattice of order ideals of a poset, kept implicit.

    Ideals are bitmasks over poset indices and are enumerated only on request.
    The principal ideals are the join-irreducibles, so every lattice
    automorphism is an automorphism of the poset and vice versa.

    Attributes:
        poset: The poset of join-irreducibles
    """

    distributive = True

    def __init__(self, poset: FinitePoset):
        self.poset = poset

    @property
    def join_irreducible_count(self) -> int:
        return self.poset.size

    def ideals(self, cap: Optional[int] = None) -> List[int]:
        """
        Every ideal as a bitmask, by (size, bitmask).

        Raises:
            CapExceededError: Above ``cap`` ideals (defaults to the ``cap_downsets`` setting)
        """
        return self.poset.downsets(cap or get_settings().cap_downsets)

    @cached_property
    def size(self) -> int:
        return len(self.ideals())

    def automorphisms(self, limit: Optional[int] = None) -> PermGroup:
        """
        The automorphism group acting on join-irreducibles (poset indices).

        Args:
            limit: Stop the search after this many automorphisms
        """
        return PermGroup.from_elements(self.poset.size, self.poset.automorphisms(limit=limit))

    def materialize(self, cap: Optional[int] = None) -> FiniteLattice:
        """The explicit lattice (see ``downset_lattice``)."""
        return downset_lattice(self.poset, cap)

    def to_dot(self, name: str = "J") -> str:
        """Hasse diagram of the join-irreducibles."""
        return self.poset.to_dot(name)

    def to_json(self) -> Dict[str, Any]:
        return {"join_irreducibles": self.poset.to_json()}

    def __repr__(self) -> str:
        return f"<DownsetLattice join_irreducibles={self.poset.size}>"
