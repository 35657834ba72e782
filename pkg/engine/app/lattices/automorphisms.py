"""Automorphism groups of finite lattices."""

from typing import List, Tuple

from .birkhoff import birkhoff_embed, join_irreducible_poset
from .lattice import FiniteLattice
from ..config import get_settings
from ..groups.permgroup import PermGroup
from ..utils.exceptions import CapExceededError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def lattice_automorphisms(L: FiniteLattice, cap: int = None) -> PermGroup:
    """
    All lattice automorphisms as a permutation group on element indices.

    For distributive lattices the search runs on the poset of
    join-irreducibles (automorphisms permute them and are determined by
    them), so the cap bounds ``|J|``; otherwise it runs on all of ``L``.

    Args:
        L: The lattice
        cap: Search cap (defaults to the ``cap_lattice_automorphisms`` setting)

    Returns:
        PermGroup with every automorphism materialized

    Raises:
        CapExceededError: If the searched poset exceeds the cap
    """
    cap = cap or get_settings().cap_lattice_automorphisms
    if L.distributive:
        perms = _distributive_automorphisms(L, cap)
    else:
        if L.size > cap:
            raise CapExceededError("lattice for automorphism search", L.size, cap)
        perms = L.poset.automorphisms()
    logger.debug("lattice_automorphisms", size=L.size, count=len(perms))
    return PermGroup.from_elements(L.size, perms)


def _distributive_automorphisms(L: FiniteLattice, cap: int) -> List[Tuple[int, ...]]:
    J = L.join_irreducibles
    if len(J) > cap:
        raise CapExceededError("join-irreducibles for automorphism search", len(J), cap)
    phi = birkhoff_embed(L)
    element_of = {downset: x for x, downset in phi.items()}
    auts = join_irreducible_poset(L).automorphisms()
    perms = []
    for alpha in auts:
        # alpha permutes positions in J; transport it to element indices
        moved = {J[i]: J[alpha[i]] for i in range(len(J))}
        perms.append(tuple(element_of[frozenset(moved[j] for j in phi[x])] for x in range(L.size)))
    return perms
