"""Automorphisms of symbolic lattice S-rings via their node lattices."""

from typing import Optional

from ..config import get_settings
from ..constructions.symbolic_lattice import SymbolicLatticeSRing
from ..groups.permgroup import PermGroup
from ..lattices.automorphisms import lattice_automorphisms
from ..utils.logging import get_logger

logger = get_logger(__name__)


def aut_symbolic_lattice_sring(S: SymbolicLatticeSRing, cap: Optional[int] = None) -> PermGroup:
    """
    Size-preserving automorphisms of the node lattice, acting on node indices.

    Each one sends ``R(a)`` to ``R(sigma(a))`` and these are exactly the
    automorphisms of the S-ring.

    Args:
        S: The symbolic lattice S-ring
        cap: Cap on join-irreducibles searched (defaults to the larger of the
            ``cap_lattice_automorphisms`` setting and the lattice's own count)
    """
    L = S.node_lattice
    cap = cap or max(get_settings().cap_lattice_automorphisms, len(L.join_irreducibles))
    weights = S.weights()
    lattice_group = lattice_automorphisms(L, cap=cap)
    kept = [perm for perm in lattice_group.elements
            if all(weights[perm[i]] == weights[i] for i in range(L.size))]
    group = PermGroup.from_elements(L.size, kept)
    logger.debug("aut_symbolic_lattice_sring", signature=S.sig.describe(), nodes=L.size,
                 lattice_automorphisms=lattice_group.order, order=group.order)
    return group
