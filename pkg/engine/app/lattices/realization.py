"""Realizing a finite group as the automorphism group of a distributive lattice."""

from typing import List, Tuple

from .birkhoff import DownsetLattice
from .poset import FinitePoset
from ..config import get_settings
from ..groups.base import FiniteGroup
from ..groups.isomorphism import GroupLike, as_finite_group, is_isomorphic, symmetric_degree
from ..groups.permgroup import PermGroup
from ..utils.exceptions import CapExceededError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def cayley_digraph_poset(G: FiniteGroup, gens: List[int]) -> FinitePoset:
    """
    Encode the colored Cayley digraph of ``G`` as a poset.

    Minimal elements are the group elements. For a generator of color ``c``
    (1-based) every edge gets a marker element with a chain of ``c - 1``
    elements above it:

    - an involution ``s`` joins ``u`` and ``u*s`` by one element ``e > u, u*s``;
    - otherwise ``u -> u*s`` becomes ``a > u*s`` and ``b > a, u``, and the
      chain sits above ``b``.

    Order automorphisms of the result are exactly the color-preserving
    digraph automorphisms, i.e. left multiplications.
    """
    labels = [f"v{G.label(g)}" for g in range(G.order)]
    relations: List[Tuple[int, int]] = []

    def new(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    for color, s in enumerate(gens, start=1):
        involution = G.mul(s, s) == 0
        for u in range(G.order):
            w = G.mul(u, s)
            if involution:
                if w < u:
                    continue
                tag = f"{G.label(u)}-{G.label(w)}"
                top = new(f"e[{tag}]")
                relations += [(u, top), (w, top)]
            else:
                tag = f"{G.label(u)}>{G.label(w)}"
                a = new(f"a[{tag}]")
                top = new(f"b[{tag}]")
                relations += [(w, a), (a, top), (u, top)]
            for step in range(color - 1):
                above = new(f"c{color}.{step}[{tag}]")
                relations.append((top, above))
                top = above
    return FinitePoset.from_covers(labels, relations)


def realization_candidates(G: FiniteGroup) -> List[Tuple[str, FinitePoset]]:
    """Candidate posets of join-irreducibles, smallest construction first."""
    candidates = []
    k = symmetric_degree(G)
    if k is not None:
        candidates.append((f"boolean_lattice({k})", FinitePoset.antichain(k)))
    candidates.append(("cayley_gadget", cayley_digraph_poset(G, G.minimal_generating_set())))
    return candidates


def realize_group_as_lattice(group: GroupLike, cap: int = None) -> DownsetLattice:
    """
    A distributive lattice whose automorphism group is isomorphic to ``group``.

    Tries the boolean lattice B_k when the group is S_k, then the Cayley
    digraph gadget. The lattice is the down-set lattice of the candidate
    poset and its automorphisms are those of the poset, so every candidate
    is verified on the poset without enumerating the lattice.

    Args:
        group: PermGroup or concrete group
        cap: Maximal group order (defaults to the ``cap_realize_order`` setting)

    Raises:
        CapExceededError: If the group is too large
        VerificationError: If no candidate has the right automorphism group
    """
    G = as_finite_group(group)
    cap = cap or get_settings().cap_realize_order
    if G.order > cap:
        raise CapExceededError("group for lattice realization", G.order, cap)
    for name, P in realization_candidates(G):
        perms = P.automorphisms(limit=G.order + 1)
        if len(perms) == G.order and is_isomorphic(PermGroup.from_elements(P.size, perms), G):
            logger.info("realized_group", group=G.describe(), construction=name,
                        join_irreducibles=P.size)
            return DownsetLattice(P)
        logger.warning("realization_candidate_rejected", construction=name, automorphisms=len(perms))
    raise VerificationError(f"no verified lattice realization for {G.describe()}")
