"""Realizing a finite group as the automorphism group of a rational S-ring over an abelian p-group."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from sympy import isprime

from .sring import aut_sring, block_action
from .symbolic import aut_symbolic_lattice_sring
from ..config import get_settings
from ..constructions.symbolic_lattice import SymbolicLatticeSRing, symbolic_lattice_sring
from ..groups.isomorphism import GroupLike, as_finite_group, find_isomorphism, is_isomorphic
from ..groups.permgroup import PermGroup
from ..lattices.birkhoff import birkhoff_embed
from ..lattices.lattice import FiniteLattice
from ..lattices.realization import realize_group_as_lattice
from ..ptuple.classes import regular_subgroup_mask
from ..ptuple.signature import LambdaSignature
from ..ptuple.tuples import PTuple, psi_embed, psi_signature, tuple_label
from ..utils.exceptions import SchurRingError, UnsupportedPrimeError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class Realization:
    """Everything produced while realizing a group, with the verification outcomes."""

    group_description: str
    group_order: int
    lattice: FiniteLattice
    join_irreducibles: List[int]
    signature: LambdaSignature
    nodes: List[PTuple]
    sring: SymbolicLatticeSRing
    aut: PermGroup
    iso_witness: List[int]
    concrete_crosscheck: bool
    concrete_aut_order: Optional[int] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "input_group": self.group_description,
            "group_order": self.group_order,
            "lattice": {"dot": self.lattice.to_dot("D"), "json": self.lattice.to_json()},
            "join_irreducibles": len(self.join_irreducibles),
            "signature": self.signature.describe(),
            "nodes": [tuple_label(a) for a in self.nodes],
            "sring_dimension": self.sring.dimension,
            "aut_order": self.aut.order,
            "aut_generators": [list(g) for g in self.aut.minimal_generators()],
            "iso_witness": self.iso_witness,
            "concrete_crosscheck": self.concrete_crosscheck,
            "concrete_aut_order": self.concrete_aut_order,
        }


def lattice_nodes(D: FiniteLattice, sig: LambdaSignature) -> List[PTuple]:
    """``psi(phi(x))`` for every ``x`` in D, in element order."""
    J = D.join_irreducibles
    position = {j: k + 1 for k, j in enumerate(J)}
    phi = birkhoff_embed(D)
    return [psi_embed(sig, [position[j] for j in phi[x]]) for x in range(D.size)]


def concrete_crosscheck(S: SymbolicLatticeSRing, symbolic_aut: PermGroup) -> Tuple[bool, int]:
    """
    Instantiate the S-ring over the concrete group and compare automorphisms.

    Both groups must be isomorphic and induce the same permutations of the
    subgroups ``R(a)``.

    Returns:
        ``(agrees, concrete automorphism group order)``
    """
    concrete = S.concrete()
    aut = aut_sring(concrete)
    members = [np.flatnonzero(regular_subgroup_mask(a, concrete.group)) for a in S.nodes]
    actions = block_action(concrete, aut, members)
    symbolic_actions = sorted(set(tuple(perm) for perm in symbolic_aut.elements))
    agrees = aut.order == symbolic_aut.order and actions == symbolic_actions
    if agrees and aut.order <= get_settings().cap_isomorphism_order:
        agrees = is_isomorphic(aut, symbolic_aut)
    return agrees, aut.order


def realize_group(group: GroupLike, p: int, crosscheck: Optional[bool] = None) -> Realization:
    """
    Build a rational S-ring over an abelian p-group whose automorphism group
    is isomorphic to ``group``.

    The group is first realized as the automorphism group of a distributive
    lattice D with n join-irreducibles. D embeds into the characteristic
    subgroup lattice of ``Z_p x Z_p^3 x ... x Z_p^(2n-1)``; together with the
    trivial and whole group the image spans a lattice S-ring, whose
    automorphisms are computed and matched against the input.

    Args:
        group: A permutation or concrete group
        p: Odd prime
        crosscheck: Compare with the concrete S-ring; by default whenever
            ``p^(n^2)`` is at most the ``concrete_crosscheck_order`` setting

    Raises:
        UnsupportedPrimeError: If ``p`` is not an odd prime
        CapExceededError: If the group is too large to realize, or its lattice
            has more elements than the ``cap_lattice_elements`` setting
        VerificationError: If any verification fails
    """
    if not isprime(p) or p == 2:
        raise UnsupportedPrimeError(f"realization needs an odd prime, got {p}",
                                    error_code="P_EQUALS_2" if p == 2 else "NOT_PRIME")
    G = as_finite_group(group)
    D = realize_group_as_lattice(G).materialize()
    J = list(D.join_irreducibles)
    n = len(J)
    sig = psi_signature(n, p)
    nodes = lattice_nodes(D, sig)
    if len(set(nodes)) != D.size:
        raise VerificationError("the embedding of D into the tuple lattice is not injective")
    S = symbolic_lattice_sring(sig, nodes)
    aut = aut_symbolic_lattice_sring(S)
    witness = find_isomorphism(aut, G)
    if witness is None:
        raise VerificationError(f"Aut(S) has order {aut.order} and is not isomorphic to the input",
                                details={"aut_order": aut.order, "group_order": G.order})

    if crosscheck is None:
        crosscheck = sig.order <= get_settings().concrete_crosscheck_order
    concrete_order = None
    if crosscheck:
        try:
            agrees, concrete_order = concrete_crosscheck(S, aut)
        except SchurRingError as exc:
            raise VerificationError(f"concrete cross-check failed: {exc.message}", details=exc.details)
        if not agrees:
            raise VerificationError("concrete and symbolic automorphism groups differ",
                                    details={"symbolic": aut.order, "concrete": concrete_order})

    logger.info("realize_group", group=G.describe(), p=p, n=n, dimension=S.dimension,
                aut_order=aut.order, crosscheck=bool(crosscheck))
    return Realization(
        group_description=G.describe(),
        group_order=G.order,
        lattice=D,
        join_irreducibles=J,
        signature=sig,
        nodes=S.nodes,
        sring=S,
        aut=aut,
        iso_witness=[int(x) for x in witness],
        concrete_crosscheck=bool(crosscheck),
        concrete_aut_order=concrete_order,
    )
