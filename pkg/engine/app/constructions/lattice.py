"""Lattice S-rings: spans of subgroup sums over a sublattice of normal subgroups."""

from typing import Iterable, List, Union

import numpy as np

from ..algebra.element import AlgebraElement, subgroup_product
from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.partition import SchurPartition, labels_to_blocks
from ..algebra.schur_ring import PSRing, SchurRing, sring_closure
from ..algebra.linalg import SpanBasis, span_rank
from ..groups.automorphisms import automorphism_group_generators, is_characteristic
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.subgroups import Subgroup, normal_subgroups, sort_subgroups
from ..lattices.lattice import FiniteLattice, lattice_from_poset, sublattices_containing_bounds
from ..lattices.poset import FinitePoset
from ..utils.exceptions import ConstructionError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class SubgroupLattice:
    """
    A set of normal subgroups closed under intersection and product.

    Raises:
        ConstructionError: If a member is not normal or the set is not closed
    """

    def __init__(self, group: FiniteGroup, subgroups: Iterable[Subgroup]):
        members = {H.key: H for H in subgroups}
        if not members:
            raise ConstructionError("a subgroup lattice needs at least one member")
        self.group = group
        self.subgroups: List[Subgroup] = sort_subgroups(members.values())
        for H in self.subgroups:
            if H.parent is not group:
                raise ConstructionError("subgroup belongs to another group")
            if not H.is_normal():
                raise ConstructionError(f"{H.label()} is not normal", details={"subgroup": H.label()})
        for i, H in enumerate(self.subgroups):
            for K in self.subgroups[i + 1:]:
                for op, J in (("intersection", H.intersection(K)), ("product", H.join(K))):
                    if J.key not in members:
                        raise ConstructionError(
                            f"the {op} of {H.label()} and {K.label()} is missing",
                            details={"pair": [H.label(), K.label()], "operation": op},
                        )

    @classmethod
    def all_normal(cls, group: FiniteGroup) -> "SubgroupLattice":
        return cls(group, normal_subgroups(group))

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    @property
    def contains_trivial(self) -> bool:
        return any(H.is_trivial() for H in self.subgroups)

    @property
    def contains_whole(self) -> bool:
        return any(H.is_whole() for H in self.subgroups)

    def membership(self) -> np.ndarray:
        """``membership[g, k]`` iff ``g`` lies in the k-th subgroup."""
        return np.stack([H.mask for H in self.subgroups], axis=1)

    def to_lattice(self) -> FiniteLattice:
        """The inclusion order on the members, labelled H1, H2, ... in member order."""
        labels = [f"H{i + 1}" for i in range(len(self.subgroups))]
        leq = np.array([[H.issubset(K) for K in self.subgroups] for H in self.subgroups], dtype=bool)
        return lattice_from_poset(FinitePoset(labels, leq))


def check_lattice_properties(L: SubgroupLattice, field: CoefficientField = RATIONALS) -> None:
    """
    Assert the identities every lattice S-ring satisfies, for all pairs of members:
    inverse-closure of each ``H``, ``H o K = (H n K)`` and ``H K = |H n K| (HK)``.

    Raises:
        VerificationError: Naming the first failing identity
    """
    G = L.group
    sums = {H.key: AlgebraElement.of_subgroup(H, field) for H in L}
    for H in L:
        if sums[H.key].inverse_map() != sums[H.key]:
            raise VerificationError(f"{H.label()} is not closed under inversion")
    for i, H in enumerate(L.subgroups):
        for K in L.subgroups[i:]:
            meet = H.intersection(K)
            if sums[H.key].hadamard(sums[K.key]) != AlgebraElement.of_subgroup(meet, field):
                raise VerificationError(f"Hadamard identity fails for {H.label()}, {K.label()}")
            product = sums[H.key] * sums[K.key] if G.order <= 512 else None
            if product is not None and product != subgroup_product(H, K, field):
                raise VerificationError(f"product identity fails for {H.label()}, {K.label()}")


def lattice_partition(L: SubgroupLattice) -> SchurPartition:
    """Basic sets of a lattice S-ring: ``g ~ h`` iff they lie in the same members of L."""
    _, labels = np.unique(L.membership(), axis=0, return_inverse=True)
    return SchurPartition(L.group, labels_to_blocks(np.asarray(labels).reshape(-1)))


def lattice_sring(L: SubgroupLattice, field: CoefficientField = RATIONALS,
                  check: bool = True) -> Union[SchurRing, PSRing]:
    """
    The span of ``{H-bar : H in L}``.

    It is always a central PS-ring and an S-ring exactly when ``1`` and ``G``
    belong to L; in that case the S-ring is returned, otherwise a PSRing.

    Raises:
        ConstructionError: If L is not a valid subgroup lattice
        VerificationError: If a lattice identity fails
    """
    if check:
        check_lattice_properties(L, field)
    if L.contains_trivial and L.contains_whole:
        S = SchurRing(lattice_partition(L), field, name="lattice")
        # subgroup sums are dependent once a member is the union of smaller ones
        rank = span_rank(L.group, field, [AlgebraElement.of_subgroup(H, field) for H in L])
        if S.dimension != rank:
            raise VerificationError(f"lattice S-ring has dimension {S.dimension}, expected the span rank {rank}")
        logger.debug("lattice_sring", group=L.group.describe(), dimension=S.dimension)
        return S
    span = [AlgebraElement.of_subgroup(H, field) for H in L]
    basis = SpanBasis(L.group, field, span)
    result = PSRing(L.group, field, span, basis.dimension,
                    contains_one=basis.contains(AlgebraElement.one(L.group, field)),
                    contains_whole=basis.contains(AlgebraElement.whole(L.group, field)))
    if check and result.is_sring:
        raise VerificationError("span without 1 or G unexpectedly contains both")
    if check and not sring_closure(span + [AlgebraElement.one(L.group, field),
                                           AlgebraElement.whole(L.group, field)]).closed:
        raise VerificationError("adding 1 and G to a lattice span did not give an S-ring")
    return result


def lattice_is_rational(L: SubgroupLattice) -> bool:
    """The lattice S-ring is rational iff every member is characteristic."""
    gens = automorphism_group_generators(L.group)
    return all(is_characteristic(H, L.group, gens) for H in L)


def normal_sublattices(group: FiniteGroup, cap: int = 1 << 20) -> List[SubgroupLattice]:
    """All sublattices of the normal-subgroup lattice that contain 1 and G."""
    normals = sort_subgroups(normal_subgroups(group))
    full = SubgroupLattice(group, normals)
    lattice = full.to_lattice()
    return [SubgroupLattice(group, [normals[i] for i in subset])
            for subset in sublattices_containing_bounds(lattice, cap=cap)]


def divisor_sublattices(n: int, cap: int = 1 << 20) -> List[SubgroupLattice]:
    """Sublattices of the subgroup lattice of Z_n (its divisor lattice) containing 1 and Z_n."""
    return normal_sublattices(CyclicProductGroup.cyclic(n), cap=cap)


def lattice_srings(group: FiniteGroup, field: CoefficientField = RATIONALS) -> List[SchurRing]:
    """Every lattice S-ring built from a bounded sublattice of normal subgroups."""
    return [lattice_sring(L, field, check=False) for L in normal_sublattices(group)]

