"""Distinct but Cayley-isomorphic S-rings over non-cyclic groups."""

from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.partition import SchurPartition
from ..algebra.schur_ring import SchurRing
from ..groups.automorphisms import (
    GroupAutomorphism,
    automorphism_group_generators,
    moving_automorphism,
    noncharacteristic_subgroup,
)
from ..groups.base import FiniteGroup
from ..groups.subgroups import Subgroup
from ..utils.exceptions import CyclicGroupError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class ConversePair:
    """Two S-rings ``F{1, H, G}`` and ``F{1, phi(H), G}`` with the automorphism relating them."""

    first: SchurRing
    second: SchurRing
    subgroup: Subgroup
    image: Subgroup
    automorphism: GroupAutomorphism

    def block_map(self) -> List[int]:
        """Basic set ``i`` of ``first`` goes to basic set ``block_map()[i]`` of ``second`` under phi."""
        images = self.automorphism.images
        return [int(self.second.block_of(int(images[T[0]]))) for T in self.first.blocks]

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.first.group.describe(),
            "subgroup": self.subgroup.elements.tolist(),
            "image": self.image.elements.tolist(),
            "automorphism": self.automorphism.images.tolist(),
            "first": [T.tolist() for T in self.first.blocks],
            "second": [T.tolist() for T in self.second.blocks],
            "block_map": self.block_map(),
        }


def _subgroup_sring(H: Subgroup, field: CoefficientField, name: str) -> SchurRing:
    G = H.parent
    outside = np.flatnonzero(~H.mask)
    blocks = [np.array([0]), H.elements[H.elements != 0], outside]
    return SchurRing(SchurPartition(G, blocks), field, name=name)


def conv_pair(group: FiniteGroup, field: CoefficientField = RATIONALS) -> ConversePair:
    """
    Build two distinct S-rings over a non-cyclic group that an automorphism of
    the group carries onto each other.

    A non-characteristic subgroup H and an automorphism phi moving it give
    ``S1 = F{1, H, G}`` and ``S2 = F{1, phi(H), G}``.

    Raises:
        CyclicGroupError: If the group is cyclic (all its S-rings are rigid)
        VerificationError: If the two S-rings coincide or phi does not map one onto the other
    """
    if group.is_cyclic():
        raise CyclicGroupError(f"{group.describe()} is cyclic; distinct S-rings over it are never isomorphic")
    H = noncharacteristic_subgroup(group)
    phi = moving_automorphism(H, automorphism_group_generators(group))
    K = Subgroup(group, phi.images[H.elements])
    first = _subgroup_sring(H, field, "conv-H")
    second = _subgroup_sring(K, field, "conv-phi(H)")
    if first.fingerprint() == second.fingerprint():
        raise VerificationError("phi(H) = H; the pair is not distinct")
    pair = ConversePair(first, second, H, K, phi)
    for T, j in zip(first.blocks, pair.block_map()):
        if not np.array_equal(np.sort(phi.images[T]), second.blocks[j]):
            raise VerificationError("phi does not map basic sets onto basic sets")
    logger.info("conv_pair", group=group.describe(), subgroup=H.order)
    return pair
