"""Algebraic automorphisms and isomorphisms of S-rings as structure-constant-preserving block maps."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..algebra.element import AlgebraElement
from ..algebra.schur_ring import SchurRing
from ..config import get_settings
from ..groups.permgroup import PermGroup
from ..utils.exceptions import CapExceededError, FieldMismatchError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SRingMorphism:
    """Basic set ``i`` of ``source`` goes to basic set ``mapping[i]`` of ``target``."""

    source: SchurRing
    target: SchurRing
    mapping: Tuple[int, ...]

    def image_block(self, i: int) -> np.ndarray:
        return self.target.blocks[self.mapping[i]]

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        """The image of an element of the source S-ring.

        Raises:
            VerificationError: If ``x`` is not in the source
        """
        coords = self.source.coordinates(x)
        if coords is None:
            raise VerificationError("element is not in the source S-ring")
        result = AlgebraElement.zero(self.target.group, self.target.field)
        for i, c in enumerate(coords):
            if not self.source.field.is_zero(c):
                result = result + self.target.basis()[self.mapping[i]].scale(c)
        return result

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(len(self.mapping)))

    def to_json(self) -> Dict[str, Any]:
        return {"mapping": list(self.mapping),
                "blocks": [[self.source.blocks[i].tolist(), self.image_block(i).tolist()]
                           for i in range(len(self.mapping))]}


def _block_keys(C: np.ndarray) -> List[tuple]:
    """Per-block invariants of a structure-constant tensor under simultaneous relabelling."""
    b = C.shape[0]
    keys = []
    for i in range(b):
        keys.append((
            int(C[i, i, i]),
            tuple(sorted(C[i].ravel().tolist())),
            tuple(sorted(C[:, :, i].ravel().tolist())),
            tuple(sorted(int(C[i, j, j]) for j in range(b))),
        ))
    return keys


def tensor_isomorphisms(C1: np.ndarray, C2: np.ndarray, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    All bijections ``s`` with ``s(0) = 0`` and ``C2[s(i), s(j), s(k)] = C1[i, j, k]``.

    Blocks are assigned in increasing number of candidates; each new block is
    checked against every triple it forms with the blocks already placed.

    Args:
        C1: Source tensor, shape (b, b, b)
        C2: Target tensor
        limit: Stop after this many maps
    """
    b = C1.shape[0]
    if C2.shape != C1.shape:
        return []
    keys1, keys2 = _block_keys(C1), _block_keys(C2)
    if keys1[0] != keys2[0] or sorted(keys1) != sorted(keys2):
        return []
    candidates = {i: [j for j in range(1, b) if keys2[j] == keys1[i]] for i in range(1, b)}
    order = [0] + sorted(range(1, b), key=lambda i: (len(candidates[i]), i))
    image = np.full(b, -1, dtype=np.int64)
    image[0] = 0
    used = np.zeros(b, dtype=bool)
    used[0] = True
    found: List[Tuple[int, ...]] = []

    def consistent(depth: int) -> bool:
        placed = np.asarray(order[: depth + 1], dtype=np.int64)
        i = order[depth]
        s, si = image[placed], image[i]
        return (np.array_equal(C1[i][np.ix_(placed, placed)], C2[si][np.ix_(s, s)])
                and np.array_equal(C1[placed, i][:, placed], C2[s, si][:, s])
                and np.array_equal(C1[np.ix_(placed, placed, [i])], C2[np.ix_(s, s, [si])]))

    def search(depth: int) -> bool:
        if depth == b:
            found.append(tuple(int(x) for x in image))
            return limit is not None and len(found) >= limit
        i = order[depth]
        for j in candidates[i]:
            if used[j]:
                continue
            image[i] = j
            used[j] = True
            if consistent(depth) and search(depth + 1):
                return True
            used[j] = False
            image[i] = -1
        return False

    if b == 1 or consistent(0):
        search(1)
    return sorted(found)


def _check_caps(*rings: SchurRing, cap: Optional[int] = None) -> None:
    cap = cap or get_settings().cap_blocks
    for S in rings:
        if S.dimension > cap:
            raise CapExceededError("basic sets for automorphism search", S.dimension, cap)


def _assert_sizes(S1: SchurRing, S2: SchurRing, perms: List[Tuple[int, ...]]) -> None:
    # over characteristic 0 sizes are forced; over F_q they need not be
    if S1.field.characteristic != 0:
        return
    for perm in perms:
        if not np.array_equal(S2.sizes[list(perm)], S1.sizes):
            raise VerificationError("a structure-constant-preserving map changes block sizes",
                                    details={"mapping": list(perm)})


def aut_sring(S: SchurRing, cap: Optional[int] = None) -> PermGroup:
    """
    The automorphism group of an S-ring as a permutation group on basic sets.

    Args:
        S: The S-ring
        cap: Maximal number of basic sets (defaults to the ``cap_blocks`` setting)

    Returns:
        PermGroup of degree ``dim S`` with all elements materialized

    Raises:
        CapExceededError: If ``dim S`` exceeds the cap
    """
    _check_caps(S, cap=cap)
    C = S.structure_constants
    perms = tensor_isomorphisms(C, C)
    _assert_sizes(S, S, perms)
    group = PermGroup.from_elements(S.dimension, perms)
    logger.debug("aut_sring", dimension=S.dimension, field=S.field.label, order=group.order)
    return group


def sring_isomorphisms(S1: SchurRing, S2: SchurRing, cap: Optional[int] = None,
                       limit: Optional[int] = None) -> List[SRingMorphism]:
    """
    Every isomorphism between two S-rings, as block bijections.

    An empty list means the S-rings are not isomorphic.

    Raises:
        CapExceededError: If either dimension exceeds the cap
        FieldMismatchError: If the S-rings are over different fields
    """
    if S1.field != S2.field:
        raise FieldMismatchError(f"S-rings over {S1.field} and {S2.field}")
    _check_caps(S1, S2, cap=cap)
    if S1.dimension != S2.dimension or S1.group.order != S2.group.order:
        return []
    perms = tensor_isomorphisms(S1.structure_constants, S2.structure_constants, limit=limit)
    _assert_sizes(S1, S2, perms)
    return [SRingMorphism(S1, S2, perm) for perm in perms]


def block_action(S: SchurRing, aut: PermGroup, members: List[np.ndarray]) -> List[Tuple[int, ...]]:
    """
    How each automorphism permutes a family of unions of basic sets.

    Raises:
        VerificationError: If some image is not in the family
    """
    family = {tuple(np.sort(m).tolist()): k for k, m in enumerate(members)}
    labels = S.partition.labels
    actions = []
    for perm in aut.elements:
        images = []
        for m in members:
            blocks = np.unique(labels[m])
            moved = np.sort(np.concatenate([S.blocks[perm[int(k)]] for k in blocks]))
            key = tuple(moved.tolist())
            if key not in family:
                raise VerificationError("automorphism moves a member outside the family")
            images.append(family[key])
        actions.append(tuple(images))
    return sorted(set(actions))
