"""Partitions of a group into blocks and the Schur-partition axioms."""

from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..groups.base import FiniteGroup
from ..utils.exceptions import NotSchurRingError

Fingerprint = Tuple[Tuple[int, ...], ...]


def sort_blocks(blocks: Iterable[Iterable[int]]) -> List[np.ndarray]:
    """Blocks as sorted arrays, ordered by (size, least element)."""
    arrays = [np.unique(np.asarray(list(b), dtype=np.int64)) for b in blocks]
    return sorted(arrays, key=lambda b: (b.size, int(b[0]) if b.size else -1))


def labels_to_blocks(labels: np.ndarray) -> List[np.ndarray]:
    """Group elements by label value."""
    labels = np.asarray(labels)
    order = np.argsort(labels, kind="stable")
    _, starts = np.unique(labels[order], return_index=True)
    return sort_blocks(np.split(order, starts[1:]))


class SchurPartition:
    """
    An ordered partition ``T_1, ..., T_b`` of a group.

    Blocks are stored sorted by (size, least element), so for a valid Schur
    partition ``T_1 = {1}``. ``labels[g]`` is the block index of ``g``.

    Raises:
        NotSchurRingError: When ``check`` is set and an axiom fails
    """

    def __init__(self, group: FiniteGroup, blocks: Iterable[Iterable[int]], check: bool = True):
        self.group = group
        self.blocks: List[np.ndarray] = sort_blocks(blocks)
        labels = np.full(group.order, -1, dtype=np.int64)
        self._overlap: Optional[int] = None
        for i, block in enumerate(self.blocks):
            if block.size and (labels[block] >= 0).any():
                self._overlap = int(block[labels[block] >= 0][0])
            labels[block] = i
        labels.setflags(write=False)
        self.labels = labels
        if check:
            problem = self.violation()
            if problem is not None:
                raise NotSchurRingError(f"not a Schur partition: {problem}", details={"reason": problem})

    @classmethod
    def from_labels(cls, group: FiniteGroup, labels: Sequence[int], check: bool = True) -> "SchurPartition":
        return cls(group, labels_to_blocks(np.asarray(labels)), check=check)

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "SchurPartition":
        rest = range(1, group.order)
        return cls(group, [[0], rest] if group.order > 1 else [[0]], check=False)

    @classmethod
    def singletons(cls, group: FiniteGroup) -> "SchurPartition":
        return cls(group, [[g] for g in range(group.order)], check=False)

    @property
    def size(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def sizes(self) -> np.ndarray:
        return np.array([b.size for b in self.blocks], dtype=np.int64)

    @cached_property
    def representatives(self) -> np.ndarray:
        return np.array([b[0] for b in self.blocks], dtype=np.int64)

    def block_of(self, g: int) -> int:
        return int(self.labels[g])

    def violation(self) -> Optional[str]:
        """The first failing partition axiom, or None."""
        if any(b.size == 0 for b in self.blocks):
            return "empty block"
        if self._overlap is not None:
            return f"element {self.group.label(self._overlap)} lies in two blocks"
        if (self.labels < 0).any():
            missing = int(np.flatnonzero(self.labels < 0)[0])
            return f"element {self.group.label(missing)} is not covered"
        if self.blocks[0].size != 1 or int(self.blocks[0][0]) != 0:
            return "the identity is not a block of its own"
        if self.inverse_permutation is None:
            return "blocks are not closed under inversion"
        return None

    @cached_property
    def inverse_permutation(self) -> Optional[np.ndarray]:
        """``perm[i] = j`` with ``T_i^(-1) = T_j``, or None if some inverse set is not a block."""
        if (self.labels < 0).any():
            return None
        inv_labels = self.labels[self.group.inverses]
        perm = np.empty(self.size, dtype=np.int64)
        for i, block in enumerate(self.blocks):
            targets = np.unique(inv_labels[block])
            if targets.size != 1 or self.blocks[targets[0]].size != block.size:
                return None
            perm[i] = targets[0]
        return perm

    def fingerprint(self) -> Fingerprint:
        """Sorted tuple of sorted block tuples; equal exactly for equal partitions."""
        return tuple(sorted(tuple(b.tolist()) for b in self.blocks))

    def size_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.sizes.tolist()))

    def refines(self, other: "SchurPartition") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        return all(np.unique(other.labels[b]).size == 1 for b in self.blocks)

    def to_json(self) -> List[List]:
        return [[self.group.element_json(g) for g in b] for b in self.blocks]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SchurPartition) and self.fingerprint() == other.fingerprint()

    def __hash__(self) -> int:
        return hash(self.fingerprint())

    def __repr__(self) -> str:
        return f"<SchurPartition blocks={self.size} of {self.group.describe()}>"
