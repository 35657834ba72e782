"""Finite posets stored as boolean order matrices."""

import json
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.exceptions import CapExceededError, LatticeError


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation by repeated squaring."""
    closure = rel.copy() | np.eye(rel.shape[0], dtype=bool)
    while True:
        step = (closure.astype(np.int64) @ closure.astype(np.int64)) > 0
        if np.array_equal(step, closure):
            return closure
        closure = step


class FinitePoset:
    """
    A finite poset: element labels plus a matrix with ``leq[a, b]`` iff ``a <= b``.

    The relation is validated to be reflexive, antisymmetric and transitive.
    """

    def __init__(self, labels: Sequence[str], leq: np.ndarray, check: bool = True):
        leq = np.asarray(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise LatticeError("order matrix does not match the number of labels")
        if check:
            if not leq.diagonal().all():
                raise LatticeError("order relation is not reflexive")
            off = leq & leq.T & ~np.eye(n, dtype=bool)
            if off.any():
                a, b = np.argwhere(off)[0]
                raise LatticeError(f"order relation is not antisymmetric: {labels[a]} and {labels[b]}")
            if n and not np.array_equal(transitive_closure(leq), leq):
                raise LatticeError("order relation is not transitive")
        leq.setflags(write=False)
        self.labels: List[str] = [str(x) for x in labels]
        self.leq = leq

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[Tuple[int, int]]) -> "FinitePoset":
        """Build from covering (or any generating) pairs ``(lower, upper)``."""
        n = len(labels)
        rel = np.zeros((n, n), dtype=bool)
        for a, b in covers:
            rel[a, b] = True
        closure = transitive_closure(rel)
        return cls(labels, closure)

    @classmethod
    def from_relation(cls, labels: Sequence, relation) -> "FinitePoset":
        """Build from a predicate ``relation(x, y)`` meaning ``x <= y``."""
        items = list(labels)
        leq = np.array([[bool(relation(x, y)) for y in items] for x in items], dtype=bool).reshape(len(items), len(items))
        return cls([str(x) for x in items], leq)

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls([str(i) for i in range(n)], np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls([str(i) for i in range(n)], np.eye(n, dtype=bool))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(self.size, dtype=bool)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """``cover[a, b]`` iff ``b`` covers ``a``."""
        lt = self.lt.astype(np.int64)
        return self.lt & ~((lt @ lt) > 0)

    def covers(self) -> List[Tuple[int, int]]:
        """Covering pairs ``(lower, upper)`` in index order."""
        return [(int(a), int(b)) for a, b in np.argwhere(self.cover_matrix)]

    def lower_covers(self, x: int) -> List[int]:
        return np.flatnonzero(self.cover_matrix[:, x]).tolist()

    def upper_covers(self, x: int) -> List[int]:
        return np.flatnonzero(self.cover_matrix[x, :]).tolist()

    @cached_property
    def rank(self) -> np.ndarray:
        """Length of the longest chain from a minimal element up to each element."""
        n = self.size
        rank = np.zeros(n, dtype=np.int64)
        order = np.argsort(self.leq.sum(axis=0), kind="stable")  # fewer elements below first
        for x in order:
            below = np.flatnonzero(self.lt[:, x])
            if below.size:
                rank[x] = rank[below].max() + 1
        rank.setflags(write=False)
        return rank

    def minimal_elements(self) -> List[int]:
        return [x for x in range(self.size) if not self.lt[:, x].any()]

    def maximal_elements(self) -> List[int]:
        return [x for x in range(self.size) if not self.lt[x, :].any()]

    def induced(self, subset: Sequence[int]) -> "FinitePoset":
        """Induced subposet on the given indices (in the given order)."""
        idx = np.asarray(subset, dtype=np.int64)
        return FinitePoset([self.labels[i] for i in idx], self.leq[np.ix_(idx, idx)], check=False)

    def profile(self, x: int) -> Tuple[int, int, int]:
        """Automorphism-invariant profile: (rank, #lower covers, #upper covers)."""
        return (int(self.rank[x]), int(self.cover_matrix[:, x].sum()), int(self.cover_matrix[x, :].sum()))

    def _search_order(self, candidates: dict) -> List[int]:
        adjacent = (self.cover_matrix | self.cover_matrix.T).astype(np.int64)
        weight = np.zeros(self.size, dtype=np.int64)
        remaining = set(range(self.size))
        order: List[int] = []
        while remaining:
            x = min(remaining, key=lambda y: (-weight[y], len(candidates[y]), y))
            order.append(x)
            remaining.discard(x)
            weight += adjacent[x]
        return order

    def automorphisms(self, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
        """
        All order automorphisms by profile-pruned backtracking.

        Elements are assigned along the Hasse diagram, neighbours of assigned
        elements first; each assignment must preserve ``<=`` in both
        directions against everything assigned before.

        Args:
            limit: Stop after this many automorphisms

        Returns:
            Automorphisms as image tuples, sorted
        """
        n = self.size
        profiles = [self.profile(x) for x in range(n)]
        candidates = {x: [y for y in range(n) if profiles[y] == profiles[x]] for x in range(n)}
        order = self._search_order(candidates)
        leq = self.leq
        image = [-1] * n
        used = [False] * n
        assigned: List[int] = []
        found: List[Tuple[int, ...]] = []

        def consistent(x: int, y: int) -> bool:
            for a in assigned:
                b = image[a]
                if leq[a, x] != leq[b, y] or leq[x, a] != leq[y, b]:
                    return False
            return True

        def search(pos: int) -> bool:
            if pos == n:
                found.append(tuple(image))
                return limit is not None and len(found) >= limit
            x = order[pos]
            for y in candidates[x]:
                if used[y] or not consistent(x, y):
                    continue
                image[x] = y
                used[y] = True
                assigned.append(x)
                if search(pos + 1):
                    return True
                assigned.pop()
                used[y] = False
                image[x] = -1
            return False

        search(0)
        return sorted(found)

    def downsets(self, cap: int) -> List[int]:
        """
        All order ideals as bitmasks over element indices.

        Raises:
            CapExceededError: If more than ``cap`` ideals exist
        """
        n = self.size
        below_mask = [sum(1 << int(b) for b in np.flatnonzero(self.leq[:, x])) for x in range(n)]
        ideals = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                for x in range(n):
                    if ideal >> x & 1:
                        continue
                    # x can be added once everything strictly below it is present
                    if below_mask[x] & ~ideal == 1 << x:
                        new = ideal | (1 << x)
                        if new not in ideals:
                            ideals.add(new)
                            nxt.append(new)
            if len(ideals) > cap:
                raise CapExceededError("down-set lattice", len(ideals), cap)
            frontier = nxt
        return sorted(ideals, key=lambda m: (bin(m).count("1"), m))

    def to_dot(self, name: str = "poset") -> str:
        """Graphviz Hasse diagram (covering pairs only, drawn upward)."""
        lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            lines.append(f"  n{i} [label={json.dumps(lab)}];")
        for a, b in self.covers():
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"elements": list(self.labels), "covers": [list(c) for c in self.covers()]}

    def __repr__(self) -> str:
        return f"<FinitePoset size={self.size}>"
