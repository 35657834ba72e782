"""Base interface for finite groups."""

from abc import ABC, abstractmethod
from collections import deque
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.exceptions import GroupError


class FiniteGroup(ABC):
    """
    Abstract finite group whose elements are the indices ``0 .. order-1``.

    Index 0 is always the identity. Concrete groups supply vectorized
    multiplication and inversion; everything else is derived here.
    """

    identity: int = 0

    @property
    @abstractmethod
    def order(self) -> int:
        """Return the number of group elements."""
        pass

    @abstractmethod
    def mul_array(self, a: Any, b: Any) -> np.ndarray:
        """
        Multiply index arrays elementwise (numpy broadcasting applies).

        Args:
            a: Left factors (int or index array)
            b: Right factors (int or index array)

        Returns:
            Index array of products ``a[i] * b[i]``
        """
        pass

    @abstractmethod
    def _inverse_array(self) -> np.ndarray:
        """Compute the inverse of every element."""
        pass

    @abstractmethod
    def label(self, g: int) -> str:
        """Human readable label of an element."""
        pass

    @abstractmethod
    def describe(self) -> str:
        """Short description of the group, e.g. ``Z2xZ8``."""
        pass

    def element_json(self, g: int) -> Any:
        """JSON representation of an element."""
        return int(g)

    @cached_property
    def inverses(self) -> np.ndarray:
        """Array of inverses indexed by element."""
        inv = np.asarray(self._inverse_array(), dtype=np.int64)
        inv.setflags(write=False)
        return inv

    def elements(self) -> np.ndarray:
        """All element indices."""
        return np.arange(self.order, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        """Product of two elements."""
        return int(self.mul_array(np.int64(a), np.int64(b)))

    def inv(self, a: int) -> int:
        """Inverse of an element."""
        return int(self.inverses[a])

    def division_array(self, g: int) -> np.ndarray:
        """Return ``x^-1 * g`` for every element ``x``."""
        return self.mul_array(self.inverses, np.int64(g))

    def power_array(self, m: int) -> np.ndarray:
        """Return ``g^m`` for every element ``g`` (negative ``m`` allowed)."""
        base = self.elements() if m >= 0 else self.inverses.copy()
        m = abs(m)
        result = np.zeros(self.order, dtype=np.int64)
        while m:
            if m & 1:
                result = self.mul_array(result, base)
            base = self.mul_array(base, base)
            m >>= 1
        return result

    def power(self, g: int, m: int) -> int:
        """Return ``g^m``."""
        return int(self.power_array(m)[g])

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Array of element orders."""
        orders = np.zeros(self.order, dtype=np.int64)
        orders[0] = 1
        current = self.elements()
        k = 1
        while (orders == 0).any():
            current = self.mul_array(current, self.elements())
            k += 1
            newly = (current == 0) & (orders == 0)
            orders[newly] = k
            if k > self.order:
                raise GroupError("element order computation did not terminate")
        orders.setflags(write=False)
        return orders

    def element_order(self, g: int) -> int:
        """Order of a single element."""
        return int(self.element_orders[g])

    def is_abelian(self) -> bool:
        """True iff all elements commute."""
        els = self.elements()
        return bool(np.array_equal(
            self.mul_array(els[:, None], els[None, :]),
            self.mul_array(els[None, :], els[:, None]),
        ))

    def is_cyclic(self) -> bool:
        """True iff some element has order equal to the group order."""
        return bool((self.element_orders == self.order).any())

    def generated(self, gens: Iterable[int], start: Optional[Iterable[int]] = None) -> np.ndarray:
        """
        Sorted elements of the subgroup generated by ``gens`` (and ``start``).

        Args:
            gens: Generating elements
            start: Elements already known to lie in the subgroup

        Returns:
            Sorted index array of the generated subgroup
        """
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        if start is not None:
            start = np.asarray(list(start), dtype=np.int64)
            seen[start] = True
            frontier = np.unique(np.concatenate([frontier, start]))
        if gens.size == 0:
            return np.flatnonzero(seen)
        while frontier.size:
            products = np.unique(self.mul_array(frontier[:, None], gens[None, :]).ravel())
            frontier = products[~seen[products]]
            seen[frontier] = True
        return np.flatnonzero(seen)

    def greedy_generators(self) -> List[int]:
        """A small generating set picked greedily, highest element order first."""
        return list(self._greedy_generators)

    @cached_property
    def _greedy_generators(self) -> Tuple[int, ...]:
        order = sorted(range(1, self.order), key=lambda g: (-self.element_orders[g], g))
        gens: List[int] = []
        current = np.array([0], dtype=np.int64)
        for g in order:
            if current.size == self.order:
                break
            if not np.isin(g, current):
                gens.append(int(g))
                current = self.generated(gens)
        return tuple(gens)

    def minimal_generating_set(self) -> List[int]:
        """
        Smallest generating set, first in lexicographic element order.

        Intended for small groups only (the search is combinatorial).
        """
        if self.order == 1:
            return []
        candidates = range(1, self.order)
        for size in range(1, self.order):
            for combo in combinations(candidates, size):
                if self.generated(combo).size == self.order:
                    return list(combo)
        raise GroupError("group has no generating set")

    def is_subset_subgroup(self, members: Sequence[int]) -> bool:
        """True iff ``members`` contains the identity and is closed under products."""
        members = np.asarray(members, dtype=np.int64)
        if members.size == 0 or 0 not in members:
            return False
        mask = np.zeros(self.order, dtype=bool)
        mask[members] = True
        return bool(mask[self.mul_array(members[:, None], members[None, :])].all())

    def conjugacy_classes(self) -> List[List[int]]:
        """Conjugacy classes, each sorted, ordered by least element."""
        if self.is_abelian():
            return [[g] for g in range(self.order)]
        els = self.elements()
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for g in range(self.order):
            if seen[g]:
                continue
            conj = np.unique(self.mul_array(self.mul_array(els, np.int64(g)), self.inverses))
            seen[conj] = True
            classes.append([int(x) for x in conj])
        return classes

    def cayley_table(self) -> np.ndarray:
        """Full multiplication table (only sensible for small groups)."""
        els = self.elements()
        return self.mul_array(els[:, None], els[None, :])

    def orbit_closure(self, maps: Sequence[np.ndarray], seeds: Iterable[int]) -> List[int]:
        """Closure of ``seeds`` under the given element permutations."""
        seen = set(int(s) for s in seeds)
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for m in maps:
                y = int(m[x])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()} order={self.order}>"
