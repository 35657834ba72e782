"""Subgroups, subgroup enumeration and quotients."""

from functools import cached_property
from typing import Iterable, List, Tuple

import numpy as np

from .base import FiniteGroup
from .cayley import CayleyGroup
from .cyclic_product import CyclicProductGroup
from ..config import get_settings
from ..utils.exceptions import CapExceededError, GroupError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class Subgroup:
    """A subgroup of a parent group, stored as its sorted member indices."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], check: bool = True):
        members = np.unique(np.asarray(list(elements), dtype=np.int64))
        if check and not parent.is_subset_subgroup(members):
            raise GroupError("element set is not a subgroup")
        members.setflags(write=False)
        self.parent = parent
        self._members = members

    @classmethod
    def generated_by(cls, parent: FiniteGroup, gens: Iterable[int]) -> "Subgroup":
        return cls(parent, parent.generated(gens), check=False)

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, [0], check=False)

    @classmethod
    def whole(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, parent.elements(), check=False)

    @property
    def elements(self) -> np.ndarray:
        return self._members

    @property
    def order(self) -> int:
        return int(self._members.size)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self._members] = True
        m.setflags(write=False)
        return m

    @cached_property
    def key(self) -> bytes:
        return self._members.tobytes()

    def contains(self, g: int) -> bool:
        return bool(self.mask[g])

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self._members].all())

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self._members[other.mask[self._members]], check=False)

    def product_set(self, other: "Subgroup") -> np.ndarray:
        """The set ``HK`` of products, sorted."""
        return np.unique(self.parent.mul_array(self._members[:, None], other.elements[None, :]))

    def join(self, other: "Subgroup") -> "Subgroup":
        """Subgroup generated by both."""
        return Subgroup(self.parent, self.parent.generated(other.elements, start=self._members), check=False)

    def is_normal(self) -> bool:
        """Closed under conjugation by every parent element."""
        if self.parent.is_abelian():
            return True
        G = self.parent
        els = G.elements()
        conj = G.mul_array(G.mul_array(els[:, None], self._members[None, :]), G.inverses[:, None])
        return bool(self.mask[conj].all())

    def is_cyclic(self) -> bool:
        return bool((self.parent.element_orders[self._members] == self.order).any())

    def as_group(self) -> Tuple[FiniteGroup, np.ndarray]:
        """
        A standalone group isomorphic to this subgroup, with its embedding.

        For subgroups of a cyclic Z_n the result is Z_k embedded by
        ``x -> (n/k) x``; otherwise a Cayley table on the sorted members.

        Returns:
            ``(group, embedding)`` where ``embedding[i]`` is the parent index
        """
        G = self.parent
        if isinstance(G, CyclicProductGroup) and G.rank == 1:
            k = self.order
            step = G.order // k
            return CyclicProductGroup.cyclic(k), np.arange(k, dtype=np.int64) * step
        members = self._members
        position = np.full(G.order, -1, dtype=np.int64)
        position[members] = np.arange(members.size)
        table = position[G.mul_array(members[:, None], members[None, :])]
        labels = [G.label(g) for g in members]
        return CayleyGroup(table, labels=labels, name=f"<{G.describe()} subgroup {members.size}>"), members.copy()

    def label(self) -> str:
        return "{" + ",".join(self.parent.label(g) for g in self._members) + "}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent.describe()}>"


def cyclic_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """All distinct cyclic subgroups, ordered by (order, members)."""
    found = {}
    for g in range(G.order):
        H = Subgroup.generated_by(G, [g])
        found.setdefault(H.key, H)
    return sort_subgroups(found.values())


def sort_subgroups(subgroups: Iterable[Subgroup]) -> List[Subgroup]:
    """Deterministic order: by subgroup order, then member list."""
    return sorted(subgroups, key=lambda H: (H.order, H.elements.tolist()))


def all_subgroups(G: FiniteGroup, cap: int = None) -> List[Subgroup]:
    """
    Enumerate every subgroup by cyclic extension.

    Starting from the cyclic subgroups, each layer joins every subgroup found
    so far with every cyclic subgroup it does not contain, until no new
    subgroup appears.

    Args:
        G: The group
        cap: Maximal group order (defaults to the ``cap_group_order`` setting)

    Returns:
        Duplicate-free list sorted by order

    Raises:
        CapExceededError: If ``|G|`` exceeds the cap
    """
    cap = cap or get_settings().cap_group_order
    if G.order > cap:
        raise CapExceededError("group for subgroup enumeration", G.order, cap)
    cyclics = cyclic_subgroups(G)
    found = {H.key: H for H in cyclics}
    layer = list(cyclics)
    while layer:
        new_layer = []
        for H in layer:
            for C in cyclics:
                if C.issubset(H):
                    continue
                J = H.join(C)
                if J.key not in found:
                    found[J.key] = J
                    new_layer.append(J)
        layer = new_layer
    result = sort_subgroups(found.values())
    logger.debug("all_subgroups", group=G.describe(), count=len(result))
    return result


def normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    return [H for H in all_subgroups(G) if H.is_normal()]


def is_cyclic(G: FiniteGroup) -> bool:
    return G.is_cyclic()


def quotient(G: FiniteGroup, H: Subgroup) -> Tuple[FiniteGroup, np.ndarray]:
    """
    The quotient group ``G/H`` with its projection.

    For cyclic Z_n the quotient is Z_{n/|H|} with projection ``g -> g mod n/|H|``;
    otherwise a Cayley table on cosets, ordered by least element.

    Returns:
        ``(quotient_group, projection)`` with ``projection[g]`` the coset index

    Raises:
        GroupError: If ``H`` is not normal
    """
    if H.parent is not G:
        raise GroupError("subgroup does not belong to this group")
    if not H.is_normal():
        raise GroupError("quotient requires a normal subgroup")
    if isinstance(G, CyclicProductGroup) and G.rank == 1:
        m = G.order // H.order
        return CyclicProductGroup.cyclic(m), G.elements() % m

    cosets = np.unique(G.mul_array(G.elements()[:, None], H.elements[None, :]).min(axis=1))
    position = np.full(G.order, -1, dtype=np.int64)
    position[cosets] = np.arange(cosets.size)
    projection = position[G.mul_array(G.elements()[:, None], H.elements[None, :]).min(axis=1)]
    table = projection[G.mul_array(cosets[:, None], cosets[None, :])]
    labels = [G.label(r) + "H" for r in cosets]
    return CayleyGroup(table, labels=labels, name=f"{G.describe()}/H{H.order}"), projection
