"""Homomorphism extension and brute-force isomorphism testing."""

from collections import Counter, deque
from typing import List, Optional, Sequence, Union

import numpy as np

from .base import FiniteGroup
from .cayley import CayleyGroup
from .permgroup import PermGroup
from ..config import get_settings
from ..utils.exceptions import CapExceededError
from ..utils.logging import get_logger

logger = get_logger(__name__)

GroupLike = Union[FiniteGroup, PermGroup]


def as_finite_group(group: GroupLike) -> FiniteGroup:
    """Tabulate permutation groups; other groups pass through."""
    if isinstance(group, PermGroup):
        return group.to_cayley()
    return group


def extend_homomorphism(source: FiniteGroup, target: FiniteGroup, gens: Sequence[int],
                        images: Sequence[int], total: bool = True) -> Optional[np.ndarray]:
    """
    Extend ``gens[i] -> images[i]`` to a homomorphism.

    Walks the Cayley graph of ``<gens>`` and checks ``f(x s) = f(x) f(s)``
    along every edge, which forces ``f`` to be multiplicative.

    Args:
        source: Domain group
        target: Codomain group
        gens: Generators in the domain
        images: Their prescribed images
        total: Require ``gens`` to generate the whole domain

    Returns:
        Image array (``-1`` outside ``<gens>`` when ``total`` is False), or
        ``None`` if the assignment does not extend.
    """
    gens = np.asarray(gens, dtype=np.int64)
    images = np.asarray(images, dtype=np.int64)
    mapping = np.full(source.order, -1, dtype=np.int64)
    mapping[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        xs = source.mul_array(np.int64(x), gens)
        ys = target.mul_array(mapping[x], images)
        for xi, yi in zip(xs.tolist(), ys.tolist()):
            if mapping[xi] < 0:
                mapping[xi] = yi
                queue.append(xi)
            elif mapping[xi] != yi:
                return None
    if total and (mapping < 0).any():
        return None
    return mapping


def order_profile(group: FiniteGroup) -> Counter:
    """Multiset of element orders."""
    return Counter(group.element_orders.tolist())


def find_isomorphism(a: GroupLike, b: GroupLike) -> Optional[np.ndarray]:
    """
    Search for an isomorphism ``a -> b`` by generator-image backtracking.

    Candidate images of each generator must have the same element order, and
    every partial assignment must extend consistently over the subgroup the
    assigned generators span.

    Returns:
        Image array of an isomorphism, or ``None``
    """
    A, B = as_finite_group(a), as_finite_group(b)
    cap = get_settings().cap_isomorphism_order
    for g in (A, B):
        if g.order > cap:
            raise CapExceededError("group for isomorphism test", g.order, cap)
    if A.order != B.order or order_profile(A) != order_profile(B):
        return None
    if A.is_abelian() != B.is_abelian():
        return None

    gens = A.greedy_generators()
    if not gens:
        return np.zeros(1, dtype=np.int64)
    candidates = [np.flatnonzero(B.element_orders == A.element_orders[g]).tolist() for g in gens]
    chosen: List[int] = []

    def search(i: int) -> Optional[np.ndarray]:
        if i == len(gens):
            mapping = extend_homomorphism(A, B, gens, chosen)
            if mapping is not None and np.unique(mapping).size == A.order:
                return mapping
            return None
        for c in candidates[i]:
            chosen.append(c)
            partial = extend_homomorphism(A, B, gens[: i + 1], chosen, total=False)
            if partial is not None:
                covered = partial[partial >= 0]
                if np.unique(covered).size == covered.size:
                    found = search(i + 1)
                    if found is not None:
                        return found
            chosen.pop()
        return None

    result = search(0)
    logger.debug("isomorphism_search", order=A.order, found=result is not None)
    return result


def is_isomorphic(a: GroupLike, b: GroupLike) -> bool:
    """
    Decide whether two small groups are isomorphic.

    Abelian groups are decided by their order profiles; non-abelian groups by
    generator-image search.

    Raises:
        CapExceededError: If either order exceeds the isomorphism cap
    """
    A, B = as_finite_group(a), as_finite_group(b)
    cap = get_settings().cap_isomorphism_order
    for g in (A, B):
        if g.order > cap:
            raise CapExceededError("group for isomorphism test", g.order, cap)
    if A.order != B.order:
        return False
    if A.is_abelian() and B.is_abelian():
        return order_profile(A) == order_profile(B)
    return find_isomorphism(A, B) is not None


def is_abelian(group: GroupLike) -> bool:
    """Abelianness of a permutation or concrete group."""
    return group.is_abelian()


def symmetric_degree(group: GroupLike, max_degree: int = 4) -> Optional[int]:
    """Return ``k`` if the group is isomorphic to S_k for ``1 <= k <= max_degree``."""
    G = as_finite_group(group)
    factorial = 1
    for k in range(1, max_degree + 1):
        factorial *= k
        if factorial == G.order and is_isomorphic(G, CayleyGroup.symmetric(k)):
            return k
    return None
