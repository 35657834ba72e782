"""Finite lattices with meet and join tables."""

from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence

import numpy as np
from sympy import divisors

from .poset import FinitePoset
from ..config import get_settings
from ..utils.exceptions import CapExceededError, LatticeError, NotALatticeError


class FiniteLattice:
    """
    A finite lattice: a poset together with meet and join tables.

    Attributes:
        poset: Underlying order
        meet: ``meet[a, b]`` is the index of ``a ^ b``
        join: ``join[a, b]`` is the index of ``a v b``
        bottom: Index of the least element
        top: Index of the greatest element
    """

    def __init__(self, poset: FinitePoset, meet: np.ndarray, join: np.ndarray,
                 distributive: Optional[bool] = None):
        self.poset = poset
        self.meet = np.asarray(meet, dtype=np.int64)
        self.join = np.asarray(join, dtype=np.int64)
        self.meet.setflags(write=False)
        self.join.setflags(write=False)
        leq = poset.leq
        self.bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(leq.all(axis=0))[0])
        if distributive is not None:
            self.__dict__["distributive"] = distributive

    @property
    def size(self) -> int:
        return self.poset.size

    def __len__(self) -> int:
        return self.size

    @property
    def labels(self) -> List[str]:
        return self.poset.labels

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    def index(self, label: str) -> int:
        return self.poset.labels.index(str(label))

    def check_axioms(self) -> None:
        """
        Verify that the tables are the order's bounds, absorption and associativity.

        Raises:
            LatticeError: Naming the first violated law
        """
        leq = self.leq
        n = self.size
        idx = np.arange(n)
        m, j = self.meet, self.join
        if not (leq[m, idx[:, None]].all() and leq[m, idx[None, :]].all()):
            raise LatticeError("meet table is not a lower bound")
        if not (leq[idx[:, None], j].all() and leq[idx[None, :], j].all()):
            raise LatticeError("join table is not an upper bound")
        if not np.array_equal(m[idx[:, None], j], np.broadcast_to(idx[:, None], (n, n))):
            raise LatticeError("absorption a ^ (a v b) = a fails")
        if not np.array_equal(m == idx[:, None], leq):
            raise LatticeError("meet table does not induce the given order")
        if not np.array_equal(m[m[:, :, None], idx[None, None, :]], m[idx[:, None, None], m[None, :, :]]):
            raise LatticeError("meet is not associative")
        if not np.array_equal(j[j[:, :, None], idx[None, None, :]], j[idx[:, None, None], j[None, :, :]]):
            raise LatticeError("join is not associative")

    @cached_property
    def distributive(self) -> bool:
        m, j = self.meet, self.join
        # x ^ (y v z) == (x ^ y) v (x ^ z) for all triples
        idx = np.arange(self.size)
        lhs = m[idx[:, None, None], j[None, :, :]]
        rhs = j[m[:, :, None], m[:, None, :]]
        return bool(np.array_equal(lhs, rhs))

    @cached_property
    def join_irreducibles(self) -> List[int]:
        """Elements with exactly one lower cover, sorted by (rank, index)."""
        cover = self.poset.cover_matrix
        js = [x for x in range(self.size) if cover[:, x].sum() == 1]
        return sorted(js, key=lambda x: (int(self.poset.rank[x]), x))

    def join_of(self, elements: Sequence[int]) -> int:
        result = self.bottom
        for e in elements:
            result = int(self.join[result, e])
        return result

    def meet_of(self, elements: Sequence[int]) -> int:
        result = self.top
        for e in elements:
            result = int(self.meet[result, e])
        return result

    def induced(self, subset: Sequence[int]) -> "FiniteLattice":
        """Induced sublattice on a meet/join-closed subset (kept in the given order)."""
        idx = np.asarray(subset, dtype=np.int64)
        position = np.full(self.size, -1, dtype=np.int64)
        position[idx] = np.arange(idx.size)
        meet = position[self.meet[np.ix_(idx, idx)]]
        join = position[self.join[np.ix_(idx, idx)]]
        if (meet < 0).any() or (join < 0).any():
            raise LatticeError("subset is not closed under meet and join")
        return FiniteLattice(self.poset.induced(idx), meet, join)

    def to_dot(self, name: str = "lattice") -> str:
        return self.poset.to_dot(name)

    def to_json(self) -> dict:
        data = self.poset.to_json()
        data["bottom"] = self.bottom
        data["top"] = self.top
        return data

    def __repr__(self) -> str:
        return f"<FiniteLattice size={self.size}>"


def lattice_from_poset(P: FinitePoset) -> FiniteLattice:
    """
    Compute meet and join tables of a poset that is a lattice.

    Raises:
        NotALatticeError: Naming a pair without a unique meet or join
    """
    n = P.size
    if n == 0:
        raise NotALatticeError("the empty poset is not a lattice")
    leq = P.leq
    counts = leq.sum(axis=0)  # number of elements below (and including) each element
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        lower = leq[:, a][:, None] & leq  # lower[c, b]: c <= a and c <= b
        upper = leq[a, :][:, None] & leq.T  # upper[c, b]: a <= c and b <= c
        for b in range(a, n):
            lows = np.flatnonzero(lower[:, b])
            ups = np.flatnonzero(upper[:, b])
            if lows.size == 0 or ups.size == 0:
                raise NotALatticeError(
                    f"elements {P.labels[a]} and {P.labels[b]} have no common "
                    f"{'lower' if lows.size == 0 else 'upper'} bound",
                    details={"pair": [P.labels[a], P.labels[b]]},
                )
            g = lows[np.argmax(counts[lows])]
            l = ups[np.argmin(counts[ups])]
            if not leq[lows, g].all():
                raise NotALatticeError(f"elements {P.labels[a]} and {P.labels[b]} have no meet",
                                       details={"pair": [P.labels[a], P.labels[b]]})
            if not leq[l, ups].all():
                raise NotALatticeError(f"elements {P.labels[a]} and {P.labels[b]} have no join",
                                       details={"pair": [P.labels[a], P.labels[b]]})
            meet[a, b] = meet[b, a] = g
            join[a, b] = join[b, a] = l
    return FiniteLattice(P, meet, join)


def is_distributive(L: FiniteLattice) -> bool:
    """True iff ``x ^ (y v z) = (x ^ y) v (x ^ z)`` for all triples."""
    return L.distributive


def join_irreducibles(L: FiniteLattice) -> List[int]:
    """Non-bottom elements that are not the join of two strictly smaller elements."""
    return list(L.join_irreducibles)


def sublattice_generated(L: FiniteLattice, subset: Sequence[int]) -> FiniteLattice:
    """
    Smallest meet/join-closed subset containing ``subset``, with induced structure.

    Raises:
        LatticeError: If ``subset`` is empty
    """
    if len(subset) == 0:
        raise LatticeError("cannot generate a sublattice from the empty set")
    closed = set(int(x) for x in subset)
    frontier = list(closed)
    while frontier:
        nxt = []
        current = list(closed)
        for x in frontier:
            for y in current:
                for z in (int(L.meet[x, y]), int(L.join[x, y])):
                    if z not in closed:
                        closed.add(z)
                        nxt.append(z)
        frontier = nxt
    return L.induced(sorted(closed))


def boolean_lattice(n: int) -> FiniteLattice:
    """
    Subsets of an ``n``-set under inclusion; element ``i`` is the bitmask ``i``.

    Raises:
        CapExceededError: If ``n`` exceeds the ``cap_boolean_rank`` setting
    """
    cap = get_settings().cap_boolean_rank
    if n > cap:
        raise CapExceededError("boolean lattice rank", n, cap)
    size = 1 << n
    idx = np.arange(size)
    leq = (idx[:, None] & ~idx[None, :]) == 0
    labels = ["{" + ",".join(f"x{i + 1}" for i in range(n) if s >> i & 1) + "}" for s in range(size)]
    return FiniteLattice(FinitePoset(labels, leq, check=False),
                         idx[:, None] & idx[None, :], idx[:, None] | idx[None, :], distributive=True)


def chain_lattice(n: int) -> FiniteLattice:
    """Chain with ``n`` elements ``0 < 1 < ... < n-1``."""
    idx = np.arange(n)
    return FiniteLattice(FinitePoset.chain(n), np.minimum.outer(idx, idx), np.maximum.outer(idx, idx),
                         distributive=True)


def divisor_lattice(n: int) -> FiniteLattice:
    """Divisors of ``n`` ordered by divisibility (meet gcd, join lcm)."""
    divs = [int(d) for d in divisors(n)]
    pos: Dict[int, int] = {d: i for i, d in enumerate(divs)}
    arr = np.array(divs, dtype=np.int64)
    leq = (arr[None, :] % arr[:, None]) == 0
    meet = np.vectorize(lambda i, j: pos[int(np.gcd(divs[i], divs[j]))])(*np.indices((len(divs),) * 2))
    join = np.vectorize(lambda i, j: pos[int(np.lcm(divs[i], divs[j]))])(*np.indices((len(divs),) * 2))
    return FiniteLattice(FinitePoset([str(d) for d in divs], leq, check=False), meet, join)


def diamond_lattice() -> FiniteLattice:
    """M3: bottom, three pairwise incomparable atoms, top."""
    return lattice_from_poset(FinitePoset.from_covers(
        ["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]))


def sublattices_containing_bounds(L: FiniteLattice, cap: int = 1 << 20) -> List[List[int]]:
    """
    All meet/join-closed subsets that contain bottom and top.

    Returns:
        Sorted index lists, ordered by (size, members)

    Raises:
        CapExceededError: If the subset search space exceeds ``cap``
    """
    inner = [x for x in range(L.size) if x not in (L.bottom, L.top)]
    if 1 << len(inner) > cap:
        raise CapExceededError("sublattice search", 1 << len(inner), cap)
    found = []
    for k in range(len(inner) + 1):
        for combo in combinations(inner, k):
            members = sorted(set(combo) | {L.bottom, L.top})
            sub = np.asarray(members)
            mask = np.zeros(L.size, dtype=bool)
            mask[sub] = True
            if mask[L.meet[np.ix_(sub, sub)]].all() and mask[L.join[np.ix_(sub, sub)]].all():
                found.append(members)
    return sorted(found, key=lambda s: (len(s), s))
