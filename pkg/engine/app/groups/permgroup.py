"""Permutation groups given by generators."""

from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .cayley import CayleyGroup
from ..config import get_settings
from ..utils.exceptions import CapExceededError, GroupError

Perm = Tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p o q`` (apply ``q`` first), i.e. ``r[i] = p[q[i]]``."""
    return tuple(p[i] for i in q)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class PermGroup:
    """
    A permutation group on ``{0, ..., degree-1}``.

    The element list is materialized lazily by closing the generators under
    composition; search routines that already know every element pass them
    in through ``from_elements``.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        self.degree = int(degree)
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise GroupError(f"generator {g} is not a permutation of degree {self.degree}")
            if g != self.identity and g not in gens:
                gens.append(g)
        self.generators: List[Perm] = gens

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Sequence[int]]) -> "PermGroup":
        """Build from a complete element list; generators are chosen greedily."""
        elements = sorted({tuple(int(x) for x in e) for e in elements})
        group = cls(degree)
        identity = group.identity
        if identity not in elements:
            raise GroupError("element list does not contain the identity")
        element_set = set(elements)
        gens: List[Perm] = []
        span = {identity}
        for e in elements:
            if e in span:
                continue
            gens.append(e)
            span = _close(degree, gens)
        if span != element_set:
            raise GroupError("element list is not closed under composition")
        group.generators = gens
        group.__dict__["elements"] = elements
        return group

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @cached_property
    def elements(self) -> List[Perm]:
        """All elements in lexicographic order (the identity comes first)."""
        return sorted(_close(self.degree, self.generators))

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, perm: Sequence[int]) -> bool:
        return tuple(perm) in set(self.elements)

    def is_abelian(self) -> bool:
        """Generators commute pairwise."""
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def minimal_generators(self) -> List[Perm]:
        """A generating sequence picked greedily over the sorted element list."""
        gens: List[Perm] = []
        span = {self.identity}
        for e in self.elements:
            if e not in span:
                gens.append(e)
                span = _close(self.degree, gens)
        return gens

    def to_cayley(self, name: str = None) -> CayleyGroup:
        """Multiplication table on the sorted element list."""
        elements = self.elements
        arr = np.array(elements, dtype=np.int64).reshape(len(elements), self.degree)
        index = {row.tobytes(): i for i, row in enumerate(arr)}
        table = np.empty((len(elements), len(elements)), dtype=np.int64)
        for a, row in enumerate(arr):
            composed = row[arr]  # row o q for every q
            table[a] = [index[c.tobytes()] for c in composed]
        labels = [str(list(e)) for e in elements]
        return CayleyGroup(table, labels=labels, name=name or f"PermGroup({len(elements)})")

    def describe(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} gens={len(self.generators)}>"


def _close(degree: int, gens: Sequence[Perm]) -> set:
    """Closure of generators under composition."""
    identity = tuple(range(degree))
    cap = get_settings().cap_group_order * 16
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise CapExceededError("permutation group closure", len(seen), cap)
        frontier = nxt
    return seen
