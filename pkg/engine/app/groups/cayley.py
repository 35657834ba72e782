"""Groups given by an explicit multiplication table."""

import json
from itertools import permutations
from pathlib import Path
from typing import Any, List, Optional, Sequence

import numpy as np

from .base import FiniteGroup
from ..config import get_settings
from ..utils.exceptions import CapExceededError, GroupError


class CayleyGroup(FiniteGroup):
    """
    A finite group stored as an ``n x n`` table of element indices.

    On construction the table is checked to be a Latin square with a two-sided
    identity and (up to the configured order cap) associative. Elements are
    relabelled so that the identity has index 0.
    """

    def __init__(self, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                 name: str = None):
        table = np.asarray(table, dtype=np.int64)
        n = table.shape[0]
        if table.ndim != 2 or table.shape != (n, n) or n == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        cap = get_settings().cap_cayley_order
        if n > cap:
            raise CapExceededError("Cayley table", n, cap)
        if table.min() < 0 or table.max() >= n:
            raise GroupError("table entries must be element indices")

        expected = np.arange(n)
        if not all(np.array_equal(np.sort(row), expected) for row in table):
            raise GroupError("multiplication table rows are not permutations (not a Latin square)")
        if not all(np.array_equal(np.sort(col), expected) for col in table.T):
            raise GroupError("multiplication table columns are not permutations (not a Latin square)")

        identities = [e for e in range(n)
                      if np.array_equal(table[e], expected) and np.array_equal(table[:, e], expected)]
        if not identities:
            raise GroupError("multiplication table has no identity element")
        e = identities[0]

        labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(labels) != n:
            raise GroupError("label count does not match table size")
        if e != 0:
            # swap e and 0 so the identity has index 0
            perm = np.arange(n)
            perm[[0, e]] = perm[[e, 0]]
            table = perm[table[np.ix_(perm, perm)]]
            labels = [labels[i] for i in perm]

        for a in range(n):
            if not np.array_equal(table[table[a]], table[a][table]):
                raise GroupError(f"multiplication table is not associative (witness element {labels[a]})")

        self._table = table
        self._table.setflags(write=False)
        self._labels = labels
        self._name = name or f"Cayley({n})"

    @classmethod
    def from_json(cls, source: Any) -> "CayleyGroup":
        """
        Build a group from a JSON array-of-arrays (or ``{"table": ..., "labels": ...}``).

        Args:
            source: Path to a JSON file, a JSON string or decoded JSON data
        """
        if isinstance(source, (str, Path)) and Path(str(source)).exists():
            data = json.loads(Path(str(source)).read_text(encoding="utf-8"))
        elif isinstance(source, str):
            data = json.loads(source)
        else:
            data = source
        if isinstance(data, dict):
            return cls(data["table"], labels=data.get("labels"), name=data.get("name"))
        return cls(data)

    @classmethod
    def dihedral(cls, n: int) -> "CayleyGroup":
        """Dihedral group of order ``2n``; element ``r^i s^j`` has index ``i + n*j``."""
        if n < 1:
            raise GroupError("dihedral group needs n >= 1")
        size = 2 * n
        table = np.zeros((size, size), dtype=np.int64)
        for a in range(size):
            i, j = a % n, a // n
            for b in range(size):
                k, l = b % n, b // n
                rot = (i + (k if j == 0 else -k)) % n
                table[a, b] = rot + n * ((j + l) % 2)
        labels = [("r^%d" % (a % n) if a % n else "1") if a < n else
                  ("s" if a % n == 0 else "r^%ds" % (a % n)) for a in range(size)]
        return cls(table, labels=labels, name=f"D{n}")

    @classmethod
    def symmetric(cls, n: int) -> "CayleyGroup":
        """Symmetric group on ``n`` points, elements in lexicographic permutation order."""
        perms = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
        labels = ["".join(str(x) for x in p) or "()" for p in perms]
        return cls(table, labels=labels, name=f"S{n}")

    @classmethod
    def from_group(cls, group: FiniteGroup, name: str = None) -> "CayleyGroup":
        """Tabulate any small group."""
        labels = [group.label(g) for g in range(group.order)]
        return cls(group.cayley_table(), labels=labels, name=name or group.describe())

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    def mul_array(self, a: Any, b: Any) -> np.ndarray:
        return self._table[np.asarray(a), np.asarray(b)]

    def _inverse_array(self) -> np.ndarray:
        return np.argmin(self._table, axis=1)

    def cayley_table(self) -> np.ndarray:
        return self._table

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def label(self, g: int) -> str:
        return self._labels[int(g)]

    def labels(self) -> List[str]:
        return list(self._labels)

    def describe(self) -> str:
        return self._name

    def to_json(self) -> dict:
        """JSON form accepted by ``from_json``."""
        return {"name": self._name, "labels": self._labels, "table": self._table.tolist()}
