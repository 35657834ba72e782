"""Direct products of cyclic groups with exponent-tuple elements."""

from functools import cached_property
from itertools import product
from typing import Any, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from .base import FiniteGroup
from ..utils.exceptions import GroupError


class CyclicProductGroup(FiniteGroup):
    """
    The group Z_{m_1} x ... x Z_{m_k} written additively.

    Elements are indexed in lexicographic order of their exponent tuples
    (last coordinate fastest), so index 0 is the all-zero tuple and for
    a single modulus the index equals the residue.
    """

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 1 for m in moduli):
            raise GroupError(f"moduli must be positive, got {moduli}")
        self._moduli = moduli
        self._order = int(np.prod(moduli, dtype=object)) if moduli else 1
        strides = [1] * len(moduli)
        for i in range(len(moduli) - 2, -1, -1):
            strides[i] = strides[i + 1] * moduli[i + 1]
        self._strides = np.array(strides, dtype=np.int64)
        self._mod_array = np.array(moduli, dtype=np.int64)

    @classmethod
    def cyclic(cls, n: int) -> "CyclicProductGroup":
        """The cyclic group Z_n."""
        return cls((n,))

    @property
    def moduli(self) -> Tuple[int, ...]:
        return self._moduli

    @property
    def rank(self) -> int:
        """Number of cyclic factors."""
        return len(self._moduli)

    @property
    def order(self) -> int:
        return self._order

    @cached_property
    def coords(self) -> np.ndarray:
        """Exponent tuples of all elements, shape (order, rank)."""
        rows = list(product(*(range(m) for m in self._moduli)))
        arr = np.array(rows, dtype=np.int64).reshape(self._order, self.rank)
        arr.setflags(write=False)
        return arr

    def index_of(self, coords: Sequence[int]) -> int:
        """Element index of an exponent tuple (reduced modulo the moduli)."""
        if len(coords) != self.rank:
            raise GroupError(f"expected {self.rank} coordinates, got {len(coords)}")
        c = np.mod(np.asarray(coords, dtype=np.int64), self._mod_array)
        return int(c @ self._strides)

    def indices_of(self, coords: np.ndarray) -> np.ndarray:
        """Vectorized ``index_of`` over the last axis."""
        return np.mod(coords, self._mod_array) @ self._strides

    def mul_array(self, a: Any, b: Any) -> np.ndarray:
        coords = self.coords
        return self.indices_of(coords[np.asarray(a)] + coords[np.asarray(b)])

    def _inverse_array(self) -> np.ndarray:
        return self.indices_of(-self.coords)

    def power_array(self, m: int) -> np.ndarray:
        return self.indices_of(self.coords * m)

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self._order, dtype=np.int64)
        for i, m in enumerate(self._moduli):
            orders = np.lcm(orders, m // np.gcd(self.coords[:, i], m))
        orders.setflags(write=False)
        return orders

    def is_abelian(self) -> bool:
        return True

    def conjugacy_classes(self):
        return [[g] for g in range(self._order)]

    def label(self, g: int) -> str:
        if self.rank == 1:
            return str(int(g))
        return "(" + ",".join(str(int(c)) for c in self.coords[g]) + ")"

    def element_json(self, g: int) -> Any:
        if self.rank == 1:
            return int(g)
        return [int(c) for c in self.coords[g]]

    def describe(self) -> str:
        if not self._moduli:
            return "Z1"
        return "x".join(f"Z{m}" for m in self._moduli)

    def basis_element(self, i: int) -> int:
        """Index of the standard generator e_i."""
        c = [0] * self.rank
        c[i] = 1
        return self.index_of(c)

    def direct_product(self, other: "CyclicProductGroup") -> "CyclicProductGroup":
        """External direct product; ``(a, b)`` has index ``a * |other| + b``."""
        return CyclicProductGroup(self._moduli + other.moduli)

    @cached_property
    def prime_power_moduli(self) -> Optional[Tuple[Tuple[int, int], ...]]:
        """
        ``(p, lambda)`` per coordinate when every modulus is a prime power.

        Modulus 1 is reported as ``(1, 0)``. ``None`` if some modulus has two
        or more distinct prime factors.
        """
        result = []
        for m in self._moduli:
            if m == 1:
                result.append((1, 0))
                continue
            f = factorint(m)
            if len(f) != 1:
                return None
            (p, e), = f.items()
            result.append((int(p), int(e)))
        return tuple(result)

    def p_group_exponents(self) -> Optional[Tuple[int, Tuple[int, ...]]]:
        """
        ``(p, (lambda_1, ..., lambda_n))`` when this is a p-group in sorted form.

        Requires all moduli to be powers (>= 1) of one prime with nondecreasing
        exponents; returns ``None`` otherwise.
        """
        pp = self.prime_power_moduli
        if not pp or any(p == 1 for p, _ in pp):
            return None
        primes = {p for p, _ in pp}
        lambdas = tuple(e for _, e in pp)
        if len(primes) != 1 or list(lambdas) != sorted(lambdas):
            return None
        return primes.pop(), lambdas

    def is_p_group(self) -> bool:
        """Flag for abelian p-groups given in signature form."""
        return self.p_group_exponents() is not None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CyclicProductGroup) and other.moduli == self._moduli

    def __hash__(self) -> int:
        return hash(("CyclicProductGroup", self._moduli))
