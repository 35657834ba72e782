"""Signatures of abelian p-groups."""

from dataclasses import dataclass
from typing import Tuple

from sympy import isprime

from ..groups.cyclic_product import CyclicProductGroup
from ..utils.exceptions import GroupError, TupleError


@dataclass(frozen=True)
class LambdaSignature:
    """
    The group Z_{p^l1} x ... x Z_{p^ln} with ``1 <= l1 <= ... <= ln``.

    The convention ``lambda_0 = 0`` is exposed through ``lam(0)``.
    """

    p: int
    lambdas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(int(x) for x in self.lambdas))
        if not isprime(self.p):
            raise TupleError(f"p = {self.p} is not prime")
        if any(x < 1 for x in self.lambdas) or list(self.lambdas) != sorted(self.lambdas):
            raise TupleError(f"lambda must be positive and nondecreasing, got {self.lambdas}")

    @classmethod
    def of_group(cls, G: CyclicProductGroup) -> "LambdaSignature":
        """Signature of a cyclic product in p-group form."""
        info = G.p_group_exponents() if isinstance(G, CyclicProductGroup) else None
        if info is None:
            raise GroupError(f"{G.describe()} is not an abelian p-group in signature form")
        return cls(*info)

    @property
    def n(self) -> int:
        return len(self.lambdas)

    def lam(self, i: int) -> int:
        """``lambda_i`` with 1-based ``i`` and ``lambda_0 = 0``."""
        return 0 if i == 0 else self.lambdas[i - 1]

    @property
    def top(self) -> Tuple[int, ...]:
        return self.lambdas

    @property
    def bottom(self) -> Tuple[int, ...]:
        return (0,) * self.n

    @property
    def order(self) -> int:
        return self.p ** sum(self.lambdas)

    def group(self) -> CyclicProductGroup:
        """The concrete group."""
        return CyclicProductGroup(tuple(self.p ** x for x in self.lambdas))

    def describe(self) -> str:
        return f"p={self.p};lambda=" + ",".join(str(x) for x in self.lambdas)

    def __str__(self) -> str:
        return self.describe()
