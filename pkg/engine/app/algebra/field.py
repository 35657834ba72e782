"""Coefficient fields: the rationals and prime fields."""

from fractions import Fraction
from typing import Any, Union

import numpy as np
from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from ..utils.exceptions import AlgebraError, NotInvertibleError

Scalar = Union[int, Fraction, Rational, Any]


class CoefficientField:
    """
    A field of coefficients for group algebras.

    ``characteristic == 0`` is the rationals (exact, arbitrary precision);
    a prime ``q`` is the prime field F_q. Arithmetic is delegated to the
    matching sympy domain so that elements can be fed to ``DomainMatrix``.
    """

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic == 0:
            self.domain = QQ
        elif characteristic > 1 and isprime(characteristic):
            self.domain = GF(characteristic, symmetric=False)
        else:
            raise AlgebraError(
                f"coefficient ring of characteristic {characteristic} is not a field",
                error_code="NOT_A_FIELD",
                details={"characteristic": characteristic},
            )
        self.characteristic = characteristic

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(0)

    @classmethod
    def prime(cls, q: int) -> "CoefficientField":
        return cls(q)

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, value: Scalar):
        """
        Map an integer, fraction or domain element into the field.

        Raises:
            NotInvertibleError: If a denominator vanishes in F_q
        """
        if self.domain.of_type(value):
            return value
        if isinstance(value, (int, np.integer)):
            return self.domain.convert(int(value))
        if isinstance(value, Fraction):
            value = Rational(value.numerator, value.denominator)
        try:
            r = Rational(value)
        except (TypeError, ValueError):
            return self.domain.convert(value)
        num = self.domain.convert(int(r.p))
        den = self.domain.convert(int(r.q))
        if self.is_zero(den):
            raise NotInvertibleError(f"{r.q} is not invertible in {self.label}",
                                     details={"value": str(r), "field": self.label})
        return num / den if r.q != 1 else num

    def is_zero(self, x) -> bool:
        return self.domain.is_zero(x)

    def to_rational(self, x) -> Rational:
        """Exact sympy value; prime-field elements map to their least nonnegative residue."""
        return self.domain.to_sympy(x)

    def format(self, x) -> str:
        return str(self.to_rational(x))

    def invertible(self, n: int) -> bool:
        """Whether the integer ``n`` is nonzero in the field."""
        return n != 0 if self.characteristic == 0 else n % self.characteristic != 0

    def reduce_counts(self, counts: np.ndarray) -> np.ndarray:
        """Integer counts as they read in the field: unchanged over Q, reduced mod q otherwise."""
        counts = np.asarray(counts, dtype=np.int64)
        return counts if self.characteristic == 0 else counts % self.characteristic

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoefficientField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("field", self.characteristic))

    def __repr__(self) -> str:
        return f"CoefficientField({self.label})"

    def __str__(self) -> str:
        return self.label


# Global rational field instance
RATIONALS = CoefficientField(0)
