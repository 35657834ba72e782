"""Sparse elements of a group algebra F[G]."""

from typing import Dict, Iterable, Iterator, Mapping, Tuple

import numpy as np

from .field import CoefficientField, Scalar
from ..config import get_settings
from ..groups.base import FiniteGroup
from ..groups.subgroups import Subgroup
from ..utils.exceptions import AlgebraError, CapExceededError, FieldMismatchError


class AlgebraElement:
    """
    ``x = sum a_g g`` stored as a map from group element to nonzero coefficient.

    Instances are immutable values; every operation returns a new element.
    """

    __slots__ = ("group", "field", "_coeffs")

    def __init__(self, group: FiniteGroup, field: CoefficientField, coeffs: Mapping[int, Scalar] = None):
        self.group = group
        self.field = field
        clean: Dict[int, object] = {}
        for g, a in (coeffs or {}).items():
            g = int(g)
            if not 0 <= g < group.order:
                raise AlgebraError(f"{g} is not an element of {group.describe()}")
            value = field.convert(a)
            if not field.is_zero(value):
                clean[g] = value
        self._coeffs = clean

    @classmethod
    def _trusted(cls, group: FiniteGroup, field: CoefficientField, coeffs: Dict[int, object]) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.group = group
        obj.field = field
        obj._coeffs = {g: a for g, a in coeffs.items() if not field.is_zero(a)}
        return obj

    @classmethod
    def zero(cls, group: FiniteGroup, field: CoefficientField) -> "AlgebraElement":
        return cls._trusted(group, field, {})

    @classmethod
    def one(cls, group: FiniteGroup, field: CoefficientField) -> "AlgebraElement":
        return cls._trusted(group, field, {0: field.one})

    @classmethod
    def simple_quantity(cls, group: FiniteGroup, field: CoefficientField, members: Iterable[int]) -> "AlgebraElement":
        """The sum of all elements of ``members``."""
        one = field.one
        return cls._trusted(group, field, {int(g): one for g in members})

    @classmethod
    def whole(cls, group: FiniteGroup, field: CoefficientField) -> "AlgebraElement":
        return cls.simple_quantity(group, field, range(group.order))

    @classmethod
    def of_subgroup(cls, H: Subgroup, field: CoefficientField) -> "AlgebraElement":
        return cls.simple_quantity(H.parent, field, H.elements)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, object]:
        return dict(self._coeffs)

    def coefficient(self, g: int):
        return self._coeffs.get(int(g), self.field.zero)

    def support(self) -> np.ndarray:
        return np.array(sorted(self._coeffs), dtype=np.int64)

    def items(self) -> Iterator[Tuple[int, object]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group is other.group and self.field == other.field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((id(self.group), self.field, tuple(self.items())))

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine elements over {self.field} and {other.field}")
        if other.group is not self.group and other.group != self.group:
            raise FieldMismatchError("cannot combine elements of different group algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self._coeffs)
        zero = self.field.zero
        for g, b in other._coeffs.items():
            out[g] = out.get(g, zero) + b
        return AlgebraElement._trusted(self.group, self.field, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._trusted(self.group, self.field, {g: -a for g, a in self._coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        c = self.field.convert(c)
        return AlgebraElement._trusted(self.group, self.field, {g: c * a for g, a in self._coeffs.items()})

    def __rmul__(self, c: Scalar) -> "AlgebraElement":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.multiply(other)
        return self.scale(other)

    # -- products -----------------------------------------------------------

    def multiply(self, other: "AlgebraElement") -> "AlgebraElement":
        """
        Convolution product.

        Raises:
            CapExceededError: If the group exceeds the ``cap_convolution_order`` setting
        """
        self._check(other)
        cap = get_settings().cap_convolution_order
        if self.group.order > cap:
            raise CapExceededError("group order for convolution", self.group.order, cap)
        zero = self.field.zero
        out: Dict[int, object] = {}
        if not self._coeffs or not other._coeffs:
            return AlgebraElement.zero(self.group, self.field)
        ys = np.fromiter(other._coeffs.keys(), dtype=np.int64)
        yv = list(other._coeffs.values())
        for g, a in self._coeffs.items():
            for t, b in zip(self.group.mul_array(g, ys).tolist(), yv):
                out[t] = out.get(t, zero) + a * b
        return AlgebraElement._trusted(self.group, self.field, out)

    def hadamard(self, other: "AlgebraElement") -> "AlgebraElement":
        """Coefficientwise product ``x o y``."""
        self._check(other)
        common = self._coeffs.keys() & other._coeffs.keys()
        return AlgebraElement._trusted(self.group, self.field,
                                       {g: self._coeffs[g] * other._coeffs[g] for g in common})

    def transport(self, images: np.ndarray) -> "AlgebraElement":
        """Push coefficients along ``g -> images[g]``, summing at coinciding images."""
        zero = self.field.zero
        out: Dict[int, object] = {}
        for g, a in self._coeffs.items():
            t = int(images[g])
            out[t] = out.get(t, zero) + a
        return AlgebraElement._trusted(self.group, self.field, out)

    def inverse_map(self) -> "AlgebraElement":
        """``x^(-1) = sum a_g g^-1``."""
        return self.transport(self.group.inverses)

    def power_map(self, m: int) -> "AlgebraElement":
        """``x^(m) = sum a_g g^m``."""
        return self.transport(self.group.power_array(m))

    # -- output -------------------------------------------------------------

    def to_json(self) -> Dict[str, str]:
        return {self.group.label(g): self.field.format(a) for g, a in self.items()}

    def __repr__(self) -> str:
        terms = [f"{self.field.format(a)}*{self.group.label(g)}" for g, a in self.items()]
        return "AlgebraElement(" + (" + ".join(terms) if terms else "0") + ")"


def subgroup_product(H: Subgroup, K: Subgroup, field: CoefficientField) -> AlgebraElement:
    """``H * K = |H n K| (HK)`` for subgroups of an abelian group, without a convolution."""
    HK = H.join(K)
    return AlgebraElement.of_subgroup(HK, field).scale(H.intersection(K).order)
