"""Exact span membership by row reduction over the coefficient field."""

from typing import Dict, Hashable, List, Mapping, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from .element import AlgebraElement
from .field import CoefficientField
from ..groups.base import FiniteGroup
from ..utils.exceptions import FieldMismatchError

Vector = Mapping[Hashable, object]


class KeyedSpan:
    """
    Reduced row echelon basis of a span of sparse vectors.

    Vectors map arbitrary sortable keys to field elements. Rows are kept
    sparse and each row has a leading 1 at its pivot key.
    """

    def __init__(self, field: CoefficientField, vectors: Sequence[Vector]):
        self.field = field
        self.rows: List[Dict[Hashable, object]] = []
        self.pivots: List[Hashable] = []
        nonzero = [{k: field.convert(v) for k, v in vec.items() if not field.is_zero(field.convert(v))}
                   for vec in vectors]
        nonzero = [vec for vec in nonzero if vec]
        if not nonzero:
            return
        keys = sorted(set().union(*nonzero))
        column = {k: c for c, k in enumerate(keys)}
        matrix = DomainMatrix({i: {column[k]: v for k, v in vec.items()} for i, vec in enumerate(nonzero)},
                              (len(nonzero), len(keys)), field.domain)
        reduced, pivots = matrix.rref()
        sparse = reduced.to_sparse().rep
        for r, c in enumerate(pivots):
            self.rows.append({keys[col]: v for col, v in sparse.get(r, {}).items()})
            self.pivots.append(keys[c])

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def residual(self, vec: Vector) -> Dict[Hashable, object]:
        """``vec`` with every pivot entry eliminated; empty iff ``vec`` lies in the span."""
        field = self.field
        coeffs = {k: field.convert(v) for k, v in vec.items()}
        zero = field.zero
        for row, pivot in zip(self.rows, self.pivots):
            a = coeffs.get(pivot)
            if a is None or field.is_zero(a):
                continue
            for key, v in row.items():
                coeffs[key] = coeffs.get(key, zero) - a * v
        return {k: v for k, v in coeffs.items() if not field.is_zero(v)}

    def contains(self, vec: Vector) -> bool:
        return not self.residual(vec)


class SpanBasis(KeyedSpan):
    """A ``KeyedSpan`` of group-algebra elements, keyed by group element."""

    def __init__(self, group: FiniteGroup, field: CoefficientField, elements: Sequence[AlgebraElement]):
        for x in elements:
            if x.field != field:
                raise FieldMismatchError(f"span element over {x.field}, expected {field}")
        self.group = group
        super().__init__(field, [x.coeffs for x in elements])

    def witness(self, x: AlgebraElement) -> Optional[AlgebraElement]:
        """The nonzero residual if ``x`` is outside the span, else None."""
        r = self.residual(x.coeffs)
        return AlgebraElement._trusted(self.group, self.field, r) if r else None

    def contains(self, x) -> bool:
        if isinstance(x, AlgebraElement):
            return self.witness(x) is None
        return super().contains(x)

    def basis(self) -> List[AlgebraElement]:
        return [AlgebraElement._trusted(self.group, self.field, row) for row in self.rows]


def span_rank(group: FiniteGroup, field: CoefficientField, elements: Sequence[AlgebraElement]) -> int:
    return SpanBasis(group, field, elements).dimension


def intersection_dimension(group: FiniteGroup, field: CoefficientField,
                           first: Sequence[AlgebraElement], second: Sequence[AlgebraElement]) -> int:
    """``dim(U n V) = dim U + dim V - dim(U + V)``."""
    u = span_rank(group, field, first)
    v = span_rank(group, field, second)
    return u + v - span_rank(group, field, list(first) + list(second))
