"""
The maximal rational S-ring W(G) of an abelian p-group, computed symbolically.

Vectors are sparse maps from canonical tuples to exact rationals, read in the
R-basis ``{R(a)}`` (indicator sums of the characteristic subgroups) unless a
function says otherwise. Nothing is enumerated eagerly, so large signatures
stay usable as long as the vectors themselves are small.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .element import AlgebraElement
from .field import RATIONALS, CoefficientField
from .linalg import KeyedSpan
from .schur_ring import ClosureCheck
from ..config import get_settings
from ..groups.cyclic_product import CyclicProductGroup
from ..ptuple.classes import type_array
from ..ptuple.signature import LambdaSignature
from ..ptuple.tuples import (
    PTuple,
    canonical_tuples,
    check_range,
    count_classes,
    is_canonical,
    tuple_join,
    tuple_label,
    tuple_meet,
    tuple_weight,
)
from ..utils.exceptions import CapExceededError, TupleError, UnsupportedPrimeError
from ..utils.logging import get_logger

logger = get_logger(__name__)

Vector = Dict[PTuple, Fraction]


def _clean(vec: Dict[PTuple, object]) -> Vector:
    return {a: Fraction(v) for a, v in vec.items() if v != 0}


class SymbolicRationalAlgebra:
    """
    W(G) for ``G = Z_{p^l1} x ... x Z_{p^ln}`` with ``p`` odd.

    Products in the R-basis:

    * ``R(a) R(b) = p^{sum(a ^ b)} R(a v b)``
    * ``R(a) o R(b) = R(a ^ b)``

    The O-basis (class sums) is linked by ``R(a) = sum_{b <= a} O(b)``.

    Raises:
        UnsupportedPrimeError: For ``p = 2``
    """

    def __init__(self, sig: LambdaSignature):
        if sig.p == 2:
            raise UnsupportedPrimeError(
                "the symbolic algebra needs every characteristic subgroup to be regular (p odd)",
                error_code="P_EQUALS_2",
                details={"signature": sig.describe()},
            )
        self.sig = sig
        self.field: CoefficientField = RATIONALS
        self._o_cache: Dict[PTuple, Vector] = {}
        self._size_cache: Dict[PTuple, int] = {}

    @property
    def p(self) -> int:
        return self.sig.p

    @property
    def dimension(self) -> int:
        return count_classes(self.sig)

    def _check(self, a: Sequence[int]) -> PTuple:
        a = check_range(a, self.sig)
        if not is_canonical(a, self.sig):
            raise TupleError(f"{a} is not canonical for {self.sig}")
        return a

    def tuples(self) -> List[PTuple]:
        """Every canonical tuple, lexicographically.

        Raises:
            CapExceededError: If the dimension exceeds ``cap_symbolic_dimension``
        """
        cap = get_settings().cap_symbolic_dimension
        if self.dimension > cap:
            raise CapExceededError("symbolic algebra dimension", self.dimension, cap)
        return canonical_tuples(self.sig)

    def below(self, a: Sequence[int]) -> List[PTuple]:
        """Canonical tuples ``b <= a``, lexicographically."""
        a = self._check(a)
        lam = self.sig.lambdas
        result: List[PTuple] = []

        def extend(prefix: List[int]) -> None:
            i = len(prefix)
            if i == self.sig.n:
                result.append(tuple(prefix))
                return
            low = prefix[-1] if prefix else 0
            high = a[i] if i == 0 else min(a[i], prefix[-1] + lam[i] - lam[i - 1])
            for x in range(low, high + 1):
                extend(prefix + [x])

        extend([])
        return result

    # -- basis vectors ------------------------------------------------------

    def R(self, a: Sequence[int]) -> Vector:
        return {self._check(a): Fraction(1)}

    def one(self) -> Vector:
        return self.R(self.sig.bottom)

    def whole(self) -> Vector:
        return self.R(self.sig.top)

    def O(self, a: Sequence[int]) -> Vector:
        """``O(a) = R(a) - sum_{b < a} O(b)``, in the R-basis."""
        a = self._check(a)
        if a not in self._o_cache:
            acc: Dict[PTuple, Fraction] = {a: Fraction(1)}
            for b in self.below(a):
                if b == a:
                    continue
                for key, v in self.O(b).items():
                    acc[key] = acc.get(key, 0) - v
            self._o_cache[a] = _clean(acc)
        return dict(self._o_cache[a])

    def class_size(self, a: Sequence[int]) -> int:
        """``|O(a)| = p^{sum a} - sum_{b < a} |O(b)|``."""
        a = self._check(a)
        if a not in self._size_cache:
            size = self.p ** tuple_weight(a)
            size -= sum(self.class_size(b) for b in self.below(a) if b != a)
            self._size_cache[a] = size
        return self._size_cache[a]

    # -- arithmetic ---------------------------------------------------------

    def r_product(self, a: PTuple, b: PTuple) -> Tuple[int, PTuple]:
        """``R(a) R(b) = coefficient * R(a v b)``."""
        return self.p ** tuple_weight(tuple_meet(a, b)), tuple_join(a, b)

    @staticmethod
    def add(x: Vector, y: Vector, scale: Fraction = Fraction(1)) -> Vector:
        out = dict(x)
        for key, v in y.items():
            out[key] = out.get(key, 0) + scale * v
        return _clean(out)

    @staticmethod
    def scale(x: Vector, c) -> Vector:
        return _clean({key: c * v for key, v in x.items()})

    def multiply(self, x: Vector, y: Vector) -> Vector:
        out: Dict[PTuple, Fraction] = {}
        for a, u in x.items():
            for b, v in y.items():
                coef, c = self.r_product(a, b)
                out[c] = out.get(c, 0) + coef * u * v
        return _clean(out)

    def hadamard(self, x: Vector, y: Vector) -> Vector:
        out: Dict[PTuple, Fraction] = {}
        for a, u in x.items():
            for b, v in y.items():
                c = tuple_meet(a, b)
                out[c] = out.get(c, 0) + u * v
        return _clean(out)

    # -- change of basis ----------------------------------------------------

    def to_o_basis(self, x: Vector) -> Vector:
        """Coordinates of an R-basis vector in the O-basis."""
        out: Dict[PTuple, Fraction] = {}
        for a, v in x.items():
            for b in self.below(a):
                out[b] = out.get(b, 0) + v
        return _clean(out)

    def from_o_basis(self, y: Vector) -> Vector:
        out: Vector = {}
        for a, v in y.items():
            out = self.add(out, self.O(a), v)
        return out

    def change_of_basis(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        ``(zeta, mobius)`` over ``tuples()``: column ``a`` of ``zeta`` holds R(a) in
        the O-basis, column ``a`` of ``mobius`` holds O(a) in the R-basis.
        """
        tuples = self.tuples()
        index = {a: i for i, a in enumerate(tuples)}
        size = len(tuples)
        zeta = np.zeros((size, size), dtype=np.int64)
        mobius = np.zeros((size, size), dtype=np.int64)
        for j, a in enumerate(tuples):
            for b in self.below(a):
                zeta[index[b], j] = 1
            for b, v in self.O(a).items():
                mobius[index[b], j] = int(v)
        return zeta, mobius

    def product_table(self) -> Dict[Tuple[PTuple, PTuple], Tuple[int, PTuple]]:
        tuples = self.tuples()
        return {(a, b): self.r_product(a, b) for a in tuples for b in tuples}

    def hadamard_table(self) -> Dict[Tuple[PTuple, PTuple], PTuple]:
        tuples = self.tuples()
        return {(a, b): tuple_meet(a, b) for a in tuples for b in tuples}

    # -- concrete instances -------------------------------------------------

    def group(self) -> CyclicProductGroup:
        """
        The concrete group.

        Raises:
            CapExceededError: Above the ``concrete_crosscheck_order`` setting
        """
        cap = get_settings().concrete_crosscheck_order
        if self.sig.order > cap:
            raise CapExceededError("group for concrete instantiation", self.sig.order, cap)
        return self.sig.group()

    def concrete(self, x: Vector, G: CyclicProductGroup = None,
                 field: CoefficientField = RATIONALS) -> AlgebraElement:
        """The group-algebra element ``sum c_a R(a)-bar``."""
        G = G or self.group()
        types = type_array(G)
        acc = np.zeros(G.order, dtype=object)
        acc[:] = Fraction(0)
        for a, c in x.items():
            acc[(types <= np.array(a)[None, :]).all(axis=1)] += c
        return AlgebraElement(G, field, {g: v for g, v in enumerate(acc.tolist()) if v != 0})

    def label(self, x: Vector, prefix: str = "R") -> str:
        if not x:
            return "0"
        return " + ".join(f"{v}*{tuple_label(a, prefix)}" for a, v in sorted(x.items()))

    def __repr__(self) -> str:
        return f"<SymbolicRationalAlgebra {self.sig}>"


@lru_cache(maxsize=64)
def w_algebra(sig: LambdaSignature) -> SymbolicRationalAlgebra:
    """The symbolic W(G) for a signature with odd p."""
    return SymbolicRationalAlgebra(sig)


def _monomial_nodes(vectors: Sequence[Vector]) -> Optional[List[PTuple]]:
    if all(len(v) == 1 for v in vectors):
        return sorted({next(iter(v)) for v in vectors})
    return None


def _to_fraction(A: SymbolicRationalAlgebra, v) -> Fraction:
    r = A.field.to_rational(v)
    return Fraction(int(r.p), int(r.q))


def _vector_json(A: SymbolicRationalAlgebra, x: Dict[PTuple, object]) -> Dict[str, str]:
    return {tuple_label(a): str(_to_fraction(A, v)) for a, v in sorted(x.items())}


def check_symbolic_closure(A: SymbolicRationalAlgebra, vectors: Sequence[Vector],
                           basis: str = "R") -> ClosureCheck:
    """
    Whether the span of ``vectors`` is an S-ring inside W(G).

    Checks that 1 and G-bar lie in the span and that it is closed under the
    product and the Hadamard product. Inversion is the identity on W(G) of an
    abelian group. When every vector is a single R(a), closure reduces to
    the node set being closed under meet and join.

    Args:
        A: The symbolic algebra
        vectors: Spanning vectors
        basis: ``"R"`` or ``"O"``, the basis ``vectors`` are written in
    """
    if basis == "O":
        vectors = [A.from_o_basis(v) for v in vectors]
    vectors = [_clean(v) for v in vectors]
    vectors = [v for v in vectors if v]
    nodes = _monomial_nodes(vectors)
    if nodes is not None:
        node_set = set(nodes)
        for name, t in (("1", A.sig.bottom), ("G", A.sig.top)):
            if t not in node_set:
                return ClosureCheck(False, f"span does not contain {name}", details={"missing": tuple_label(t)})
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                for op, c in (("meet", tuple_meet(a, b)), ("join", tuple_join(a, b))):
                    if c not in node_set:
                        return ClosureCheck(False, f"nodes are not closed under {op}",
                                            details={"pair": [tuple_label(a), tuple_label(b)],
                                                     "missing": tuple_label(c)})
        return ClosureCheck(True, details={"dimension": len(nodes)})

    span = KeyedSpan(A.field, vectors)
    for name, x in (("1", A.one()), ("G", A.whole())):
        if not span.contains(x):
            return ClosureCheck(False, f"span does not contain {name}")
    rows = [{a: _to_fraction(A, v) for a, v in row.items()} for row in span.rows]
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            for op, value in (("product", A.multiply(rows[i], rows[j])),
                              ("Hadamard product", A.hadamard(rows[i], rows[j]))):
                residual = span.residual(value)
                if residual:
                    logger.debug("symbolic_closure_failed", signature=A.sig.describe(), operation=op)
                    return ClosureCheck(False, f"not closed under the {op}",
                                        details={"pair": [i, j], "residual": _vector_json(A, residual)})
    logger.debug("symbolic_closure_holds", signature=A.sig.describe(), dimension=span.dimension)
    return ClosureCheck(True, details={"dimension": span.dimension})
