"""The projection F[G] -> F[G/H] and its section gH -> g H-bar."""

from typing import Tuple

import numpy as np

from .element import AlgebraElement
from ..groups.base import FiniteGroup
from ..groups.subgroups import Subgroup, quotient
from ..utils.exceptions import FieldMismatchError, NotInvertibleError


class QuotientMap:
    """
    The pair of linear maps attached to a normal subgroup H.

    ``project`` sends ``g`` to ``gH``; ``lift`` sends ``gH`` to ``g H-bar``.
    """

    def __init__(self, H: Subgroup):
        self.subgroup = H
        self.group: FiniteGroup = H.parent
        self.quotient_group, self.projection = quotient(H.parent, H)

    @property
    def index(self) -> int:
        return self.quotient_group.order

    def project(self, x: AlgebraElement) -> AlgebraElement:
        if x.group is not self.group and x.group != self.group:
            raise FieldMismatchError("element does not belong to the group being projected")
        pushed = x.transport(self.projection)
        return AlgebraElement._trusted(self.quotient_group, x.field, pushed.coeffs)

    def lift(self, y: AlgebraElement, normalized: bool = False) -> AlgebraElement:
        """
        ``sum b_{gH} g H-bar``; with ``normalized`` the result is divided by ``|H|``.

        Raises:
            NotInvertibleError: If ``normalized`` and ``|H|`` vanishes in the field
        """
        if y.group is not self.quotient_group and y.group != self.quotient_group:
            raise FieldMismatchError("element does not belong to the quotient group")
        field = y.field
        coeffs = {g: y.coefficient(int(c)) for g, c in enumerate(self.projection.tolist())}
        lifted = AlgebraElement._trusted(self.group, field, coeffs)
        if normalized:
            order = self.subgroup.order
            if not field.invertible(order):
                raise NotInvertibleError(f"|H| = {order} is not invertible in {field}",
                                         details={"order": order, "field": field.label})
            lifted = lifted.scale(field.one / field.convert(order))
        return lifted

    def preimage(self, cosets) -> np.ndarray:
        """All elements of G lying in the given cosets."""
        mask = np.isin(self.projection, np.asarray(list(cosets), dtype=np.int64))
        return np.flatnonzero(mask)


def project_pi(x: AlgebraElement, H: Subgroup) -> Tuple[AlgebraElement, QuotientMap]:
    """Projection of ``x`` onto F[G/H], returned with the map used."""
    qmap = QuotientMap(H)
    return qmap.project(x), qmap


def lift_pi_prime(y: AlgebraElement, qmap: QuotientMap, normalized: bool = False) -> AlgebraElement:
    return qmap.lift(y, normalized=normalized)
