"""The lattice of canonical tuples, isomorphic to the characteristic-subgroup lattice for odd p."""

from typing import Dict, List

import numpy as np

from .signature import LambdaSignature
from .tuples import PTuple, canonical_tuples, tuple_join, tuple_label, tuple_meet
from ..lattices.lattice import FiniteLattice
from ..lattices.poset import FinitePoset
from ..utils.exceptions import UnsupportedPrimeError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class CharLattice(FiniteLattice):
    """
    Canonical tuples ordered componentwise.

    Element ``i`` is ``tuples[i]``; tuples are listed lexicographically and
    labelled ``R(a1,...,an)``.
    """

    def __init__(self, sig: LambdaSignature, tuples: List[PTuple]):
        self.sig = sig
        self.tuples = tuples
        self.position: Dict[PTuple, int] = {a: i for i, a in enumerate(tuples)}
        arr = np.array(tuples, dtype=np.int64).reshape(len(tuples), sig.n)
        leq = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
        size = len(tuples)
        meet = np.empty((size, size), dtype=np.int64)
        join = np.empty((size, size), dtype=np.int64)
        for i, a in enumerate(tuples):
            for j in range(i, size):
                b = tuples[j]
                meet[i, j] = meet[j, i] = self.position[tuple_meet(a, b)]
                join[i, j] = join[j, i] = self.position[tuple_join(a, b)]
        poset = FinitePoset([tuple_label(a) for a in tuples], leq, check=False)
        super().__init__(poset, meet, join, distributive=True)

    def tuple_of(self, i: int) -> PTuple:
        return self.tuples[i]

    def index_of(self, a) -> int:
        return self.position[tuple(int(x) for x in a)]


def char_lattice(sig: LambdaSignature) -> CharLattice:
    """
    The lattice of canonical tuples under <=, meet and join.

    Raises:
        UnsupportedPrimeError: For ``p = 2``, where irregular characteristic subgroups exist
    """
    if sig.p == 2:
        raise UnsupportedPrimeError(
            "characteristic subgroups are regular only for odd p",
            error_code="P_EQUALS_2",
            details={"signature": sig.describe()},
        )
    tuples = canonical_tuples(sig)
    logger.debug("char_lattice_built", signature=sig.describe(), size=len(tuples))
    return CharLattice(sig, tuples)
