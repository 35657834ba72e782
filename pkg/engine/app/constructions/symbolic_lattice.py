"""Lattice S-rings inside W(G), spanned by characteristic subgroup sums."""

from functools import cached_property
from typing import Any, Dict, Iterable, List

import numpy as np

from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.partition import SchurPartition, labels_to_blocks
from ..algebra.schur_ring import SchurRing
from ..algebra.symbolic import SymbolicRationalAlgebra, Vector, check_symbolic_closure, w_algebra
from ..groups.cyclic_product import CyclicProductGroup
from ..ptuple.charlattice import CharLattice
from ..ptuple.classes import regular_subgroup_mask
from ..ptuple.signature import LambdaSignature
from ..ptuple.tuples import PTuple, tuple_label, tuple_weight
from ..utils.exceptions import ConstructionError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class SymbolicLatticeSRing:
    """
    The span of ``R(a)`` over a meet/join-closed node set containing the bottom
    and top tuples.

    The ``R(a)`` are linearly independent, so the dimension is the number of
    nodes.

    Attributes:
        sig: Signature of the ambient group
        nodes: Canonical tuples, lexicographically
        algebra: The ambient W(G)
    """

    def __init__(self, sig: LambdaSignature, nodes: Iterable[PTuple]):
        self.sig = sig
        self.algebra: SymbolicRationalAlgebra = w_algebra(sig)
        self.nodes: List[PTuple] = sorted({self.algebra._check(a) for a in nodes})

    @property
    def dimension(self) -> int:
        return len(self.nodes)

    def basis(self) -> List[Vector]:
        return [self.algebra.R(a) for a in self.nodes]

    def weights(self) -> List[int]:
        """``log_p |R(a)|`` per node."""
        return [tuple_weight(a) for a in self.nodes]

    @cached_property
    def node_lattice(self) -> CharLattice:
        """The nodes as a sublattice of the canonical-tuple lattice."""
        return CharLattice(self.sig, self.nodes)

    def concrete(self, G: CyclicProductGroup = None, field: CoefficientField = RATIONALS) -> SchurRing:
        """
        Instantiate over the concrete group: basic sets are the classes of
        ``g ~ h`` iff they lie in the same regular subgroups ``R(a)``.

        Raises:
            CapExceededError: Above the ``concrete_crosscheck_order`` setting
        """
        G = G or self.algebra.group()
        membership = np.stack([regular_subgroup_mask(a, G) for a in self.nodes], axis=1)
        _, labels = np.unique(membership, axis=0, return_inverse=True)
        partition = SchurPartition(G, labels_to_blocks(np.asarray(labels).reshape(-1)))
        S = SchurRing(partition, field, name=f"lattice over {self.sig.describe()}")
        if S.dimension != self.dimension:
            raise ConstructionError(
                f"concrete lattice S-ring has dimension {S.dimension}, expected {self.dimension}")
        return S

    def to_json(self) -> Dict[str, Any]:
        return {
            "signature": self.sig.describe(),
            "nodes": [tuple_label(a) for a in self.nodes],
            "weights": self.weights(),
            "dimension": self.dimension,
        }

    def __repr__(self) -> str:
        return f"<SymbolicLatticeSRing {self.sig} dimension={self.dimension}>"


def symbolic_lattice_sring(sig: LambdaSignature, nodes: Iterable[PTuple]) -> SymbolicLatticeSRing:
    """
    Add the bottom and top tuples to ``nodes`` and check the span is an S-ring.

    Raises:
        UnsupportedPrimeError: For ``p = 2``
        TupleError: If a node is not canonical
        ConstructionError: If the nodes are not closed under meet and join
    """
    nodes = list(nodes) + [sig.bottom, sig.top]
    S = SymbolicLatticeSRing(sig, nodes)
    check = check_symbolic_closure(S.algebra, S.basis())
    if not check:
        raise ConstructionError(f"node set does not span an S-ring: {check.witness}", details=check.details)
    logger.debug("symbolic_lattice_sring", signature=sig.describe(), dimension=S.dimension)
    return S
