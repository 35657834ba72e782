"""Schur rings, PS-rings, closure checks and the predicates on them."""

from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from .element import AlgebraElement
from .field import RATIONALS, CoefficientField
from .linalg import SpanBasis
from .partition import Fingerprint, SchurPartition, labels_to_blocks
from ..config import get_settings
from ..groups.automorphisms import automorphism_group_generators
from ..groups.base import FiniteGroup
from ..groups.subgroups import Subgroup, all_subgroups, sort_subgroups
from ..utils.exceptions import AlgebraError, CapExceededError, NotSchurRingError
from ..utils.logging import get_logger

logger = get_logger(__name__)

_CHUNK_CELLS = 1 << 22
_TENSOR_CELLS = 1 << 27


def _pair_codes(G: FiniteGroup, labels: np.ndarray, b: int, targets: np.ndarray) -> np.ndarray:
    """``codes[x, c] = b * block(x) + block(x^-1 t_c)`` for every element ``x``."""
    div = G.mul_array(G.inverses[:, None], targets[None, :])
    return labels[:, None] * b + labels[div]


def _counts(column: np.ndarray, q: int) -> Dict[int, int]:
    codes, counts = np.unique(column, return_counts=True)
    if q:
        counts = counts % q
    keep = counts != 0
    return dict(zip(codes[keep].tolist(), counts[keep].tolist()))


def _difference(g_col: np.ndarray, r_col: np.ndarray, q: int) -> Optional[tuple]:
    a, b = _counts(g_col, q), _counts(r_col, q)
    for code in sorted(a.keys() | b.keys()):
        if a.get(code, 0) != b.get(code, 0):
            return code, a.get(code, 0), b.get(code, 0)
    return None


def product_closure_witness(partition: SchurPartition, field: CoefficientField = RATIONALS) -> Optional[dict]:
    """
    Check that the span of block sums is closed under multiplication.

    The coefficient of ``g`` in ``T_i T_j`` is the number of ``x`` in ``T_i``
    with ``x^-1 g`` in ``T_j``; closure means this count (read in the field)
    is the same for ``g`` and the first element of its block.

    Returns:
        None when closed, otherwise a dict naming the blocks ``(i, j)`` and
        two elements of one block where the product differs
    """
    G = partition.group
    labels = partition.labels
    b = partition.size
    q = field.characteristic
    rep_of = partition.representatives[labels]
    todo = np.flatnonzero(rep_of != np.arange(G.order))
    chunk = max(1, _CHUNK_CELLS // max(G.order, 1))
    for start in range(0, todo.size, chunk):
        gs = todo[start:start + chunk]
        rs = rep_of[gs]
        cg = _pair_codes(G, labels, b, gs)
        cr = _pair_codes(G, labels, b, rs)
        if q == 0:
            cg.sort(axis=0)
            cr.sort(axis=0)
            bad = np.flatnonzero((cg != cr).any(axis=0))
            columns = bad[:1].tolist()
        else:
            columns = range(gs.size)
        for c in columns:
            diff = _difference(cg[:, c], cr[:, c], q)
            if diff is None:
                continue
            code, at_g, at_r = diff
            i, j = divmod(int(code), b)
            return {
                "blocks": [i, j],
                "element": G.label(int(gs[c])),
                "representative": G.label(int(rs[c])),
                "coefficients": [at_g, at_r],
            }
    return None


class SchurRing:
    """
    The S-ring spanned by the block sums of a Schur partition.

    Args:
        partition: Blocks ``T_1 = {1}, ..., T_b``
        field: Coefficient field (rationals by default)
        verify: Re-check product closure; by default only when ``|G|`` is at
            most the ``verify_max_order`` setting
        name: Optional description used in reports

    Raises:
        NotSchurRingError: If an axiom or the closure check fails
    """

    def __init__(self, partition: SchurPartition, field: CoefficientField = RATIONALS,
                 verify: Optional[bool] = None, name: str = None):
        problem = partition.violation()
        if problem is not None:
            raise NotSchurRingError(f"not a Schur partition: {problem}", details={"reason": problem})
        self.partition = partition
        self.group = partition.group
        self.field = field
        self.name = name
        if verify is None:
            verify = self.group.order <= get_settings().verify_max_order
        self.verified = bool(verify)
        if verify:
            witness = product_closure_witness(partition, field)
            if witness is not None:
                raise NotSchurRingError(
                    f"block sums T{witness['blocks'][0]} * T{witness['blocks'][1]} are not closed over {field}",
                    details=witness,
                )

    @classmethod
    def from_blocks(cls, group: FiniteGroup, blocks: Sequence[Sequence[int]], field: CoefficientField = RATIONALS,
                    verify: Optional[bool] = None, name: str = None) -> "SchurRing":
        return cls(SchurPartition(group, blocks), field, verify=verify, name=name)

    @classmethod
    def trivial(cls, group: FiniteGroup, field: CoefficientField = RATIONALS) -> "SchurRing":
        return cls(SchurPartition.trivial(group), field, verify=False, name="trivial")

    @classmethod
    def group_algebra(cls, group: FiniteGroup, field: CoefficientField = RATIONALS) -> "SchurRing":
        return cls(SchurPartition.singletons(group), field, verify=False, name="group algebra")

    @property
    def blocks(self) -> List[np.ndarray]:
        return self.partition.blocks

    @property
    def dimension(self) -> int:
        return self.partition.size

    @property
    def sizes(self) -> np.ndarray:
        return self.partition.sizes

    def block_of(self, g: int) -> int:
        return self.partition.block_of(g)

    def fingerprint(self) -> Fingerprint:
        return self.partition.fingerprint()

    def basis(self) -> List[AlgebraElement]:
        """The basic quantities, in block order."""
        return [AlgebraElement.simple_quantity(self.group, self.field, b) for b in self.blocks]

    def contains(self, x: AlgebraElement) -> bool:
        """``x`` lies in the S-ring iff its coefficients are constant on every block."""
        return self.coordinates(x) is not None

    def coordinates(self, x: AlgebraElement) -> Optional[List]:
        """Coefficients of ``x`` in the basic quantities, or None if ``x`` is outside."""
        zero = self.field.zero
        coords = [zero] * self.dimension
        for k, block in enumerate(self.blocks):
            values = {x.coefficient(int(g)) for g in block}
            if len(values) != 1:
                return None
            coords[k] = values.pop()
        return coords

    @cached_property
    def integer_constants(self) -> np.ndarray:
        """
        ``lam[i, j, k]``: the coefficient of any element of ``T_k`` in ``T_i T_j``, over the integers.

        Raises:
            CapExceededError: If the dense tensor would be too large
        """
        b = self.dimension
        if b ** 3 > _TENSOR_CELLS:
            raise CapExceededError("structure-constant tensor", b ** 3, _TENSOR_CELLS)
        G = self.group
        labels = self.partition.labels
        reps = self.partition.representatives
        tensor = np.empty((b, b, b), dtype=np.int64)
        chunk = max(1, _CHUNK_CELLS // max(G.order, 1))
        for start in range(0, b, chunk):
            rs = reps[start:start + chunk]
            codes = _pair_codes(G, labels, b, rs)
            for c in range(rs.size):
                tensor[:, :, start + c] = np.bincount(codes[:, c], minlength=b * b).reshape(b, b)
        tensor.setflags(write=False)
        return tensor

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """``integer_constants`` read in the coefficient field (reduced mod q for F_q)."""
        constants = self.field.reduce_counts(self.integer_constants)
        constants.setflags(write=False)
        return constants

    def product_of_blocks(self, i: int, j: int) -> Dict[int, int]:
        """``T_i T_j`` in the basic quantities, as ``{k: lambda_ijk}`` with nonzero entries."""
        column = self.structure_constants[i, j]
        return {int(k): int(column[k]) for k in np.flatnonzero(column)}

    def size_identity_holds(self) -> bool:
        """``sum_k lam_ijk |T_k| = |T_i| |T_j|`` for every pair, over the integers."""
        lhs = self.integer_constants @ self.sizes
        return bool(np.array_equal(lhs, np.outer(self.sizes, self.sizes)))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SchurRing) and other.field == self.field
                and other.fingerprint() == self.fingerprint())

    def __hash__(self) -> int:
        return hash((self.field, self.fingerprint()))

    def __repr__(self) -> str:
        return f"<SchurRing dim={self.dimension} over {self.field} of {self.group.describe()}>"


@dataclass
class ClosureCheck:
    """Outcome of a span closure test; ``witness`` names the first failure."""

    closed: bool
    witness: Optional[str] = None
    element: Optional[AlgebraElement] = None
    details: dict = dataclass_field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.closed


def psring_closure(span: Sequence[AlgebraElement]) -> ClosureCheck:
    """
    Test whether a span is closed under multiplication, Hadamard product and inversion.

    Raises:
        AlgebraError: If the span is empty
    """
    if not span:
        raise AlgebraError("cannot test the closure of an empty span")
    group, field = span[0].group, span[0].field
    basis = SpanBasis(group, field, span)
    rows = basis.basis()
    for x in rows:
        r = basis.witness(x.inverse_map())
        if r is not None:
            return ClosureCheck(False, "not closed under inversion", r)
    for a, b in combinations(range(len(rows)), 2):
        r = basis.witness(rows[a].hadamard(rows[b]))
        if r is not None:
            return ClosureCheck(False, "not closed under the Hadamard product", r, {"pair": [a, b]})
    for a in range(len(rows)):
        r = basis.witness(rows[a].hadamard(rows[a]))
        if r is not None:
            return ClosureCheck(False, "not closed under the Hadamard product", r, {"pair": [a, a]})
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            r = basis.witness(rows[a] * rows[b])
            if r is not None:
                return ClosureCheck(False, "not closed under multiplication", r, {"pair": [a, b]})
    return ClosureCheck(True, details={"dimension": basis.dimension})


def is_psring(span: Sequence[AlgebraElement]) -> bool:
    return psring_closure(span).closed


@dataclass
class PSRing:
    """A span that is a PS-ring; ``is_sring`` records whether 1 and G-bar belong to it."""

    group: FiniteGroup
    field: CoefficientField
    span: List[AlgebraElement]
    dimension: int
    contains_one: bool
    contains_whole: bool

    @property
    def is_sring(self) -> bool:
        return self.contains_one and self.contains_whole


def sring_closure(span: Sequence[AlgebraElement]) -> ClosureCheck:
    """PS-ring closure plus membership of 1 and G-bar."""
    check = psring_closure(span)
    if not check.closed:
        return check
    group, field = span[0].group, span[0].field
    basis = SpanBasis(group, field, span)
    for name, x in (("1", AlgebraElement.one(group, field)), ("G", AlgebraElement.whole(group, field))):
        if not basis.contains(x):
            return ClosureCheck(False, f"span does not contain {name}", x)
    return check


def is_sring(candidate: Union[SchurPartition, Sequence[AlgebraElement]],
             field: CoefficientField = RATIONALS) -> bool:
    """
    Partition form: both Schur-partition axioms and product closure of the block sums.
    Span form: PS-ring closure with 1 and G-bar in the span.
    """
    if isinstance(candidate, SchurPartition):
        if candidate.violation() is not None:
            return False
        return product_closure_witness(candidate, field) is None
    return sring_closure(list(candidate)).closed


def basic_sets_of_span(span: Sequence[AlgebraElement]) -> SchurPartition:
    """
    Recover the basic sets of an S-ring given by any spanning set.

    ``g ~ h`` iff every element of the span has equal coefficients at g and h.

    Raises:
        NotSchurRingError: If the span is not an S-ring
    """
    check = sring_closure(list(span))
    if not check.closed:
        raise NotSchurRingError(f"span is not an S-ring: {check.witness}", details=check.details)
    group, field = span[0].group, span[0].field
    rows = SpanBasis(group, field, span).rows
    keys: Dict[tuple, int] = {}
    labels = np.empty(group.order, dtype=np.int64)
    for g in range(group.order):
        key = tuple(field.format(row.get(g, field.zero)) for row in rows)
        labels[g] = keys.setdefault(key, len(keys))
    return SchurPartition(group, labels_to_blocks(labels))


def is_rational(S: SchurRing) -> bool:
    """Every basic set is a union of automorphism classes."""
    labels = S.partition.labels
    return all(np.array_equal(labels[phi.images], labels) for phi in automorphism_group_generators(S.group))


def is_central(S: SchurRing) -> bool:
    """Every basic set is a union of conjugacy classes."""
    if S.group.is_abelian():
        return True
    labels = S.partition.labels
    return all(np.unique(labels[np.asarray(cls)]).size == 1 for cls in S.group.conjugacy_classes())


def is_s_set(S: SchurRing, members: Sequence[int]) -> bool:
    """A 0/1 simple quantity lies in S iff its set is a union of basic sets."""
    mask = np.zeros(S.group.order, dtype=bool)
    mask[np.asarray(members, dtype=np.int64)] = True
    return all(mask[b].all() or not mask[b].any() for b in S.blocks)


def subgroup_s_sets(S: SchurRing, cap: int = None) -> List[Subgroup]:
    """
    All subgroups H with H-bar in S.

    With few blocks, unions of basic sets containing the identity block are
    tested directly; otherwise all subgroups are enumerated and filtered.

    Raises:
        CapExceededError: If subgroup enumeration is needed beyond the cap
    """
    G = S.group
    b = S.dimension
    if b - 1 <= 12:
        sizes = S.sizes.tolist()
        found = []
        for r in range(b):
            for combo in combinations(range(1, b), r):
                total = 1 + sum(sizes[k] for k in combo)
                if G.order % total:
                    continue
                members = np.concatenate([S.blocks[0]] + [S.blocks[k] for k in combo])
                if G.is_subset_subgroup(members):
                    found.append(Subgroup(G, members, check=False))
        return sort_subgroups(found)
    return [H for H in all_subgroups(G, cap=cap) if is_s_set(S, H.elements)]


def is_primitive(S: SchurRing) -> bool:
    """Only the trivial subgroup and G are S-sets."""
    return all(H.is_trivial() or H.is_whole() for H in subgroup_s_sets(S))


def power_map_permutation(S: SchurRing, m: int) -> np.ndarray:
    """
    The permutation of basic sets induced by ``g -> g^m``.

    Raises:
        AlgebraError: If ``m`` is not coprime to ``|G|`` or the image of a basic set is not basic
    """
    G = S.group
    if gcd(m, G.order) != 1:
        raise AlgebraError(f"{m} is not coprime to |G| = {G.order}")
    images = G.power_array(m)
    labels = S.partition.labels
    perm = np.empty(S.dimension, dtype=np.int64)
    for i, block in enumerate(S.blocks):
        targets = np.unique(labels[images[block]])
        if targets.size != 1 or S.blocks[targets[0]].size != block.size:
            raise AlgebraError(f"T{i}^({m}) is not a basic set", details={"block": i, "m": m})
        perm[i] = targets[0]
    return perm
