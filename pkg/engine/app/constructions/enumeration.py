"""Enumerating S-rings: the cyclic recursion and brute-force partition searches."""

from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors

from .products import cyclic_dot_product, wedge_product
from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.partition import Fingerprint, SchurPartition
from ..algebra.schur_ring import SchurRing, product_closure_witness
from ..config import get_settings
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.subgroups import Subgroup
from ..utils.exceptions import CapExceededError, CompatibilityError, ConstructionError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def set_partitions(k: int) -> Iterator[List[int]]:
    """Restricted growth strings of length ``k``: every set partition of ``range(k)`` once."""
    if k == 0:
        yield []
        return
    labels = [0] * k
    maxima = [0] * k

    while True:
        yield list(labels)
        i = k - 1
        while i > 0 and labels[i] == maxima[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        maxima[i] = max(maxima[i - 1], labels[i])
        for j in range(i + 1, k):
            labels[j] = 0
            maxima[j] = maxima[i]


def unit_subgroups(n: int) -> List[Tuple[int, ...]]:
    """All subgroups of the unit group mod ``n``, as sorted tuples."""
    units = [u for u in range(1, max(n, 2)) if gcd(u, n) == 1] if n > 1 else [0]
    identity = 1 % n if n > 1 else 0

    def close(gens: Sequence[int]) -> Tuple[int, ...]:
        found = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % n if n > 1 else 0
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(found))

    seen = {close([])}
    layer = list(seen)
    while layer:
        new_layer = []
        for sub in layer:
            for u in units:
                if u in sub:
                    continue
                bigger = close(list(sub) + [u])
                if bigger not in seen:
                    seen.add(bigger)
                    new_layer.append(bigger)
        layer = new_layer
    return sorted(seen, key=lambda s: (len(s), s))


def unit_orbit_partition(n: int, units: Sequence[int]) -> SchurPartition:
    """Orbits of a set of multipliers on Z_n (the cyclotomic partition)."""
    G = CyclicProductGroup.cyclic(n)
    images = (np.arange(n)[:, None] * np.asarray(units, dtype=np.int64)[None, :]) % max(n, 1)
    return SchurPartition.from_labels(G, images.min(axis=1), check=False)


@lru_cache(maxsize=None)
def _cyclic_fingerprints(n: int) -> Tuple[Fingerprint, ...]:
    G = CyclicProductGroup.cyclic(n)
    found: Dict[Fingerprint, str] = {}
    found.setdefault(SchurPartition.trivial(G).fingerprint(), "trivial")
    for sub in unit_subgroups(n):
        found.setdefault(unit_orbit_partition(n, sub).fingerprint(), "cyclotomic")
    for a in divisors(n):
        b = n // a
        if 1 < a < b and gcd(a, b) == 1:
            for fa in _cyclic_fingerprints(a):
                for fb in _cyclic_fingerprints(b):
                    S = cyclic_dot_product(_ring(a, fa), _ring(b, fb))
                    found.setdefault(S.fingerprint(), "dot")
    for h in divisors(n):
        for k in divisors(n):
            if not (1 < h <= k < n and k % h == 0):
                continue
            H = Subgroup(G, np.arange(h) * (n // h), check=False)
            K = Subgroup(G, np.arange(k) * (n // k), check=False)
            for fk in _cyclic_fingerprints(k):
                S_K = _ring(k, fk)
                for fq in _cyclic_fingerprints(n // h):
                    try:
                        S = wedge_product(S_K, _ring(n // h, fq), H, K)
                    except (CompatibilityError, ConstructionError):
                        continue
                    found.setdefault(S.fingerprint(), "wedge")
    logger.debug("cyclic_srings", n=n, count=len(found))
    return tuple(sorted(found))


def _ring(n: int, fingerprint: Fingerprint, field: CoefficientField = RATIONALS) -> SchurRing:
    return SchurRing(SchurPartition(CyclicProductGroup.cyclic(n), fingerprint, check=False), field, verify=False)


def enumerate_cyclic_srings(n: int, cap: Optional[int] = None) -> List[SchurRing]:
    """
    Every S-ring over Z_n (rational coefficients), generated recursively.

    An S-ring over a cyclic group is trivial, cyclotomic, a dot product or a
    wedge product; all four families are generated from S-rings over smaller
    cyclic groups and deduplicated by partition.

    Raises:
        CapExceededError: If ``n`` exceeds the ``cap_cyclic_enumeration`` setting
    """
    cap = cap or get_settings().cap_cyclic_enumeration
    if n > cap:
        raise CapExceededError("cyclic group for S-ring enumeration", n, cap)
    if n < 1:
        raise ConstructionError(f"Z{n} is not a group")
    G = CyclicProductGroup.cyclic(n)
    return [SchurRing(SchurPartition(G, fp, check=False), RATIONALS, verify=False, name=f"Z{n}#{i}")
            for i, fp in enumerate(_cyclic_fingerprints(n))]


def srings_from_class_partitions(group: FiniteGroup, classes: Sequence[Sequence[int]],
                                 field: CoefficientField = RATIONALS) -> List[SchurRing]:
    """
    All S-rings whose basic sets are unions of the given classes.

    ``classes`` must partition G with ``{1}`` as a class of its own. Every
    grouping of the remaining classes is tested for inverse-closure first and
    then for product closure.

    Raises:
        ConstructionError: If the classes do not partition G or ``{1}`` is not a class
    """
    classes = [np.asarray(sorted(c), dtype=np.int64) for c in classes]
    covered = np.concatenate(classes) if classes else np.array([], dtype=np.int64)
    if covered.size != group.order or np.unique(covered).size != group.order:
        raise ConstructionError("classes do not partition the group")
    identity = [i for i, c in enumerate(classes) if c.size == 1 and c[0] == 0]
    if not identity:
        raise ConstructionError("the identity must form a class of its own")
    rest = [c for i, c in enumerate(classes) if i != identity[0]]
    class_of = np.empty(group.order, dtype=np.int64)
    for i, c in enumerate(rest):
        class_of[c] = i
    found: List[SchurRing] = []
    for growth in set_partitions(len(rest)):
        grouping = np.asarray(growth, dtype=np.int64)
        labels = np.zeros(group.order, dtype=np.int64)
        if rest:
            mask = np.ones(group.order, dtype=bool)
            mask[0] = False
            labels[mask] = grouping[class_of[mask]] + 1
        partition = SchurPartition.from_labels(group, labels, check=False)
        if partition.inverse_permutation is None:
            continue
        if product_closure_witness(partition, field) is None:
            found.append(SchurRing(partition, field, verify=False))
    found.sort(key=lambda S: S.fingerprint())
    logger.debug("class_partition_search", group=group.describe(), classes=len(rest), found=len(found))
    return found


def exhaustive_srings(group: FiniteGroup, field: CoefficientField = RATIONALS,
                      cap: Optional[int] = None) -> List[SchurRing]:
    """
    Every S-ring over a small group, by testing all partitions of ``G - {1}``.

    Raises:
        CapExceededError: If ``|G|`` exceeds the ``cap_exhaustive_order`` setting
    """
    cap = cap or get_settings().cap_exhaustive_order
    if group.order > cap:
        raise CapExceededError("group for exhaustive S-ring search", group.order, cap)
    return srings_from_class_partitions(group, [[g] for g in range(group.order)], field)
