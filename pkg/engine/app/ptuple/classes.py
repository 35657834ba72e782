"""Types T(a), regular subgroups R(a) and automorphism classes O(a) in concrete groups."""

from typing import Dict, List

import numpy as np

from .signature import LambdaSignature
from .tuples import PTuple, canonicalize, check_range, is_canonical
from ..config import get_settings
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.subgroups import Subgroup
from ..utils.exceptions import CapExceededError, TupleError, VerificationError

_type_cache: Dict[tuple, np.ndarray] = {}


def _check_concrete(G: CyclicProductGroup) -> LambdaSignature:
    cap = get_settings().cap_convolution_order
    if G.order > cap:
        raise CapExceededError("group for concrete type computations", G.order, cap)
    return LambdaSignature.of_group(G)


def type_array(G: CyclicProductGroup) -> np.ndarray:
    """
    Type of every element, shape (order, n).

    Coordinate ``c`` of Z_{p^lambda} has order ``p^(lambda - v_p(c))``, so its
    type entry is ``lambda - v_p(c)`` (0 for ``c = 0``).
    """
    sig = _check_concrete(G)
    key = G.moduli
    if key not in _type_cache:
        coords = G.coords
        lam = np.array(sig.lambdas, dtype=np.int64)
        vals = np.zeros_like(coords)
        for k in range(1, max(sig.lambdas) + 1):
            vals += (coords % sig.p ** k == 0) & (coords != 0)
        types = np.where(coords == 0, 0, lam[None, :] - vals)
        types.setflags(write=False)
        _type_cache[key] = types
    return _type_cache[key]


def type_set(a, G: CyclicProductGroup) -> np.ndarray:
    """Elements whose i-th coordinate has order ``p^{a_i}``."""
    sig = LambdaSignature.of_group(G)
    a = check_range(a, sig)
    return np.flatnonzero((type_array(G) == np.array(a)[None, :]).all(axis=1))


def regular_subgroup(a, G: CyclicProductGroup) -> Subgroup:
    """
    R(a): the union of T(b) over all ``b <= a``.

    Raises:
        VerificationError: If the union is not a subgroup of order ``p^{sum a}``
    """
    sig = LambdaSignature.of_group(G)
    a = check_range(a, sig)
    members = np.flatnonzero((type_array(G) <= np.array(a)[None, :]).all(axis=1))
    if members.size != sig.p ** sum(a):
        raise VerificationError(f"|R{a}| = {members.size}, expected {sig.p ** sum(a)}")
    return Subgroup(G, members, check=G.order <= 4096)


def regular_subgroup_mask(a, G: CyclicProductGroup) -> np.ndarray:
    """Membership mask of R(a) without building a Subgroup."""
    return (type_array(G) <= np.array(a)[None, :]).all(axis=1)


def canonical_type_array(G: CyclicProductGroup) -> List[PTuple]:
    """Canonical label of every element's automorphism class."""
    sig = LambdaSignature.of_group(G)
    types = type_array(G)
    cache: Dict[PTuple, PTuple] = {}
    labels = []
    for row in map(tuple, types.tolist()):
        if row not in cache:
            cache[row] = canonicalize(row, sig)
        labels.append(cache[row])
    return labels


def automorphism_class(a, G: CyclicProductGroup) -> np.ndarray:
    """
    O(a): all elements whose type canonicalizes to ``a``.

    Raises:
        TupleError: If ``a`` is not canonical
    """
    sig = LambdaSignature.of_group(G)
    a = check_range(a, sig)
    if not is_canonical(a, sig):
        raise TupleError(f"{a} is not canonical")
    labels = canonical_type_array(G)
    return np.array([g for g, lab in enumerate(labels) if lab == a], dtype=np.int64)


def automorphism_classes_by_tuple(G: CyclicProductGroup) -> Dict[PTuple, List[int]]:
    """All classes O(a) keyed by canonical tuple, in lexicographic order."""
    classes: Dict[PTuple, List[int]] = {}
    for g, lab in enumerate(canonical_type_array(G)):
        classes.setdefault(lab, []).append(g)
    return dict(sorted(classes.items()))
