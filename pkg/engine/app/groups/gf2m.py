"""Additive group of GF(2^m) with multiplication by a primitive element."""

from typing import Sequence, Tuple

import numpy as np

from .automorphisms import GroupAutomorphism
from .cyclic_product import CyclicProductGroup
from ..utils.exceptions import GroupError


def gf2m_additive_group(m: int, poly: Sequence[int]) -> Tuple[CyclicProductGroup, GroupAutomorphism]:
    """
    Build Z_2^m = GF(2)[x]/(poly) and the automorphism "multiply by x".

    Coordinate ``i`` of an element is the coefficient of ``x^i``.

    Args:
        m: Extension degree
        poly: Coefficients of ``poly`` from ``x^0`` up to ``x^m`` (monic)

    Returns:
        ``(group, multiplier)``; powers of ``multiplier`` realize multiplication by ``x^k``

    Raises:
        GroupError: If ``poly`` is malformed or ``x`` does not have order ``2^m - 1``
    """
    poly = [int(c) & 1 for c in poly]
    if m < 1 or len(poly) != m + 1 or poly[m] != 1:
        raise GroupError(f"poly must be monic of degree {m}, given low-to-high coefficients")
    if poly[0] != 1:
        raise GroupError("polynomial divisible by x is not primitive")
    G = CyclicProductGroup((2,) * m)

    # x * (c_0 + ... + c_{m-1} x^{m-1}): shift up, reduce x^m by the low part of poly
    images = []
    for i in range(m):
        v = [0] * m
        if i + 1 < m:
            v[i + 1] = 1
        else:
            v = poly[:m]
        images.append(v)
    multiplier = GroupAutomorphism.from_generator_images(G, images, name="multiply-by-x")

    one = G.index_of([1] + [0] * (m - 1))
    target = 2 ** m - 1
    x, k = int(multiplier.images[one]), 1
    while x != one:
        x = int(multiplier.images[x])
        k += 1
        if k > target:
            break
    if k != target:
        raise GroupError(f"polynomial is not primitive: x has multiplicative order {k}, expected {target}")
    return G, multiplier


def multiplier_power(multiplier: GroupAutomorphism, k: int) -> GroupAutomorphism:
    """The automorphism ``multiplier^k`` (multiplication by ``x^k``)."""
    images = np.arange(multiplier.group.order, dtype=np.int64)
    for _ in range(k):
        images = multiplier.images[images]
    return GroupAutomorphism(multiplier.group, images, name=f"multiply-by-x^{k}")
