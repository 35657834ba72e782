"""Dot and wedge products of S-rings."""

from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.element import AlgebraElement
from ..algebra.linalg import span_rank
from ..algebra.partition import SchurPartition
from ..algebra.quotient import QuotientMap
from ..algebra.schur_ring import SchurRing, is_s_set
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.subgroups import Subgroup
from ..utils.exceptions import CompatibilityError, ConstructionError, NotSchurRingError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    if a is b:
        return True
    if isinstance(a, CyclicProductGroup) and isinstance(b, CyclicProductGroup):
        return a == b
    return a.order == b.order and np.array_equal(a.cayley_table(), b.cayley_table())


def _verified(partition: SchurPartition, S: SchurRing, name: str) -> SchurRing:
    try:
        return SchurRing(partition, S.field, name=name)
    except NotSchurRingError as exc:
        raise VerificationError(f"{name} product is not Schur: {exc.message}", details=exc.details)


def dot_product(S_H: SchurRing, S_K: SchurRing, group: FiniteGroup = None,
                embed_H: Sequence[int] = None, embed_K: Sequence[int] = None) -> SchurRing:
    """
    The S-ring with basic sets ``C_i D_j`` over ``G = H x K``.

    Without embeddings the ambient group is the direct product of the two
    cyclic products, with H on the leading coordinates.

    Args:
        S_H: S-ring over H
        S_K: S-ring over K
        group: Ambient group G
        embed_H: ``embed_H[h]`` is the image of ``h`` in G
        embed_K: Same for K

    Raises:
        ConstructionError: If the images are not complementary commuting factors
    """
    if S_H.field != S_K.field:
        raise ConstructionError("factors are over different fields")
    H, K = S_H.group, S_K.group
    if group is None:
        if not (isinstance(H, CyclicProductGroup) and isinstance(K, CyclicProductGroup)):
            raise ConstructionError("an ambient group and embeddings are needed for tabulated factors")
        group = H.direct_product(K)
        embed_H = np.arange(H.order, dtype=np.int64) * K.order
        embed_K = np.arange(K.order, dtype=np.int64)
    embed_H = np.asarray(embed_H, dtype=np.int64)
    embed_K = np.asarray(embed_K, dtype=np.int64)
    if H.order * K.order != group.order:
        raise ConstructionError(f"|H||K| = {H.order * K.order} differs from |G| = {group.order}")
    products = group.mul_array(embed_H[:, None], embed_K[None, :])
    if np.unique(products).size != group.order:
        raise ConstructionError("factors are not complementary: HK does not cover G uniquely")
    if not np.array_equal(products, group.mul_array(embed_K[None, :], embed_H[:, None])):
        raise ConstructionError("factors do not commute elementwise")
    blocks = [products[np.ix_(C, D)].ravel() for C in S_H.blocks for D in S_K.blocks]
    S = _verified(SchurPartition(group, blocks, check=False), S_H, "dot")
    if S.dimension != S_H.dimension * S_K.dimension:
        raise VerificationError("dot product dimension mismatch")
    return S


def cyclic_dot_product(S_a: SchurRing, S_b: SchurRing) -> SchurRing:
    """
    Dot product over ``Z_{ab}`` of S-rings over ``Z_a`` and ``Z_b`` with coprime orders.

    ``Z_a`` embeds by ``x -> b x`` and ``Z_b`` by ``y -> a y``.
    """
    a, b = S_a.group.order, S_b.group.order
    if gcd(a, b) != 1:
        raise ConstructionError(f"Z{a} and Z{b} are not complementary factors of Z{a * b}")
    G = CyclicProductGroup.cyclic(a * b)
    return dot_product(S_a, S_b, G, np.arange(a) * b, np.arange(b) * a)


def _compatibility_dimensions(S_K: SchurRing, embed_K: np.ndarray, S_Q: SchurRing,
                              qmap: QuotientMap, kq: np.ndarray) -> Tuple[int, int, int]:
    """``(dim pi(S_K), dim F(K/H) n S_Q, dim of their intersection)``."""
    Q, field = qmap.quotient_group, S_K.field
    projected = [qmap.project(AlgebraElement.simple_quantity(qmap.group, field, embed_K[T])) for T in S_K.blocks]
    # elements of S_Q supported on K/H are exactly the combinations of basic sets inside K/H
    restricted_basis = [AlgebraElement.simple_quantity(Q, field, D) for D in S_Q.blocks if np.isin(D, kq).all()]
    dim_pi = span_rank(Q, field, projected)
    restricted = len(restricted_basis)
    both = dim_pi + restricted - span_rank(Q, field, projected + restricted_basis)
    return dim_pi, restricted, both


def wedge_product(S_K: SchurRing, S_Q: SchurRing, H: Subgroup, K: Subgroup,
                  embed_K: Optional[Sequence[int]] = None) -> SchurRing:
    """
    Glue an S-ring over K with one over G/H along K/H.

    Basic sets are those of ``S_K`` (moved into G) together with the
    preimages of the ``S_Q`` basic sets lying outside K/H.

    Args:
        S_K: S-ring over K (over the group returned by ``K.as_group()``)
        S_Q: S-ring over the quotient ``G/H``
        H: Normal subgroup with ``1 < H <= K``
        K: Subgroup with ``K < G``
        embed_K: Embedding of S_K's group into G (defaults to ``K.as_group()``)

    Raises:
        ConstructionError: If the subgroups are not admissible
        CompatibilityError: If ``pi(S_K) != F(K/H) n S_Q``; details carry the dimensions
    """
    G = K.parent
    if H.parent is not G:
        raise ConstructionError("H and K live in different groups")
    if H.is_trivial() or K.is_whole() or not H.issubset(K):
        raise ConstructionError("wedge products need 1 < H <= K < G",
                                details={"H": H.order, "K": K.order, "G": G.order})
    if S_K.field != S_Q.field:
        raise ConstructionError("factors are over different fields")
    if embed_K is None:
        K_group, embed_K = K.as_group()
        if not _same_group(K_group, S_K.group):
            raise ConstructionError("S_K is not an S-ring over K")
    embed_K = np.asarray(embed_K, dtype=np.int64)
    if not np.array_equal(np.sort(embed_K), K.elements):
        raise ConstructionError("embedding does not map onto K")
    qmap = QuotientMap(H)
    if not _same_group(qmap.quotient_group, S_Q.group):
        raise ConstructionError("S_Q is not an S-ring over G/H")

    position = np.full(G.order, -1, dtype=np.int64)
    position[embed_K] = np.arange(embed_K.size)
    kq = np.unique(qmap.projection[K.elements])
    h_is_set = is_s_set(S_K, position[H.elements])
    kq_is_set = is_s_set(S_Q, kq)

    images = [tuple(np.unique(qmap.projection[embed_K[T]]).tolist()) for T in S_K.blocks]
    inside = {tuple(D.tolist()) for D in S_Q.blocks if np.isin(D, kq).all()}
    uniform = all(
        np.unique(np.bincount(qmap.projection[embed_K[T]])[list(img)]).size == 1
        and S_K.field.invertible(int(np.bincount(qmap.projection[embed_K[T]])[img[0]]))
        for T, img in zip(S_K.blocks, images)
    )
    compatible = h_is_set and kq_is_set and uniform and set(images) == inside
    if not compatible:
        dims = _compatibility_dimensions(S_K, embed_K, S_Q, qmap, kq)
        if not (h_is_set and kq_is_set and dims[0] == dims[1] == dims[2]):
            raise CompatibilityError(
                f"pi(S_K) has dimension {dims[0]}, F(K/H) n S_Q has dimension {dims[1]}",
                details={"pi_dimension": dims[0], "restricted_dimension": dims[1],
                         "intersection_dimension": dims[2], "H_is_s_set": h_is_set,
                         "K_over_H_is_s_set": kq_is_set},
            )

    blocks: List[np.ndarray] = [embed_K[T] for T in S_K.blocks]
    for D in S_Q.blocks:
        if not np.isin(D, kq).any():
            blocks.append(qmap.preimage(D))
        elif not np.isin(D, kq).all():
            raise ConstructionError("an S_Q basic set straddles K/H")
    partition = SchurPartition(G, blocks, check=False)
    if partition.violation() is not None:
        raise ConstructionError(f"wedge blocks do not partition G: {partition.violation()}")
    S = _verified(partition, S_K, "wedge")
    logger.debug("wedge_product", group=G.describe(), H=H.order, K=K.order, dimension=S.dimension)
    return S
