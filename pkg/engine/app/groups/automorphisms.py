"""Group automorphisms, Aut(G) generators for abelian groups, and orbits."""

from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import primitive_root

from .base import FiniteGroup
from .cayley import CayleyGroup
from .cyclic_product import CyclicProductGroup
from .isomorphism import extend_homomorphism
from .permgroup import PermGroup
from .subgroups import Subgroup, all_subgroups
from ..utils.exceptions import (
    CyclicGroupError,
    GroupError,
    NotAbelianError,
    NotPrimePowerError,
)
from ..utils.logging import get_logger

logger = get_logger(__name__)


class GroupAutomorphism:
    """An automorphism stored as the image of every element."""

    def __init__(self, group: FiniteGroup, images: Sequence[int], name: str = None):
        images = np.asarray(images, dtype=np.int64)
        if images.shape != (group.order,):
            raise GroupError("automorphism image array has the wrong length")
        if images[0] != 0 or np.unique(images).size != group.order:
            raise GroupError("map is not a bijection fixing the identity")
        # f(g s) = f(g) f(s) for every g and every generator s makes f a homomorphism
        els = group.elements()
        gens = np.asarray(group.greedy_generators(), dtype=np.int64)
        lhs = images[group.mul_array(els[:, None], gens[None, :])]
        rhs = group.mul_array(images[:, None], images[gens][None, :])
        if not np.array_equal(lhs, rhs):
            raise GroupError("map is not a homomorphism")
        images.setflags(write=False)
        self.group = group
        self.images = images
        self.name = name or "automorphism"

    @classmethod
    def from_generator_images(cls, group: CyclicProductGroup, images: Sequence[Sequence[int]],
                              name: str = None) -> "GroupAutomorphism":
        """
        Define an automorphism of a cyclic product by the images of ``e_1 .. e_k``.

        Args:
            group: The group
            images: Exponent tuples, one per standard generator
            name: Optional description

        Raises:
            GroupError: If an image has the wrong order or the map is not bijective
        """
        V = np.asarray(images, dtype=np.int64).reshape(group.rank, group.rank)
        for i, m in enumerate(group.moduli):
            if group.index_of(V[i] * m) != 0:
                raise GroupError(f"image of generator {i} has order not dividing {m}")
        mapped = group.indices_of(group.coords @ V)
        return cls(group, mapped, name=name)

    def __call__(self, g: int) -> int:
        return int(self.images[g])

    def apply_set(self, elements: Sequence[int]) -> np.ndarray:
        return np.sort(self.images[np.asarray(elements, dtype=np.int64)])

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``self o other``."""
        return GroupAutomorphism(self.group, self.images[other.images])

    def as_permutation(self):
        return tuple(int(x) for x in self.images)

    def __repr__(self) -> str:
        return f"<GroupAutomorphism {self.name} of {self.group.describe()}>"


def _unit_generators_mod_prime_power(p: int, lam: int) -> List[int]:
    if p == 2:
        if lam == 1:
            return []
        if lam == 2:
            return [-1]
        return [-1, 5]
    return [int(primitive_root(p ** lam))]


def _unit_group_generators(n: int) -> List[int]:
    """Greedy generating set of the unit group mod n."""
    if n <= 2:
        return []
    units = [u for u in range(1, n) if np.gcd(u, n) == 1]
    gens: List[int] = []
    span = {1}
    for u in units:
        if u in span:
            continue
        gens.append(u)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % n
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def aut_generators(G: FiniteGroup) -> List[GroupAutomorphism]:
    """
    Generators of Aut(G) for a finite abelian group given as a cyclic product.

    Per prime, with exponents ``lambda_i``:

    * unit scalings of each coordinate (a primitive root mod ``p^lambda``;
      ``-1`` and ``5`` when ``p = 2``);
    * transvections ``e_j -> e_j + p^max(0, lambda_i - lambda_j) e_i`` for
      every ordered pair ``i != j``;
    * swaps of coordinates with equal exponent.

    A single modulus ``Z_n`` uses generators of its unit group directly.

    Raises:
        NotAbelianError: For non-abelian input
        NotPrimePowerError: If several moduli are given and one is not a prime power
    """
    if not isinstance(G, CyclicProductGroup):
        if not G.is_abelian():
            raise NotAbelianError(f"{G.describe()} is not abelian")
        raise GroupError("aut_generators needs an abelian group given as a cyclic product")
    if G.rank == 1:
        n = G.order
        return [
            GroupAutomorphism(G, (G.elements() * u) % n, name=f"x->{u}x")
            for u in _unit_group_generators(n)
        ]
    pp = G.prime_power_moduli
    if pp is None:
        raise NotPrimePowerError(f"moduli {G.moduli} are not all prime powers")

    k = G.rank
    identity = np.eye(k, dtype=np.int64)
    gens: List[GroupAutomorphism] = []
    by_prime: Dict[int, List[int]] = {}
    for i, (p, lam) in enumerate(pp):
        if lam > 0:
            by_prime.setdefault(p, []).append(i)

    for p, idx in sorted(by_prime.items()):
        for i in idx:
            for u in _unit_generators_mod_prime_power(p, pp[i][1]):
                V = identity.copy()
                V[i, i] = u
                gens.append(GroupAutomorphism.from_generator_images(G, V, name=f"e{i}->{u}e{i}"))
        for i in idx:
            for j in idx:
                if i == j:
                    continue
                c = p ** max(0, pp[i][1] - pp[j][1])
                V = identity.copy()
                V[j, i] += c
                gens.append(GroupAutomorphism.from_generator_images(G, V, name=f"e{j}->e{j}+{c}e{i}"))
        for a, i in enumerate(idx):
            for j in idx[a + 1:]:
                if pp[i][1] == pp[j][1]:
                    V = identity.copy()
                    V[[i, j]] = V[[j, i]]
                    gens.append(GroupAutomorphism.from_generator_images(G, V, name=f"swap{i},{j}"))
    logger.debug("aut_generators", group=G.describe(), count=len(gens))
    return gens


def orbits(gens: Sequence[GroupAutomorphism], G: FiniteGroup) -> List[List[int]]:
    """
    Finest partition of G into blocks closed under every generator.

    Computed as connected components of the graph with edges ``g -> phi(g)``.

    Returns:
        Sorted blocks, ordered by least element
    """
    n = G.order
    if not gens:
        return [[g] for g in range(n)]
    src = np.concatenate([np.arange(n)] * len(gens))
    dst = np.concatenate([phi.images for phi in gens])
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return partition_from_labels(labels)


def partition_from_labels(labels: np.ndarray) -> List[List[int]]:
    """Turn a label array into blocks ordered by least element."""
    labels = np.asarray(labels)
    blocks: Dict[int, List[int]] = {}
    for g, lab in enumerate(labels.tolist()):
        blocks.setdefault(lab, []).append(g)
    return sorted(blocks.values(), key=lambda b: b[0])


def brute_force_automorphisms(G: FiniteGroup) -> List[GroupAutomorphism]:
    """
    Every automorphism, by trying all images of a generating set.

    Intended as an oracle for small groups.
    """
    if isinstance(G, CyclicProductGroup) and G.order > 1:
        gens = [G.basis_element(i) for i in range(G.rank)]
    else:
        gens = G.greedy_generators()
    if not gens:
        return [GroupAutomorphism(G, G.elements(), name="identity")]
    candidates = []
    for g in gens:
        candidates.append(np.flatnonzero(G.element_orders == G.element_orders[g]).tolist())
    result = []
    for images in product(*candidates):
        mapping = extend_homomorphism(G, G, gens, images)
        if mapping is not None and np.unique(mapping).size == G.order:
            result.append(GroupAutomorphism(G, mapping))
    result.sort(key=lambda phi: phi.as_permutation())
    return result


def automorphism_group_generators(G: FiniteGroup) -> List[GroupAutomorphism]:
    """Aut(G) generators: structured for cyclic products, brute force otherwise."""
    if isinstance(G, CyclicProductGroup) and (G.rank <= 1 or G.prime_power_moduli is not None):
        return aut_generators(G)
    return brute_force_automorphisms(G)


def automorphism_group(G: FiniteGroup) -> PermGroup:
    """Aut(G) as a permutation group on element indices."""
    return PermGroup(G.order, [phi.as_permutation() for phi in automorphism_group_generators(G)])


def automorphism_classes(G: FiniteGroup) -> List[List[int]]:
    """Orbits of Aut(G) on G."""
    return orbits(automorphism_group_generators(G), G)


def is_characteristic(H: Subgroup, G: FiniteGroup = None,
                      gens: Optional[Sequence[GroupAutomorphism]] = None) -> bool:
    """True iff every generator of Aut(G) maps H onto H."""
    G = G or H.parent
    gens = automorphism_group_generators(G) if gens is None else gens
    return all(H.mask[phi.images[H.elements]].all() for phi in gens)


def noncharacteristic_subgroup(G: FiniteGroup) -> Subgroup:
    """
    A subgroup of a non-cyclic group that is not characteristic.

    For abelian cyclic products: pick a prime whose Sylow subgroup is not
    cyclic and return the factor generated by its coordinate of smallest
    exponent; a transvection moves it. Other groups are searched.

    Raises:
        CyclicGroupError: If G is cyclic
    """
    if G.is_cyclic():
        raise CyclicGroupError(f"{G.describe()} is cyclic; every subgroup is characteristic")
    if isinstance(G, CyclicProductGroup) and G.prime_power_moduli is not None:
        by_prime: Dict[int, List[int]] = {}
        for i, (p, lam) in enumerate(G.prime_power_moduli):
            if lam > 0:
                by_prime.setdefault(p, []).append(i)
        for p, idx in sorted(by_prime.items()):
            if len(idx) >= 2:
                i = min(idx, key=lambda c: (G.prime_power_moduli[c][1], c))
                return Subgroup.generated_by(G, [G.basis_element(i)])
    gens = automorphism_group_generators(G)
    for H in all_subgroups(G):
        if not is_characteristic(H, G, gens):
            return H
    raise GroupError(f"no non-characteristic subgroup found in {G.describe()}")


def moving_automorphism(H: Subgroup, gens: Sequence[GroupAutomorphism] = None) -> GroupAutomorphism:
    """An Aut(G) generator with ``phi(H) != H``."""
    G = H.parent
    gens = automorphism_group_generators(G) if gens is None else gens
    for phi in gens:
        if not H.mask[phi.images[H.elements]].all():
            return phi
    raise GroupError("subgroup is characteristic")


def cayley_group_of(G: FiniteGroup) -> CayleyGroup:
    """Tabulated copy of a group."""
    return G if isinstance(G, CayleyGroup) else CayleyGroup.from_group(G)
