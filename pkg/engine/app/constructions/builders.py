"""Named constructions for the registry; parameters arrive as plain JSON-like dicts."""

from typing import Any, Dict, List

from .base import SRingConstruction
from .basic import cyclotomic, full_algebra, multiplier_automorphism, trivial
from .lattice import SubgroupLattice, lattice_sring
from .products import cyclic_dot_product, dot_product, wedge_product
from ..algebra.field import CoefficientField
from ..algebra.schur_ring import SchurRing
from ..groups.automorphisms import GroupAutomorphism, automorphism_group_generators
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.subgroups import Subgroup, normal_subgroups
from ..utils.exceptions import ConstructionError

FACTOR_KINDS = ("trivial", "full")


def _factor(kind: str, group: FiniteGroup, field: CoefficientField) -> SchurRing:
    if kind == "trivial":
        return trivial(group, field)
    if kind == "full":
        return full_algebra(group, field)
    raise ConstructionError(f"unknown factor kind {kind!r}", details={"known": list(FACTOR_KINDS)})


def _cyclic_order(group: FiniteGroup, construction: str) -> int:
    if not (isinstance(group, CyclicProductGroup) and group.rank == 1):
        raise ConstructionError(f"{construction} parameters refer to a cyclic group Z_n",
                                details={"group": group.describe()})
    return group.order


class TrivialConstruction(SRingConstruction):
    """Basic sets {1} and G - {1}."""

    def __init__(self):
        super().__init__("trivial", "basic")

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        return trivial(group, field)


class FullAlgebraConstruction(SRingConstruction):
    """The whole group algebra."""

    def __init__(self):
        super().__init__("full", "basic")

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        return full_algebra(group, field)


class CyclotomicConstruction(SRingConstruction):
    """
    Orbits of a group of automorphisms.

    Parameters (one of):
        units: multipliers ``x -> u x`` on Z_n
        automorphisms: ``"all"`` for Aut(G) or ``"negation"`` for ``x -> x^-1`` (abelian G)
    """

    def __init__(self):
        super().__init__("cyclotomic", "basic")

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        units = params.get("units")
        if units is not None:
            n = _cyclic_order(group, "unit")
            gens: List[GroupAutomorphism] = [multiplier_automorphism(group, int(u) % n) for u in units
                                             if int(u) % n != 1 % n]
            return cyclotomic(group, gens, field, name=f"cyclotomic{sorted(int(u) for u in units)}")
        which = params.get("automorphisms", "all")
        if which == "all":
            return cyclotomic(group, automorphism_group_generators(group), field, name="rational")
        if which == "negation":
            if not group.is_abelian():
                raise ConstructionError("inversion is an automorphism only of abelian groups")
            return cyclotomic(group, [GroupAutomorphism(group, group.inverses, name="negation")], field,
                              name="negation")
        raise ConstructionError(f"unknown automorphism set {which!r}", details={"known": ["all", "negation"]})


class LatticeConstruction(SRingConstruction):
    """
    Span of subgroup sums over a lattice of normal subgroups.

    Parameters:
        subgroups: generator lists, one per member (defaults to every normal subgroup)
        include_bounds: add {1} and G (default true)
    """

    def __init__(self):
        super().__init__("lattice", "lattice")

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        specs = params.get("subgroups")
        if specs is None:
            members = normal_subgroups(group)
        else:
            members = [Subgroup.generated_by(group, [int(g) for g in gens]) for gens in specs]
        if params.get("include_bounds", True):
            members = members + [Subgroup.trivial(group), Subgroup.whole(group)]
        result = lattice_sring(SubgroupLattice(group, members), field)
        if not isinstance(result, SchurRing):
            raise ConstructionError("lattice without 1 and G spans only a PS-ring",
                                    details={"dimension": result.dimension})
        return result


class DotConstruction(SRingConstruction):
    """
    Dot product of a trivial or full factor with another.

    Parameters:
        factor: order ``a`` of the first factor of Z_n (coprime to ``n / a``), or
        split: number of leading coordinates of a cyclic product forming the first factor
        left, right: ``"trivial"`` or ``"full"``
    """

    def __init__(self):
        super().__init__("dot", "product")

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        left, right = params.get("left", "trivial"), params.get("right", "trivial")
        if params.get("factor") is not None:
            n = _cyclic_order(group, "factor")
            a = int(params["factor"])
            if a < 1 or n % a:
                raise ConstructionError(f"{a} does not divide {n}")
            return cyclic_dot_product(_factor(left, CyclicProductGroup.cyclic(a), field),
                                      _factor(right, CyclicProductGroup.cyclic(n // a), field))
        if not isinstance(group, CyclicProductGroup) or params.get("split") is None:
            raise ConstructionError("dot needs 'factor' (cyclic groups) or 'split' (cyclic products)")
        split = int(params["split"])
        if not 0 < split < group.rank:
            raise ConstructionError(f"split {split} must lie strictly between 0 and {group.rank}")
        H = CyclicProductGroup(group.moduli[:split])
        K = CyclicProductGroup(group.moduli[split:])
        return dot_product(_factor(left, H, field), _factor(right, K, field))


class WedgeConstruction(SRingConstruction):
    """
    Wedge product over Z_n along subgroups of orders ``h <= k``.

    Parameters:
        h, k: subgroup orders with ``1 < h``, ``h | k``, ``k | n`` and ``k < n``
        inner: factor kind over K (default trivial)
        outer: factor kind over G/H (default trivial)
    """

    def __init__(self):
        super().__init__("wedge", "product")

    def required_params(self) -> List[str]:
        return ["h", "k"]

    def build(self, group: FiniteGroup, field: CoefficientField, params: Dict[str, Any]) -> SchurRing:
        n = _cyclic_order(group, "wedge")
        h, k = int(params["h"]), int(params["k"])
        if h < 1 or k < 1 or n % k or k % h:
            raise ConstructionError(f"need h | k | n, got h={h}, k={k}, n={n}")
        H = Subgroup.generated_by(group, [n // h])
        K = Subgroup.generated_by(group, [n // k])
        S_K = _factor(params.get("inner", "trivial"), CyclicProductGroup.cyclic(k), field)
        S_Q = _factor(params.get("outer", "trivial"), CyclicProductGroup.cyclic(n // h), field)
        return wedge_product(S_K, S_Q, H, K)


def default_constructions() -> List[SRingConstruction]:
    return [TrivialConstruction(), FullAlgebraConstruction(), CyclotomicConstruction(),
            LatticeConstruction(), DotConstruction(), WedgeConstruction()]
