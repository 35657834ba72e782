"""Trivial and cyclotomic S-rings."""

from math import gcd
from typing import Sequence

from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.partition import SchurPartition
from ..algebra.schur_ring import SchurRing
from ..groups.automorphisms import GroupAutomorphism, orbits
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..utils.exceptions import ConstructionError, NotSchurRingError, VerificationError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def trivial(group: FiniteGroup, field: CoefficientField = RATIONALS) -> SchurRing:
    """The S-ring with basic sets ``{1}`` and ``G - {1}``."""
    return SchurRing.trivial(group, field)


def full_algebra(group: FiniteGroup, field: CoefficientField = RATIONALS) -> SchurRing:
    """The whole group algebra (singleton basic sets)."""
    return SchurRing.group_algebra(group, field)


def cyclotomic(group: FiniteGroup, generators: Sequence[GroupAutomorphism],
               field: CoefficientField = RATIONALS, name: str = None) -> SchurRing:
    """
    Orbits of a group of automorphisms as basic sets.

    Args:
        group: The group
        generators: Automorphisms generating the acting group; empty gives the full algebra

    Raises:
        ConstructionError: If a generator belongs to another group
        VerificationError: If the orbit partition fails the Schur check
    """
    for phi in generators:
        if phi.group is not group and phi.group != group:
            raise ConstructionError(f"{phi} is not an automorphism of {group.describe()}")
    partition = SchurPartition(group, orbits(list(generators), group), check=False)
    try:
        S = SchurRing(partition, field, name=name or "cyclotomic")
    except NotSchurRingError as exc:
        raise VerificationError(f"orbit partition is not Schur: {exc.message}", details=exc.details)
    logger.debug("cyclotomic", group=group.describe(), generators=len(generators), dimension=S.dimension)
    return S


def multiplier_automorphism(group: CyclicProductGroup, unit: int) -> GroupAutomorphism:
    """``x -> u x`` on Z_n.

    Raises:
        ConstructionError: If the group is not cyclic or ``u`` is not a unit
    """
    if group.rank != 1:
        raise ConstructionError("multipliers act on a single cyclic factor")
    n = group.order
    if gcd(unit, n) != 1:
        raise ConstructionError(f"{unit} is not a unit modulo {n}")
    return GroupAutomorphism(group, (group.elements() * unit) % n, name=f"x->{unit}x")


def cyclotomic_by_units(n: int, units: Sequence[int], field: CoefficientField = RATIONALS) -> SchurRing:
    """Cyclotomic S-ring over Z_n for the subgroup of units generated by ``units``."""
    G = CyclicProductGroup.cyclic(n)
    return cyclotomic(G, [multiplier_automorphism(G, u % n) for u in units if u % n != 1 % n], field)
