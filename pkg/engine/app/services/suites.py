"""Empirical suites over families of small groups, parallelised over independent instances."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..algebra.schur_ring import is_rational, power_map_permutation
from ..automorphisms.sring import aut_sring, sring_isomorphisms
from ..config import get_settings
from ..constructions.enumeration import (
    unit_orbit_partition,
    enumerate_cyclic_srings,
    exhaustive_srings,
    srings_from_class_partitions,
    unit_subgroups,
)
from ..constructions.lattice import divisor_sublattices, lattice_sring, normal_sublattices
from ..groups.automorphisms import automorphism_classes
from ..groups.cayley import CayleyGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..utils.exceptions import AlgebraError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class SuiteOutcome:
    """Instances examined by a suite and the violations found."""

    name: str
    instances: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "SuiteOutcome") -> None:
        self.instances += other.instances
        self.violations.extend(other.violations)

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "instances": self.instances, "violations": self.violations[:20],
                "violation_count": len(self.violations)}


def run_parallel(worker: Callable[[Any], SuiteOutcome], items: Iterable[Any], name: str,
                 jobs: Optional[int] = None) -> SuiteOutcome:
    """Map ``worker`` over ``items`` (in processes when ``jobs > 1``) and merge in input order."""
    items = list(items)
    jobs = jobs or get_settings().jobs
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, items))
    else:
        parts = [worker(item) for item in items]
    total = SuiteOutcome(name)
    for part in parts:
        total.merge(part)
    logger.info("suite_finished", suite=name, instances=total.instances, violations=len(total.violations))
    return total


def _cyclic_srings(n: int, exhaustive_up_to: int = 0):
    srings = {S.fingerprint(): S for S in enumerate_cyclic_srings(n)}
    if n <= exhaustive_up_to:
        for S in exhaustive_srings(CyclicProductGroup.cyclic(n)):
            srings.setdefault(S.fingerprint(), S)
    return [srings[k] for k in sorted(srings)]


def abelian_aut_worker(n: int, exhaustive_up_to: int = 10) -> SuiteOutcome:
    """Every S-ring over Z_n has an abelian automorphism group (characteristic 0)."""
    outcome = SuiteOutcome("abelian-aut")
    for S in _cyclic_srings(n, exhaustive_up_to):
        outcome.instances += 1
        aut = aut_sring(S)
        if not aut.is_abelian():
            outcome.violations.append({"n": n, "blocks": [T.tolist() for T in S.blocks], "aut_order": aut.order})
    return outcome


def rigidity_worker(n: int, exhaustive_up_to: int = 10) -> SuiteOutcome:
    """
    Distinct S-rings over Z_n are never isomorphic; up to ``exhaustive_up_to``
    the recursive enumeration also matches the brute-force search.
    """
    outcome = SuiteOutcome("rigidity")
    srings = enumerate_cyclic_srings(n)
    if n <= exhaustive_up_to:
        outcome.instances += 1
        brute = {S.fingerprint() for S in exhaustive_srings(CyclicProductGroup.cyclic(n))}
        generated = {S.fingerprint() for S in srings}
        if brute != generated:
            outcome.violations.append({"n": n, "missing": len(brute - generated), "extra": len(generated - brute)})
    for i, S1 in enumerate(srings):
        for S2 in srings[i + 1:]:
            outcome.instances += 1
            if S1.dimension != S2.dimension or S1.partition.size_multiset() != S2.partition.size_multiset():
                continue
            if sring_isomorphisms(S1, S2, limit=1):
                outcome.violations.append({"n": n, "first": S1.name, "second": S2.name})
    return outcome


def rational_lattice_worker(n: int) -> SuiteOutcome:
    """The rational S-rings over Z_n are exactly the divisor-sublattice S-rings."""
    outcome = SuiteOutcome("rational-lattice")
    outcome.instances = 1
    rational = {S.fingerprint() for S in enumerate_cyclic_srings(n) if is_rational(S)}
    lattices = {lattice_sring(L, check=False).fingerprint() for L in divisor_sublattices(n)}
    if rational != lattices:
        outcome.violations.append({"n": n, "rational_only": len(rational - lattices),
                                   "lattice_only": len(lattices - rational)})
    return outcome


def power_map_worker(n: int) -> SuiteOutcome:
    """
    Over Z_n: power maps permute basic sets, automorphisms commute with them,
    and automorphisms of cyclotomic S-rings move each basic set to a power of itself.
    """
    outcome = SuiteOutcome("power-maps")
    units = [m for m in range(1, max(n, 2)) if gcd(m, n) == 1]
    cyclotomic = {unit_orbit_partition(n, sub).fingerprint() for sub in unit_subgroups(n)}
    for S in enumerate_cyclic_srings(n):
        outcome.instances += 1
        try:
            powers = {m: power_map_permutation(S, m) for m in units}
        except AlgebraError as exc:
            outcome.violations.append({"n": n, "ring": S.name, "property": "power map", "error": str(exc)})
            continue
        aut = aut_sring(S)
        for perm in aut.elements:
            phi = np.asarray(perm, dtype=np.int64)
            for m, sigma in powers.items():
                if not np.array_equal(phi[sigma], sigma[phi]):
                    outcome.violations.append({"n": n, "ring": S.name, "property": "commutes", "m": m})
            if S.fingerprint() in cyclotomic:
                for i in range(S.dimension):
                    if not any(sigma[i] == phi[i] for sigma in powers.values()):
                        outcome.violations.append({"n": n, "ring": S.name, "property": "power of block",
                                                   "block": i})
    return outcome


def dihedral_rational_worker(k: int) -> SuiteOutcome:
    """Every rational S-ring over the dihedral group of order 2k is a normal-subgroup lattice S-ring."""
    outcome = SuiteOutcome("dihedral-rational")
    D = CayleyGroup.dihedral(k)
    rational = srings_from_class_partitions(D, automorphism_classes(D))
    lattices = {lattice_sring(L, check=False).fingerprint() for L in normal_sublattices(D)}
    for S in rational:
        outcome.instances += 1
        if S.fingerprint() not in lattices:
            outcome.violations.append({"k": k, "blocks": [T.tolist() for T in S.blocks]})
    return outcome


def abelian_aut_suite(ns: Sequence[int], jobs: Optional[int] = None) -> SuiteOutcome:
    return run_parallel(abelian_aut_worker, ns, "abelian-aut", jobs)


def rigidity_suite(ns: Sequence[int], jobs: Optional[int] = None) -> SuiteOutcome:
    return run_parallel(rigidity_worker, ns, "rigidity", jobs)


def rational_lattice_suite(ns: Sequence[int], jobs: Optional[int] = None) -> SuiteOutcome:
    return run_parallel(rational_lattice_worker, ns, "rational-lattice", jobs)


def power_map_suite(ns: Sequence[int], jobs: Optional[int] = None) -> SuiteOutcome:
    return run_parallel(power_map_worker, ns, "power-maps", jobs)


def dihedral_rational_suite(ks: Sequence[int], jobs: Optional[int] = None) -> SuiteOutcome:
    return run_parallel(dihedral_rational_worker, ks, "dihedral-rational", jobs)
