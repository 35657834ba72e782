"""Worked examples reproduced by name, each checked against its stated outcome."""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .reports import (
    aut_report,
    classes_report,
    closure_report,
    conv_pair_report,
    lattice_report,
    realization_report,
    sring_report,
    to_plain,
)
from .suites import (
    SuiteOutcome,
    abelian_aut_suite,
    dihedral_rational_suite,
    power_map_suite,
    rational_lattice_suite,
    rigidity_suite,
)
from ..algebra.element import AlgebraElement
from ..algebra.field import RATIONALS, CoefficientField
from ..algebra.linalg import KeyedSpan
from ..algebra.partition import SchurPartition
from ..algebra.schur_ring import (
    SchurRing,
    basic_sets_of_span,
    is_primitive,
    is_sring,
    sring_closure,
    subgroup_s_sets,
)
from ..algebra.symbolic import Vector, check_symbolic_closure, w_algebra
from ..automorphisms.realization import realize_group
from ..automorphisms.sring import aut_sring, sring_isomorphisms
from ..constructions.converse import conv_pair
from ..groups.automorphisms import automorphism_classes
from ..groups.cayley import CayleyGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.gf2m import gf2m_additive_group
from ..groups.isomorphism import symmetric_degree
from ..ptuple.charlattice import char_lattice
from ..ptuple.classes import regular_subgroup_mask
from ..ptuple.signature import LambdaSignature
from ..ptuple.tuples import PTuple, canonical_tuples, count_classes, tuple_label
from ..schemas.reports import CheckResult, ReproductionReport
from ..utils.exceptions import SpecParseError
from ..utils.logging import get_logger

logger = get_logger(__name__)

Outcome = Tuple[List[CheckResult], Dict[str, Any]]

# x^6 + x^4 + x^3 + x + 1, low to high
Z2POW6_POLY = (1, 1, 0, 1, 1, 0, 1)

# 1-based labels of the p3-only vectors over lambda = (1, 3, 5)
P3_ONLY_VECTORS: Tuple[Dict[int, int], ...] = (
    {1: 1},
    {5: 1},
    {6: 1, 7: 1, 8: -1, 11: -1},
    {8: 1, 11: 3, 12: -1, 13: -1},
    {14: 1},
    {18: 1},
)
P3_ONLY_O_BLOCKS: Tuple[Tuple[int, ...], ...] = (
    (1,), (2, 3, 4, 5), (6, 7, 14), (12, 13), (8, 10, 11), (9, 15, 16, 17, 18),
)

TABLE1_COVERS = [
    ("R(0,0)", "R(0,1)"),
    ("R(0,1)", "R(0,2)"),
    ("R(0,1)", "R(1,1)"),
    ("R(0,2)", "R(1,2)"),
    ("R(1,1)", "R(1,2)"),
    ("R(1,2)", "R(1,3)"),
]

Z2Z8_CLASSES = [
    [(0, 0)],
    [(0, 4)],
    [(1, 0), (1, 4)],
    [(0, 2), (0, 6)],
    [(1, 2), (1, 6)],
    [(a, b) for a in range(2) for b in range(1, 8, 2)],
]


def check(name: str, expected: Any, observed: Any) -> CheckResult:
    expected, observed = to_plain(expected), to_plain(observed)
    return CheckResult(name=name, expected=expected, observed=observed, passed=expected == observed)


def _numbered(sig: LambdaSignature) -> List[PTuple]:
    """Canonical tuples in lexicographic order; label ``H_k`` is entry ``k - 1``."""
    return canonical_tuples(sig)


def _r_vectors(tuples: Sequence[PTuple], rows: Sequence[Dict[int, int]]) -> List[Vector]:
    return [{tuples[k - 1]: c for k, c in row.items()} for row in rows]


def _concrete_span(G: CyclicProductGroup, vectors: Sequence[Vector],
                   field: CoefficientField = RATIONALS) -> List[AlgebraElement]:
    """``sum c_a R(a)-bar`` computed from type masks; valid for any p, including 2."""
    out = []
    for vec in vectors:
        acc = np.zeros(G.order, dtype=np.int64)
        for a, c in vec.items():
            acc[regular_subgroup_mask(a, G)] += int(c)
        out.append(AlgebraElement(G, field, {g: int(v) for g, v in enumerate(acc.tolist()) if v}))
    return out


def _suite_checks(outcomes: Sequence[SuiteOutcome]) -> Outcome:
    checks = [check(f"{o.name}: violations", 0, len(o.violations)) for o in outcomes]
    return checks, {o.name: o.to_json() for o in outcomes}


@dataclass
class ReproducibleExample:
    """A registered example: what it shows and how to run it."""

    example_id: str
    description: str
    runner: Callable[["ReproductionService"], Outcome]


class ReproductionService:
    """Runs worked examples by id and compares their outcomes with the stated ones."""

    def __init__(self, jobs: Optional[int] = None):
        self.jobs = jobs
        self._examples: Dict[str, ReproducibleExample] = {}
        for example in _EXAMPLES:
            self._examples[example.example_id] = example

    def list_examples(self) -> List[str]:
        return list(self._examples)

    def describe(self, example_id: str) -> str:
        return self._get(example_id).description

    def _get(self, example_id: str) -> ReproducibleExample:
        if example_id not in self._examples:
            raise SpecParseError(
                f"unknown example id {example_id!r}",
                error_code="UNKNOWN_EXAMPLE",
                details={"known": self.list_examples()},
            )
        return self._examples[example_id]

    def reproduce(self, example_id: str) -> ReproductionReport:
        """
        Run one example.

        Raises:
            SpecParseError: If the id is unknown
        """
        example = self._get(example_id)
        checks, data = example.runner(self)
        passed = all(c.passed for c in checks)
        logger.info("example_reproduced", example=example_id, passed=passed, checks=len(checks))
        return ReproductionReport(
            example_id=example_id,
            description=example.description,
            passed=passed,
            checks=checks,
            data=to_plain(data),
        )

    def reproduce_all(self, example_ids: Optional[Sequence[str]] = None) -> List[ReproductionReport]:
        return [self.reproduce(e) for e in (example_ids or self.list_examples())]

    # -- characteristic subgroup lattices ------------------------------------

    def table1(self) -> Outcome:
        L = char_lattice(LambdaSignature(3, (1, 3)))
        labels = L.labels
        covers = sorted((labels[a], labels[b]) for a, b in L.poset.covers())
        checks = [
            check("nodes", ["R(0,0)", "R(0,1)", "R(0,2)", "R(1,1)", "R(1,2)", "R(1,3)"], labels),
            check("covering relations", sorted(TABLE1_COVERS), covers),
            check("distributive", True, L.distributive),
        ]
        return checks, {"lattice": lattice_report(L, "table1").model_dump()}

    def table2(self) -> Outcome:
        checks: List[CheckResult] = []
        sig = LambdaSignature(3, (1, 3, 5))
        L = char_lattice(sig)
        H = _numbered(sig)
        checks.append(check("node count", 18, L.size))
        checks.append(check("class count formula", count_classes(sig), L.size))
        checks.append(check("H5, H8, H11, H14", ["R(0,1,2)", "R(0,2,3)", "R(1,1,2)", "R(1,2,3)"],
                            [tuple_label(H[k - 1]) for k in (5, 8, 11, 14)]))
        low, high = L.index_of(H[4]), L.index_of(H[13])
        interval = [x for x in range(L.size) if L.leq[low, x] and L.leq[x, high]]
        sub = L.induced(interval)
        checks.append(check("interval [H5, H14] size", 8, sub.size))
        checks.append(check("interval [H5, H14] atoms", 3, len(sub.poset.upper_covers(sub.poset.minimal_elements()[0]))))
        checks.append(check("distributive", True, L.distributive))
        for p in (5, 7):
            checks.append(check(f"node count at p={p}", 18, char_lattice(LambdaSignature(p, (1, 3, 5))).size))
        return checks, {"lattice": lattice_report(L, "table2").model_dump()}

    def z2z8_classes(self) -> Outcome:
        G = CyclicProductGroup((2, 8))
        coords = G.coords
        observed = sorted(sorted(tuple(int(x) for x in coords[g]) for g in cls) for cls in automorphism_classes(G))
        checks = [
            check("class count", 6, len(observed)),
            check("classes", sorted(sorted(c) for c in Z2Z8_CLASSES), observed),
        ]
        return checks, {"classes": classes_report(G).model_dump()}

    # -- S-rings inside W(G) -------------------------------------------------

    def nonlattice_example(self) -> Outcome:
        checks: List[CheckResult] = []
        data: Dict[str, Any] = {}
        rows = ({1: 1}, {2: 1}, {3: 1, 4: 1}, {5: 1}, {6: 1})
        expected_ssets = [1, 2, 5, 6]

        sig = LambdaSignature(3, (1, 3))
        H = _numbered(sig)
        G = sig.group()
        span = _concrete_span(G, _r_vectors(H, rows))
        S = SchurRing(basic_sets_of_span(span), name="span{1, H2, H3+H4, H5, G}")
        checks.append(check("concrete dimension", 5, S.dimension))
        observed = sorted(sorted(K.elements.tolist()) for K in subgroup_s_sets(S))
        expected = sorted(sorted(np.flatnonzero(regular_subgroup_mask(H[k - 1], G)).tolist())
                          for k in expected_ssets)
        checks.append(check("concrete subgroup S-sets are 1, H2, H5, G", expected, observed))
        data["concrete"] = sring_report(S).model_dump()

        for p in (3, 5):
            sig = LambdaSignature(p, (1, 3))
            A = w_algebra(sig)
            H = _numbered(sig)
            vectors = _r_vectors(H, rows)
            result = check_symbolic_closure(A, vectors)
            checks.append(check(f"symbolic closure at p={p}", True, result.closed))
            checks.append(check(f"symbolic dimension at p={p}", 5, result.details.get("dimension")))
            span_basis = KeyedSpan(A.field, vectors)
            inside = [k for k, a in enumerate(H, start=1) if span_basis.contains(A.R(a))]
            checks.append(check(f"symbolic subgroup S-sets at p={p}", expected_ssets, inside))
        return checks, data

    def p3_only(self) -> Outcome:
        checks: List[CheckResult] = []
        data: Dict[str, Any] = {}
        for p in (3, 5, 7, 11):
            sig = LambdaSignature(p, (1, 3, 5))
            A = w_algebra(sig)
            H = _numbered(sig)
            result = check_symbolic_closure(A, _r_vectors(H, P3_ONLY_VECTORS))
            checks.append(check(f"closed at p={p}", p == 3, result.closed))
            if not result.closed:
                checks.append(check(f"witness at p={p}", True, result.witness is not None))
            data[f"p={p}"] = closure_report(sig.describe(), result).model_dump()

            o_vectors = [{H[k - 1]: 1 for k in block} for block in P3_ONLY_O_BLOCKS]
            o_result = check_symbolic_closure(A, o_vectors, basis="O")
            checks.append(check(f"O-basis form closed at p={p}", p == 3, o_result.closed))

        # p = 2: the same tuples still name subgroups R(a) of Z2 x Z8 x Z32
        H = _numbered(LambdaSignature(3, (1, 3, 5)))
        G = CyclicProductGroup((2, 8, 32))
        concrete = sring_closure(_concrete_span(G, _r_vectors(H, P3_ONLY_VECTORS)))
        checks.append(check("closed over Z2 x Z8 x Z32", False, concrete.closed))
        data["p=2"] = closure_report(G.describe(), concrete).model_dump(exclude={"details"})
        return checks, data

    # -- further examples -----------------------------------------------------

    def z2pow6(self) -> Outcome:
        G, multiplier = gf2m_additive_group(6, Z2POW6_POLY)
        powers = [G.index_of([1, 0, 0, 0, 0, 0])]
        for _ in range(62):
            powers.append(int(multiplier.images[powers[-1]]))
        cosets = [[powers[i + 9 * j] for j in range(7)] for i in range(9)]

        low = sorted(g for C in cosets[:5] for g in C)
        high = sorted(g for C in cosets[5:] for g in C)
        good = SchurPartition(G, [[0], low, high])
        S = SchurRing(good, name="{0}, C0..C4, C5..C8")
        checks = [
            check("multiplicative order of x", 63, len(set(powers))),
            check("is_sring", True, is_sring(good)),
            check("primitive", True, is_primitive(S)),
            check("block sizes", [1, 28, 35], sorted(int(s) for s in S.sizes)),
        ]
        return checks, {"sring": sring_report(S, properties=False).model_dump()}

    def ex_nzchar(self) -> Outcome:
        G = CyclicProductGroup.cyclic(12)
        blocks = [[0], [4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]
        data: Dict[str, Any] = {}
        S_q = SchurRing.from_blocks(G, blocks, RATIONALS, name="Z12 over Q")
        S_3 = SchurRing.from_blocks(G, blocks, CoefficientField.prime(3), name="Z12 over F3")
        aut_q, aut_3 = aut_sring(S_q), aut_sring(S_3)
        cosets = np.flatnonzero(S_3.sizes == 3)
        products = S_3.structure_constants[np.ix_(cosets, cosets)]
        checks = [
            check("|Aut| over Q", 2, aut_q.order),
            check("|Aut| over F3", 6, aut_3.order),
            check("Aut over F3 is S3", 3, symmetric_degree(aut_3)),
            check("coset products vanish over F3", True, bool(np.all(products == 0))),
        ]
        data["Q"] = aut_report(S_q, aut_q).model_dump()
        data["F3"] = aut_report(S_3, aut_3).model_dump()
        return checks, data

    def conv_z2z2(self) -> Outcome:
        pair = conv_pair(CyclicProductGroup((2, 2)))
        isomorphisms = sring_isomorphisms(pair.first, pair.second)
        checks = [
            check("distinct", True, pair.first.fingerprint() != pair.second.fingerprint()),
            check("isomorphism found", True, len(isomorphisms) > 0),
        ]
        return checks, {"pair": conv_pair_report(pair, len(isomorphisms)).model_dump()}

    def main_z2(self) -> Outcome:
        R = realize_group(CyclicProductGroup.cyclic(2), 3, crosscheck=True)
        checks = [
            check("signature", "p=3;lambda=1,3", R.signature.describe()),
            check("|Aut(S)|", 2, R.aut.order),
            check("concrete cross-check ran", True, R.concrete_crosscheck),
            check("concrete |Aut(S)|", 2, R.concrete_aut_order),
        ]
        return checks, {"realization": realization_report(R).model_dump(exclude={"lattice"})}

    def main_s3(self) -> Outcome:
        data: Dict[str, Any] = {}
        R = realize_group(CayleyGroup.symmetric(3), 3)
        checks = [
            check("signature", "p=3;lambda=1,3,5", R.signature.describe()),
            check("|Aut(S)|", 6, R.aut.order),
            check("Aut(S) is S3", 3, symmetric_degree(R.aut)),
        ]
        data["S3"] = realization_report(R).model_dump(exclude={"lattice"})
        R3 = realize_group(CyclicProductGroup.cyclic(3), 3, crosscheck=False)
        checks.append(check("|Aut(S)| for Z3", 3, R3.aut.order))
        data["Z3"] = realization_report(R3).model_dump(exclude={"lattice", "nodes"})
        return checks, data

    def muzychuk_rational(self) -> Outcome:
        return _suite_checks([rational_lattice_suite(range(1, 31), self.jobs)])

    def muzychuk_iso(self) -> Outcome:
        return _suite_checks([rigidity_suite(range(1, 17), self.jobs)])

    def autcyc(self) -> Outcome:
        return _suite_checks([abelian_aut_suite(range(1, 25), self.jobs), power_map_suite(range(1, 25), self.jobs)])

    def dihedral_rational(self) -> Outcome:
        return _suite_checks([dihedral_rational_suite([4, 5, 6], self.jobs)])


_EXAMPLES = [
    ReproducibleExample("table1", "characteristic subgroups of Z3 x Z27 and their covers",
                        ReproductionService.table1),
    ReproducibleExample("table2", "the 18 characteristic subgroups of Z3 x Z27 x Z243",
                        ReproductionService.table2),
    ReproducibleExample("z2z8-classes", "automorphism classes of Z2 x Z8", ReproductionService.z2z8_classes),
    ReproducibleExample("nonlattice-example", "a rational S-ring over Z_p x Z_p^3 that is not a lattice S-ring",
                        ReproductionService.nonlattice_example),
    ReproducibleExample("p3-only", "a rational S-ring over Z_p x Z_p^3 x Z_p^5 that exists only for p = 3",
                        ReproductionService.p3_only),
    ReproducibleExample("z2pow6", "a primitive S-ring over Z2^6 from GF(64)", ReproductionService.z2pow6),
    ReproducibleExample("ex-nzchar", "automorphisms of one partition of Z12 over Q and over F3",
                        ReproductionService.ex_nzchar),
    ReproducibleExample("conv-z2z2", "distinct Cayley-isomorphic S-rings over Z2 x Z2", ReproductionService.conv_z2z2),
    ReproducibleExample("main-z2", "Z2 as the automorphism group of a rational S-ring over Z3 x Z27",
                        ReproductionService.main_z2),
    ReproducibleExample("main-s3", "S3 and Z3 as automorphism groups of rational S-rings",
                        ReproductionService.main_s3),
    ReproducibleExample("muzychuk-rational", "rational S-rings over Z_n are divisor-lattice S-rings, n <= 30",
                        ReproductionService.muzychuk_rational),
    ReproducibleExample("muzychuk-iso", "distinct S-rings over Z_n are not isomorphic, n <= 16",
                        ReproductionService.muzychuk_iso),
    ReproducibleExample("autcyc", "S-rings over Z_n have abelian automorphism groups, n <= 24",
                        ReproductionService.autcyc),
    ReproducibleExample("dihedral-rational", "rational S-rings over D4, D5, D6 are normal-lattice S-rings",
                        ReproductionService.dihedral_rational),
]
