"""Tests for report building, rendering and the empirical suites."""

import json

import numpy as np
import pytest

from app.algebra import SchurRing
from app.automorphisms import aut_sring
from app.config import override_settings
from app.lattices import chain_lattice, divisor_lattice
from app.services.reports import (
    aut_report,
    classes_report,
    lattice_report,
    render,
    sring_report,
    to_plain,
)
from app.services.suites import (
    SuiteOutcome,
    abelian_aut_suite,
    dihedral_rational_suite,
    power_map_suite,
    power_map_worker,
    rational_lattice_suite,
    rigidity_suite,
    rigidity_worker,
    run_parallel,
)
from app.utils.exceptions import SpecParseError

COSET_BLOCKS = [[0], [4, 8], [1, 5, 9], [2, 6, 10], [3, 7, 11]]


class TestReportBuilders:
    """Test cases for turning engine objects into report models."""

    @pytest.fixture
    def coset_ring(self, z12, rationals):
        """The coset S-ring over Z12 with H = {0, 4, 8}."""
        return SchurRing.from_blocks(z12, COSET_BLOCKS, rationals, name="cosets")

    def test_to_plain(self):
        """Test that numpy values and tuples become JSON-ready values."""
        plain = to_plain({1: (np.int64(2), np.array([3, 4])), "x": None})
        assert plain == {"1": [2, [3, 4]], "x": None}
        json.dumps(plain)

    def test_sring_report(self, coset_ring):
        """Test the S-ring summary fields."""
        report = sring_report(coset_ring)
        assert report.group == "Z12"
        assert report.field == "Q"
        assert report.dimension == 5
        assert report.sizes == [1, 2, 3, 3, 3]
        assert report.blocks[1] == ["4", "8"]
        assert report.primitive is False
        assert report.central is True

    def test_structure_constants(self, coset_ring):
        """Test the sparse structure constants of the coset S-ring."""
        triples = sring_report(coset_ring).structure_constants
        assert [1, 1, 0, 2] in triples
        assert [1, 1, 1, 1] in triples
        assert [2, 2, 3, 3] in triples
        assert [t for t in triples if t[0] == 0] == [[0, j, j, 1] for j in range(5)]
        assert all(t[3] != 0 for t in triples)

    def test_full_sring_over_s3_is_not_central(self, s3, rationals):
        """Test the centrality flag on the S-ring of singletons over S3."""
        S = SchurRing.from_blocks(s3, [[g] for g in range(6)], rationals)
        report = sring_report(S)
        assert report.central is False
        assert len(report.structure_constants) == 36

    def test_structure_constants_cap(self, z12, rationals):
        """Test that large tensors are left out of the report."""
        override_settings(cap_blocks=4)
        S = SchurRing.from_blocks(z12, COSET_BLOCKS, rationals)
        assert sring_report(S).structure_constants is None

    def test_sring_report_without_properties(self, coset_ring):
        """Test that property tests can be skipped."""
        report = sring_report(coset_ring, properties=False)
        assert report.rational is None
        assert report.primitive is None
        assert report.central is None

    def test_classes_report_for_p_group(self, z2z8):
        """Test that Z2 x Z8 reports six tuple-keyed classes."""
        report = classes_report(z2z8)
        assert report.count == 6
        assert sorted(c.size for c in report.classes) == [1, 1, 2, 2, 2, 8]
        assert all(c.tuple.startswith("T") for c in report.classes)
        assert sum(c.size for c in report.classes) == 16

    def test_classes_report_for_nonabelian_group(self, s3):
        """Test that groups other than abelian p-groups get numbered classes."""
        report = classes_report(s3)
        assert report.classes[0].tuple == "C0"
        assert sum(c.size for c in report.classes) == 6

    def test_lattice_report(self):
        """Test the lattice summary of the divisors of 12."""
        report = lattice_report(divisor_lattice(12), "div12")
        assert report.size == 6
        assert report.distributive is True
        assert len(report.covers) == 7
        assert report.dot.startswith('digraph "div12"')

    def test_aut_report(self, coset_ring):
        """Test the automorphism group summary."""
        report = aut_report(coset_ring, aut_sring(coset_ring))
        assert report.order == 2
        assert report.abelian is True
        assert report.generators == [[0, 1, 4, 3, 2]]


class TestRender:
    """Test cases for serializing reports."""

    @pytest.fixture
    def report(self):
        """A lattice report with a diagram."""
        return lattice_report(chain_lattice(3), "c3")

    def test_json(self, report):
        """Test that JSON output parses back to the same fields."""
        text = render(report, "json")
        assert text.endswith("\n")
        data = json.loads(text)
        assert data["size"] == 3
        assert data["name"] == "c3"

    def test_text(self, report):
        """Test that text output is a table naming the report."""
        text = render(report, "text")
        assert "LatticeReport" in text
        assert "distributive" in text
        assert "digraph" not in text

    def test_dot(self, report):
        """Test that DOT output is the stored diagram."""
        assert render(report, "dot") == report.dot

    def test_dot_without_diagram(self, z2z8):
        """Test that DOT on a report without a diagram is a usage error."""
        with pytest.raises(SpecParseError) as exc_info:
            render(classes_report(z2z8), "dot")
        assert exc_info.value.error_code == "USAGE"

    def test_unknown_format(self, report):
        """Test that unknown formats are rejected."""
        with pytest.raises(SpecParseError):
            render(report, "yaml")


class TestSuites:
    """Test cases for the empirical suites."""

    def test_outcome_merge(self):
        """Test merging counts and violations."""
        total = SuiteOutcome("x", instances=2)
        total.merge(SuiteOutcome("x", instances=3, violations=[{"n": 1}]))
        assert total.instances == 5
        assert not total.passed
        assert total.to_json()["violation_count"] == 1

    def test_run_parallel_serial(self):
        """Test that a single job maps in order and merges."""
        outcome = run_parallel(rigidity_worker, [2, 3, 4], "rigidity", jobs=1)
        assert outcome.name == "rigidity"
        assert outcome.instances > 0
        assert outcome.passed

    def test_rational_lattice_suite(self):
        """Test that rational S-rings over small cyclic groups are lattice S-rings."""
        outcome = rational_lattice_suite(range(2, 9), jobs=1)
        assert outcome.instances == 7
        assert outcome.passed

    def test_power_map_worker(self):
        """Test the power map properties over Z12."""
        outcome = power_map_worker(12)
        assert outcome.instances > 0
        assert outcome.passed, outcome.violations

    @pytest.mark.slow
    def test_power_map_suite_parallel(self):
        """Test that the process pool gives the same result as a serial run."""
        serial = power_map_suite(range(2, 10), jobs=1)
        parallel = power_map_suite(range(2, 10), jobs=2)
        assert serial.instances == parallel.instances
        assert parallel.passed

    @pytest.mark.slow
    def test_abelian_aut_suite(self):
        """Test that S-rings over Z_n for small n have abelian automorphism groups."""
        outcome = abelian_aut_suite(range(2, 13), jobs=1)
        assert outcome.instances > 0
        assert outcome.passed, outcome.violations

    @pytest.mark.slow
    def test_rigidity_suite(self):
        """Test that distinct S-rings over Z_n for small n are never isomorphic."""
        outcome = rigidity_suite(range(2, 11), jobs=1)
        assert outcome.passed, outcome.violations

    @pytest.mark.slow
    def test_dihedral_rational_suite(self):
        """Test that rational S-rings over D4 and D5 are normal-lattice S-rings."""
        outcome = dihedral_rational_suite([4, 5], jobs=1)
        assert outcome.instances > 0
        assert outcome.passed, outcome.violations
