"""Tests for the command-line entry point."""

import json

import pytest

from app.config import override_settings
from app.main import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, run


class TestCommands:
    """Test cases for subcommand output and exit codes."""

    def test_classes_json(self, capsys):
        """Test the automorphism classes of Z2 x Z8 as JSON."""
        assert run(["classes", "Z2xZ8"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["group"] == "Z2xZ8"
        assert data["count"] == 6

    def test_charlattice_dot(self, capsys):
        """Test the characteristic lattice as a DOT diagram."""
        assert run(["charlattice", "p=3;lambda=1,3", "--format", "dot"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("digraph")
        assert out.count("->") == 6

    def test_charlattice_text(self, capsys):
        """Test the text table output."""
        assert run(["charlattice", "p=3;lambda=1,3", "--format", "text"]) == EXIT_OK
        assert "LatticeReport" in capsys.readouterr().out

    def test_construct_with_params(self, capsys):
        """Test a named construction with key=value parameters."""
        assert run(["construct", "cyclotomic", "Z12", "--param", "automorphisms=all"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["dimension"] == 6
        assert data["rational"] is True

    def test_check_partition(self, capsys):
        """Test a closed and an unclosed partition of Z6."""
        assert run(["check", "Z6", "--partition", "[[0],[1,5],[2,4],[3]]"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["closed"] is True
        assert run(["check", "Z6", "--partition", "[[0],[1,5],[2,3,4]]"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["closed"] is False

    def test_check_long_inline_partition(self, capsys):
        """Test an inline partition of Z64 longer than any file name."""
        blocks = json.dumps([[g] for g in range(64)])
        assert run(["check", "Z64", "--partition", blocks]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["closed"] is True

    def test_aut_over_f3(self, capsys):
        """Test the automorphism group of the coset ring over F3."""
        blocks = "[[0],[4,8],[1,5,9],[2,6,10],[3,7,11]]"
        assert run(["aut", "Z12", blocks, "--field", "F3"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["order"] == 6

    def test_enumerate_cyclic(self, capsys):
        """Test that Z7 carries one S-ring per divisor of 6."""
        assert run(["enumerate-cyclic", "7"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["count"] == 4

    def test_out_file(self, tmp_path, capsys):
        """Test writing the report to a file."""
        out = tmp_path / "classes.json"
        assert run(["classes", "Z4", "--out", str(out)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(out.read_text())["count"] == 3


class TestExitCodes:
    """Test cases for error handling in the entry point."""

    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["classes"],
        ["classes", "Q8"],
        ["charlattice", "p=3;lambda=1,3", "--format", "yaml"],
        ["classes", "Z2xZ8", "--format", "dot"],
        ["check", "Z6"],
    ])
    def test_usage_errors(self, argv, capsys):
        """Test that bad input exits with the usage code."""
        assert run(argv) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_cap_exceeded(self, capsys):
        """Test that a cap from the command line is enforced."""
        assert run(["classes", "Z64", "--cap-group-order", "32"]) == EXIT_USAGE
        assert "cap" in capsys.readouterr().err

    def test_engine_error(self, capsys):
        """Test that engine errors exit with the verification code."""
        assert run(["conv-pair", "Z8"]) == EXIT_VERIFICATION
        err = capsys.readouterr().err
        assert err.startswith("error:")

    def test_realize_rejects_p2(self):
        """Test that the host prime must be odd."""
        assert run(["realize", "Z2", "--p", "2"]) == EXIT_VERIFICATION

    def test_realize_lattice_cap(self, capsys):
        """Test that an oversized realized lattice is a clean usage error."""
        override_settings(cap_lattice_elements=50)
        assert run(["realize", "Z2xZ2", "--p", "3"]) == EXIT_USAGE
        assert "cap" in capsys.readouterr().err

    @pytest.mark.slow
    def test_realize_klein_four_group(self, capsys):
        """Test the full realization of Z2 x Z2."""
        assert run(["realize", "Z2xZ2", "--p", "3"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["aut_order"] == 4
        assert data["join_irreducibles"] == 10
        assert data["concrete_crosscheck"] is False


class TestReproduce:
    """Test cases for the reproduce subcommand."""

    def test_list(self, capsys):
        """Test listing example ids."""
        assert run(["reproduce", "--list"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 14
        assert lines[0].startswith("table1\t")

    def test_single_example(self, capsys):
        """Test reproducing one example."""
        assert run(["reproduce", "table1"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["example_id"] == "table1"
        assert data["passed"] is True

    def test_several_examples(self, capsys):
        """Test that several reports form a JSON array."""
        assert run(["reproduce", "table1", "z2z8-classes"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert [r["example_id"] for r in data] == ["table1", "z2z8-classes"]

    def test_unknown_example(self):
        """Test that an unknown id is a usage error."""
        assert run(["reproduce", "table9"]) == EXIT_USAGE

    def test_dot_rejected(self):
        """Test that reproduction has no DOT output."""
        assert run(["reproduce", "table1", "--format", "dot"]) == EXIT_USAGE
