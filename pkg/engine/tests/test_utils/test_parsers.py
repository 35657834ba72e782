"""Tests for command-line literal parsers."""

import json
import math

import pytest

from app.config import override_settings
from app.groups.cayley import CayleyGroup
from app.groups.cyclic_product import CyclicProductGroup
from app.utils.exceptions import CapExceededError, SpecParseError
from app.utils.parsers import (
    load_json,
    parse_field,
    parse_group,
    parse_int_list,
    parse_params,
    parse_partition,
    parse_signature,
    parse_tuple,
)


class TestParseGroup:
    """Test cases for group literals."""

    @pytest.mark.parametrize("literal,moduli", [
        ("Z12", (12,)),
        ("Z3xZ27", (3, 27)),
        ("z2 x z8", (2, 8)),
        ("p=3;lambda=1,3", (3, 27)),
        ("p = 5 ; lambda = 1, 2", (5, 25)),
        ("trivial", (1,)),
    ])
    def test_cyclic_products(self, literal, moduli):
        """Test cyclic product and signature forms."""
        group = parse_group(literal)
        assert isinstance(group, CyclicProductGroup)
        assert group.order == math.prod(moduli)

    def test_named_groups(self):
        """Test symmetric and dihedral groups."""
        assert parse_group("S3").order == 6
        assert parse_group("D4").order == 8
        assert not parse_group("D4").is_abelian()

    def test_symmetric_degree_limit(self):
        """Test that S<n> is limited to small degrees."""
        with pytest.raises(SpecParseError):
            parse_group("S6")

    def test_cayley_file(self, tmp_path, s3):
        """Test loading a multiplication table from a file."""
        path = tmp_path / "s3.json"
        path.write_text(json.dumps({"table": s3.table.tolist()}))
        group = parse_group(f"cayley:{path}")
        assert isinstance(group, CayleyGroup)
        assert group.order == 6

    def test_missing_cayley_file(self, tmp_path):
        """Test that a missing table file is a parse error."""
        with pytest.raises(SpecParseError) as exc_info:
            parse_group(f"cayley:{tmp_path / 'none.json'}")
        assert exc_info.value.error_code == "BAD_GROUP"

    @pytest.mark.parametrize("literal", ["Q8", "Zx3", "Z0", "p=4;lambda=1", "p=3;lambda=3,1", ""])
    def test_invalid_literals(self, literal):
        """Test that malformed or invalid groups raise SpecParseError."""
        with pytest.raises(SpecParseError):
            parse_group(literal)

    def test_group_order_cap(self):
        """Test the group order cap."""
        override_settings(cap_group_order=100)
        with pytest.raises(CapExceededError):
            parse_group("Z101")
        with pytest.raises(CapExceededError):
            parse_group("p=3;lambda=1,5")
        assert parse_group("Z100").order == 100


class TestParseOtherLiterals:
    """Test cases for signature, field, tuple and list literals."""

    def test_signature(self):
        """Test parsing a signature."""
        sig = parse_signature("p=3;lambda=1,3,5")
        assert sig.p == 3
        assert sig.lambdas == (1, 3, 5)

    def test_bad_signature(self):
        """Test that malformed signatures carry their error code."""
        with pytest.raises(SpecParseError) as exc_info:
            parse_signature("p=3,lambda=1")
        assert exc_info.value.error_code == "BAD_SIGNATURE"

    @pytest.mark.parametrize("literal,label", [("Q", "Q"), ("q", "Q"), ("F3", "F3"), ("f7", "F7")])
    def test_field(self, literal, label):
        """Test field literals."""
        assert parse_field(literal).label == label

    @pytest.mark.parametrize("literal", ["F4", "F1", "R", "F"])
    def test_bad_field(self, literal):
        """Test that non-prime orders and unknown names are rejected."""
        with pytest.raises(SpecParseError) as exc_info:
            parse_field(literal)
        assert exc_info.value.error_code == "BAD_FIELD"

    @pytest.mark.parametrize("literal", ["R(0,1,2)", "(0,1,2)", "0,1,2", "O( 0, 1, 2 )"])
    def test_tuple(self, literal):
        """Test the accepted tuple forms."""
        assert parse_tuple(literal) == (0, 1, 2)

    @pytest.mark.parametrize("literal", ["R(0;1)", "R(0,1", "0,1)", "(0,1", "R0,1", "R()"])
    def test_bad_tuple(self, literal):
        """Test that malformed or unbalanced tuples raise."""
        with pytest.raises(SpecParseError) as exc_info:
            parse_tuple(literal)
        assert exc_info.value.error_code == "BAD_TUPLE"

    def test_int_list(self):
        """Test comma-separated integers."""
        assert parse_int_list("1, 3,5,") == [1, 3, 5]
        with pytest.raises(SpecParseError):
            parse_int_list("1,a")


class TestParseJsonInputs:
    """Test cases for JSON-backed inputs."""

    def test_load_json_literal_and_file(self, tmp_path):
        """Test that JSON comes from a literal or a file."""
        assert load_json("[1, 2]") == [1, 2]
        path = tmp_path / "data.json"
        path.write_text('{"a": 1}')
        assert load_json(str(path)) == {"a": 1}

    def test_load_json_errors(self, tmp_path):
        """Test unreadable JSON."""
        with pytest.raises(SpecParseError) as exc_info:
            load_json("[1,")
        assert exc_info.value.error_code == "BAD_JSON"
        with pytest.raises(SpecParseError):
            load_json(str(tmp_path / "missing.json"))

    def test_long_inline_partition(self):
        """Test that inline JSON longer than a file name is parsed as JSON."""
        G = CyclicProductGroup.cyclic(64)
        literal = json.dumps([[g] for g in range(64)])
        assert len(literal) > 255
        assert parse_partition(literal, G) == [[g] for g in range(64)]
        assert load_json("  " + literal) == [[g] for g in range(64)]

    def test_long_text_that_is_not_json(self):
        """Test that an overlong non-JSON argument is a parse error, not an OS error."""
        with pytest.raises(SpecParseError) as exc_info:
            load_json("x" * 400)
        assert exc_info.value.error_code == "BAD_JSON"
        assert len(exc_info.value.message) < 200

    def test_partition(self, z12):
        """Test partitions as arrays or under a blocks key."""
        blocks = [[0], [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]
        assert parse_partition(json.dumps(blocks), z12) == blocks
        assert parse_partition(json.dumps({"blocks": blocks}), z12) == blocks

    @pytest.mark.parametrize("literal", ['{"x": 1}', "[1, 2]", "[[0], [12]]", '[[0], ["a"]]'])
    def test_bad_partition(self, z12, literal):
        """Test partitions that are malformed or leave the group."""
        with pytest.raises(SpecParseError) as exc_info:
            parse_partition(literal, z12)
        assert exc_info.value.error_code == "BAD_PARTITION"

    def test_params_pairs(self):
        """Test key=value parameters with JSON values."""
        params = parse_params(["h=3", "outer=full", "units=[1,5]"])
        assert params == {"h": 3, "outer": "full", "units": [1, 5]}

    def test_params_object(self):
        """Test a single JSON object of parameters."""
        assert parse_params(['{"k": 4}']) == {"k": 4}

    def test_params_errors(self):
        """Test malformed parameters."""
        with pytest.raises(SpecParseError):
            parse_params(["h"])
        with pytest.raises(SpecParseError):
            parse_params(["{not json"])
