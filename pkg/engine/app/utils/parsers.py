"""Parsers for the group, field, tuple and partition literals accepted on the command line."""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Sequence

from .exceptions import CapExceededError, GroupError, SchurRingError, SpecParseError, TupleError
from ..algebra.field import CoefficientField
from ..config import get_settings
from ..groups.base import FiniteGroup
from ..groups.cayley import CayleyGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..ptuple.signature import LambdaSignature

CYCLIC_PRODUCT_PATTERN = re.compile(r"^Z(\d+)(\s*x\s*Z(\d+))*$", re.IGNORECASE)
CYCLIC_FACTOR_PATTERN = re.compile(r"Z(\d+)", re.IGNORECASE)
SIGNATURE_PATTERN = re.compile(r"^p\s*=\s*(\d+)\s*;\s*lambda\s*=\s*([\d,\s]+)$", re.IGNORECASE)
NAMED_GROUP_PATTERN = re.compile(r"^([SD])(\d+)$")
FIELD_PATTERN = re.compile(r"^(Q|F(\d+))$")
TUPLE_PATTERN = re.compile(r"^(?:[RO]?\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)|(\d+(?:\s*,\s*\d+)*))$")

MAX_SYMMETRIC_DEGREE = 5


def parse_int_list(text: str, what: str = "list") -> List[int]:
    """``"1,3,5"`` as ``[1, 3, 5]``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SpecParseError(f"{what} must be comma-separated integers, got {text!r}")


def parse_signature(text: str) -> LambdaSignature:
    """
    Parse ``p=<prime>;lambda=<l1>,<l2>,...``.

    Raises:
        SpecParseError: If the literal is malformed or the values are invalid
    """
    match = SIGNATURE_PATTERN.match(text.strip())
    if not match:
        raise SpecParseError(f"expected p=<prime>;lambda=<list>, got {text!r}", error_code="BAD_SIGNATURE")
    try:
        return LambdaSignature(int(match.group(1)), tuple(parse_int_list(match.group(2), "lambda")))
    except TupleError as exc:
        raise SpecParseError(exc.message, error_code="BAD_SIGNATURE", details={"literal": text})


def is_signature_literal(text: str) -> bool:
    return SIGNATURE_PATTERN.match(text.strip()) is not None


def parse_group(text: str) -> FiniteGroup:
    """
    Parse a group literal.

    Accepted forms:
        ``Z<m>xZ<m>...`` cyclic products, ``p=<prime>;lambda=<list>`` abelian p-groups,
        ``S<n>`` (n <= 5), ``D<n>`` (dihedral of order 2n), ``trivial`` and
        ``cayley:<path>`` for a JSON multiplication table.

    Raises:
        SpecParseError: If the literal matches no form or describes an invalid group
        CapExceededError: If the group order exceeds the ``cap_group_order`` setting
    """
    literal = text.strip()
    try:
        group = _parse_group(literal)
    except SpecParseError:
        raise
    except (GroupError, OSError, ValueError, KeyError) as exc:
        message = exc.message if isinstance(exc, SchurRingError) else str(exc)
        raise SpecParseError(f"invalid group {literal!r}: {message}", error_code="BAD_GROUP")
    cap = get_settings().cap_group_order
    if group.order > cap:
        raise CapExceededError(f"group {literal}", group.order, cap)
    return group


def _parse_group(literal: str) -> FiniteGroup:
    if literal.lower() == "trivial":
        return CyclicProductGroup.cyclic(1)
    if literal.lower().startswith("cayley:"):
        path = Path(literal.split(":", 1)[1])
        if not path.is_file():
            raise SpecParseError(f"no Cayley table file at {path}", error_code="BAD_GROUP")
        return CayleyGroup.from_json(path)
    if is_signature_literal(literal):
        sig = parse_signature(literal)
        cap = get_settings().cap_group_order
        if sig.order > cap:
            raise CapExceededError(f"group {literal}", sig.order, cap)
        return sig.group()
    compact = re.sub(r"\s+", "", literal)
    if CYCLIC_PRODUCT_PATTERN.match(compact):
        return CyclicProductGroup([int(m) for m in CYCLIC_FACTOR_PATTERN.findall(compact)])
    named = NAMED_GROUP_PATTERN.match(compact)
    if named:
        kind, n = named.group(1), int(named.group(2))
        if kind == "S":
            if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
                raise SpecParseError(f"S<n> needs 1 <= n <= {MAX_SYMMETRIC_DEGREE}", error_code="BAD_GROUP")
            return CayleyGroup.symmetric(n)
        return CayleyGroup.dihedral(n)
    raise SpecParseError(
        f"unrecognised group literal {literal!r}",
        error_code="BAD_GROUP",
        details={"forms": ["Z<m>xZ<m>", "p=<prime>;lambda=<list>", "S<n>", "D<n>", "trivial", "cayley:<path>"]},
    )


def parse_field(text: str) -> CoefficientField:
    """
    ``Q`` for the rationals, ``F<q>`` for the prime field of order q.

    Raises:
        SpecParseError: If the literal is malformed or q is not prime
    """
    match = FIELD_PATTERN.match(text.strip().upper())
    if not match:
        raise SpecParseError(f"field must be Q or F<prime>, got {text!r}", error_code="BAD_FIELD")
    try:
        return CoefficientField(int(match.group(2) or 0))
    except SchurRingError as exc:
        raise SpecParseError(exc.message, error_code="BAD_FIELD", details=exc.details)


def parse_tuple(text: str) -> tuple:
    """``R(0,1,2)``, ``(0,1,2)`` or ``0,1,2``."""
    match = TUPLE_PATTERN.match(text.strip())
    if not match:
        raise SpecParseError(f"malformed tuple {text!r}", error_code="BAD_TUPLE")
    return tuple(parse_int_list(match.group(1) or match.group(2), "tuple"))


def load_json(source: str) -> Any:
    """
    A JSON literal, or the contents of the file it names.

    Text starting with ``[`` or ``{`` is always a literal; anything else is
    read as a path when such a file exists.
    """
    try:
        if not source.lstrip().startswith(("[", "{")) and _names_file(source):
            return json.loads(Path(source).read_text(encoding="utf-8"))
        return json.loads(source)
    except (OSError, json.JSONDecodeError) as exc:
        shown = source if len(source) <= 80 else source[:77] + "..."
        raise SpecParseError(f"cannot read JSON from {shown!r}: {exc}", error_code="BAD_JSON")


def _names_file(source: str) -> bool:
    path = Path(source)
    try:
        return path.suffix == ".json" or path.exists()
    except OSError:
        return False


def parse_partition(source: str, group: FiniteGroup) -> List[List[int]]:
    """
    Blocks given as a JSON array of arrays of element indices.

    Raises:
        SpecParseError: If the data is not a list of integer lists inside the group
    """
    data = load_json(source)
    if isinstance(data, dict):
        data = data.get("blocks")
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise SpecParseError("partition must be a JSON array of arrays", error_code="BAD_PARTITION")
    blocks = []
    for block in data:
        if not all(isinstance(g, int) and 0 <= g < group.order for g in block):
            raise SpecParseError(f"block {block} has entries outside 0..{group.order - 1}",
                                 error_code="BAD_PARTITION")
        blocks.append(block)
    return blocks


def parse_params(pairs: Sequence[str]) -> Dict[str, Any]:
    """
    Construction parameters from ``key=value`` strings; values are read as
    JSON when possible and kept as strings otherwise. A single argument that
    is a JSON object is taken whole.
    """
    if len(pairs) == 1 and pairs[0].lstrip().startswith("{"):
        data = load_json(pairs[0])
        if not isinstance(data, dict):
            raise SpecParseError("parameters must be a JSON object", error_code="BAD_PARAMS")
        return data
    params: Dict[str, Any] = {}
    for pair in pairs:
        if "=" not in pair:
            raise SpecParseError(f"parameter {pair!r} is not key=value", error_code="BAD_PARAMS")
        key, value = pair.split("=", 1)
        try:
            params[key.strip()] = json.loads(value)
        except json.JSONDecodeError:
            params[key.strip()] = value
    return params
