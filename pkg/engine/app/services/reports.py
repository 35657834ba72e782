"""Building report models from engine objects and rendering them as JSON, DOT or text."""

import io
from typing import Any, Iterable, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from ..algebra.schur_ring import ClosureCheck, SchurRing, is_central, is_primitive, is_rational
from ..automorphisms.realization import Realization
from ..config import get_settings
from ..constructions.converse import ConversePair
from ..constructions.symbolic_lattice import SymbolicLatticeSRing
from ..groups.automorphisms import automorphism_classes
from ..groups.base import FiniteGroup
from ..groups.cyclic_product import CyclicProductGroup
from ..groups.permgroup import PermGroup
from ..lattices.lattice import FiniteLattice
from ..ptuple.classes import automorphism_classes_by_tuple
from ..ptuple.tuples import tuple_label
from ..schemas.reports import (
    AutReport,
    ClassEntry,
    ClassesReport,
    ClosureReport,
    ConvPairReport,
    EnumerationReport,
    LatticeReport,
    LatticeSRingReport,
    RealizationReport,
    ReproductionReport,
    SRingReport,
)
from ..utils.exceptions import SpecParseError

FORMATS = ("json", "dot", "text")


def to_plain(value: Any) -> Any:
    """numpy scalars and arrays, tuples and nested containers as JSON-ready Python values."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def _labels(group: FiniteGroup, elements: Iterable[int]) -> List[str]:
    return [group.label(int(g)) for g in elements]


def structure_triples(S: SchurRing) -> List[List[int]]:
    """Nonzero structure constants as ``[i, j, k, lambda]`` rows."""
    constants = S.structure_constants
    return [[int(i), int(j), int(k), int(constants[i, j, k])] for i, j, k in np.argwhere(constants)]


def sring_report(S: SchurRing, properties: bool = True) -> SRingReport:
    """
    Summarize an S-ring; ``properties`` adds the rationality, primitivity and
    centrality tests. Structure constants are listed up to the ``cap_blocks``
    setting.
    """
    return SRingReport(
        group=S.group.describe(),
        field=S.field.label,
        name=S.name,
        dimension=S.dimension,
        blocks=[_labels(S.group, T) for T in S.blocks],
        sizes=[int(s) for s in S.sizes],
        rational=is_rational(S) if properties else None,
        primitive=is_primitive(S) if properties else None,
        central=is_central(S) if properties else None,
        structure_constants=structure_triples(S) if S.dimension <= get_settings().cap_blocks else None,
    )


def classes_report(G: FiniteGroup) -> ClassesReport:
    """Automorphism classes; for abelian p-groups they are keyed by canonical tuple."""
    entries: List[ClassEntry] = []
    if isinstance(G, CyclicProductGroup) and G.is_p_group() and G.order > 1:
        for a, members in automorphism_classes_by_tuple(G).items():
            entries.append(ClassEntry(tuple=tuple_label(a, prefix="T"), size=len(members),
                                      elements=_labels(G, members)))
    else:
        for k, members in enumerate(automorphism_classes(G)):
            entries.append(ClassEntry(tuple=f"C{k}", size=len(members), elements=_labels(G, members)))
    return ClassesReport(group=G.describe(), count=len(entries), classes=entries)


def lattice_report(L: FiniteLattice, name: str, dot: bool = True) -> LatticeReport:
    return LatticeReport(
        name=name,
        size=L.size,
        elements=list(L.labels),
        covers=[list(c) for c in L.poset.covers()],
        distributive=bool(L.distributive),
        dot=L.to_dot(name) if dot else None,
    )


def lattice_sring_report(S: SymbolicLatticeSRing, aut: Optional[PermGroup] = None,
                        dot: bool = True) -> LatticeSRingReport:
    return LatticeSRingReport(
        **S.to_json(),
        aut_order=aut.order if aut is not None else None,
        aut_generators=[list(g) for g in aut.minimal_generators()] if aut is not None else None,
        dot=S.node_lattice.to_dot("nodes") if dot else None,
    )


def closure_report(subject: str, check: ClosureCheck) -> ClosureReport:
    return ClosureReport(
        subject=subject,
        closed=check.closed,
        dimension=check.details.get("dimension") if check.closed else None,
        witness=check.witness,
        details=to_plain({k: v for k, v in check.details.items() if k != "dimension"}),
    )


def aut_report(S: SchurRing, aut: PermGroup) -> AutReport:
    return AutReport(
        group=S.group.describe(),
        field=S.field.label,
        dimension=S.dimension,
        order=aut.order,
        abelian=aut.is_abelian(),
        generators=[list(g) for g in aut.minimal_generators()],
    )


def conv_pair_report(pair: ConversePair, isomorphisms: int) -> ConvPairReport:
    G = pair.first.group
    return ConvPairReport(
        group=G.describe(),
        subgroup=_labels(G, pair.subgroup.elements),
        image=_labels(G, pair.image.elements),
        automorphism=[int(x) for x in pair.automorphism.images],
        first=[_labels(G, T) for T in pair.first.blocks],
        second=[_labels(G, T) for T in pair.second.blocks],
        block_map=pair.block_map(),
        isomorphisms=isomorphisms,
    )


def enumeration_report(group: FiniteGroup, srings: Sequence[SchurRing]) -> EnumerationReport:
    reports = [sring_report(S) for S in srings]
    return EnumerationReport(
        group=group.describe(),
        count=len(reports),
        rational_count=sum(1 for r in reports if r.rational),
        srings=reports,
    )


def realization_report(R: Realization) -> RealizationReport:
    return RealizationReport(**R.to_json())


def _text(report: BaseModel) -> str:
    """Scalars as a two-column table, then one table per list of sub-reports."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=120, color_system=None, force_terminal=False)
    data = report.model_dump()
    table = Table(title=type(report).__name__, show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    nested = {}
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            nested[key] = value
        elif key != "dot":
            table.add_row(key, str(value))
    console.print(table)
    for key, rows in nested.items():
        sub = Table(title=key)
        columns = list(rows[0])
        for column in columns:
            sub.add_column(column)
        for row in rows:
            sub.add_row(*(str(row[c]) for c in columns))
        console.print(sub)
    return buffer.getvalue()


def render(report: BaseModel, fmt: str = "json") -> str:
    """
    Serialize a report.

    Raises:
        SpecParseError: For unknown formats, or ``dot`` on a report without a diagram
    """
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "text":
        return _text(report)
    if fmt == "dot":
        dot: Optional[str] = getattr(report, "dot", None)
        if dot is None and isinstance(report, RealizationReport):
            dot = report.lattice.get("dot")
        if dot is None:
            raise SpecParseError(f"{type(report).__name__} has no DOT rendering", error_code="USAGE")
        return dot
    raise SpecParseError(f"unknown output format {fmt!r}", error_code="USAGE", details={"known": list(FORMATS)})


def reproduction_passed(reports: Sequence[ReproductionReport]) -> bool:
    return all(r.passed for r in reports)
