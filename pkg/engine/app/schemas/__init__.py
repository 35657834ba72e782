"""Pydantic schemas package for report serialization."""

from .reports import (
    AutReport,
    CheckResult,
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

__all__ = [
    "AutReport",
    "CheckResult",
    "ClassEntry",
    "ClassesReport",
    "ClosureReport",
    "ConvPairReport",
    "EnumerationReport",
    "LatticeReport",
    "LatticeSRingReport",
    "RealizationReport",
    "ReproductionReport",
    "SRingReport",
]
