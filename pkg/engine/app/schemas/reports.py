"""Report schemas emitted by the command-line pipelines."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class SRingReport(BaseModel):
    """Schema for a single S-ring."""

    group: str = Field(..., description="Description of the ambient group")
    field: str = Field(..., description="Coefficient field label (Q or F<q>)")
    name: Optional[str] = None
    dimension: int
    blocks: List[List[str]] = Field(..., description="Basic sets as element labels, in block order")
    sizes: List[int]
    rational: Optional[bool] = None
    primitive: Optional[bool] = None
    central: Optional[bool] = None
    structure_constants: Optional[List[List[int]]] = Field(
        None, description="Nonzero (i, j, k, lambda) with T_i T_j = sum_k lambda T_k")


class ClassEntry(BaseModel):
    """One automorphism class of an abelian p-group."""

    tuple: str
    size: int
    elements: List[str]


class ClassesReport(BaseModel):
    """Schema for the automorphism classes of an abelian group."""

    group: str
    count: int
    classes: List[ClassEntry]


class LatticeReport(BaseModel):
    """Schema for a finite lattice."""

    name: str
    size: int
    elements: List[str]
    covers: List[List[int]] = Field(..., description="Covering pairs (lower, upper) as element indices")
    distributive: bool
    dot: Optional[str] = None


class LatticeSRingReport(BaseModel):
    """Schema for a symbolic lattice S-ring inside W(G)."""

    signature: str
    nodes: List[str] = Field(..., description="Canonical tuples a with R(a)-bar in the basis")
    weights: List[int] = Field(..., description="log_p of each subgroup order")
    dimension: int
    aut_order: Optional[int] = None
    aut_generators: Optional[List[List[int]]] = None
    dot: Optional[str] = None


class ClosureReport(BaseModel):
    """Schema for a closure or Schur-partition check."""

    subject: str
    closed: bool
    dimension: Optional[int] = None
    witness: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class AutReport(BaseModel):
    """Schema for the automorphism group of an S-ring."""

    group: str
    field: str
    dimension: int
    order: int
    abelian: bool
    generators: List[List[int]] = Field(..., description="Block permutations generating Aut(S)")


class ConvPairReport(BaseModel):
    """Schema for a pair of distinct Cayley-isomorphic S-rings."""

    group: str
    subgroup: List[str]
    image: List[str]
    automorphism: List[int]
    first: List[List[str]]
    second: List[List[str]]
    block_map: List[int]
    isomorphisms: int = Field(..., description="Number of S-ring isomorphisms found between the pair")


class EnumerationReport(BaseModel):
    """Schema for an enumeration of S-rings."""

    group: str
    count: int
    rational_count: int
    srings: List[SRingReport]


class RealizationReport(BaseModel):
    """Schema for the realization of a group as Aut of a rational S-ring."""

    input_group: str
    group_order: int
    lattice: Dict[str, Any]
    join_irreducibles: int
    signature: str
    nodes: List[str]
    sring_dimension: int
    aut_order: int
    aut_generators: List[List[int]]
    iso_witness: List[int]
    concrete_crosscheck: bool
    concrete_aut_order: Optional[int] = None


class CheckResult(BaseModel):
    """One expected-versus-observed comparison."""

    name: str
    expected: Any
    observed: Any
    passed: bool


class ReproductionReport(BaseModel):
    """Schema for a reproduced worked example."""

    example_id: str
    description: str
    passed: bool
    checks: List[CheckResult]
    data: Dict[str, Any] = Field(default_factory=dict)
