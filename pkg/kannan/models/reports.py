from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from kannan.models.scalar import ScalarField


class SpaceFlags(BaseModel):
    complete: Optional[bool] = None
    boundedly_compact: Optional[bool] = None
    compact: Optional[bool] = None
    closed_subset_of_rn: Optional[bool] = Field(None, description="Remark: closed subsets of R^n are Picard-friendly")


class AxiomReport(BaseModel):
    passed: bool
    checks: Dict[str, bool]
    failed_axiom: Optional[str] = None
    witness: Optional[List[str]] = None


class OrbitStatus(BaseModel):
    kind: Literal["fixed_point_reached", "cycle_detected", "truncated"]
    index: Optional[int] = Field(None, description="fixed point index or cycle entry index")
    period: Optional[int] = None
    horizon: Optional[int] = None


class OrbitReport(BaseModel):
    start: str
    points: List[str]
    gaps: List[ScalarField]
    status: OrbitStatus


class ClusterProbeReport(BaseModel):
    evidence_only: Literal[True] = True
    radius: ScalarField
    cluster_evidence: bool
    center: Optional[str] = None
    neighbours: int = Field(..., description="orbit points within radius of the best center")
    required: int
    diameter: ScalarField = Field(..., description="max pairwise orbit distance")


class PairSource(BaseModel):
    kind: Literal["exhaustive", "sample"]
    space_size: Optional[int] = None
    points: Optional[List[str]] = None
    seed: Optional[int] = None


class Violation(BaseModel):
    x: str
    y: str
    lhs: ScalarField
    rhs: str
    terms: Dict[str, str] = Field(default_factory=dict)


class ViolatedVerdict(BaseModel):
    violated: Violation


class ConditionReport(BaseModel):
    condition: str
    pair_source: PairSource
    pairs_checked: int
    domain_exhausted: bool
    verdict: Union[Literal["holds"], ViolatedVerdict]
    kannan_ratio: Optional[ScalarField] = None
    refinement_ok: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    @property
    def violation(self) -> Optional[Violation]:
        return None if self.holds else self.verdict.violated


class EpsDeltaEntry(BaseModel):
    eps: ScalarField
    passed: bool
    delta: Optional[ScalarField] = None
    failing_pair: Optional[List[int]] = Field(None, description="(i, j) refuting the last candidate")


class EpsDeltaReport(BaseModel):
    evidence_only: Literal[True] = True
    start: str
    horizon: int
    entries: List[EpsDeltaEntry]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)


class PicardReport(BaseModel):
    orbit: OrbitReport
    gap_monotone: bool
    pairwise_bound_ok: bool
    gap_limit_evidence: ScalarField
    fixed_point: Optional[str] = None
    cauchy_evidence: ScalarField


class FixedPointCheck(BaseModel):
    point: str
    is_fixed: bool
    residual: ScalarField


class CensusRow(BaseModel):
    map_id: str
    satisfies: Dict[str, bool]
    fixed_point_count: int
    picard_converges_from_all_starts: bool
    common_limit: Optional[str] = None


class CensusReport(BaseModel):
    space: Dict[str, Any]
    conditions: List[str]
    rows: List[CensusRow]
    defects: List[str] = Field(default_factory=list)


class TightnessReport(BaseModel):
    satisfying_maps: int
    ratio: Optional[ScalarField] = Field(None, description="undefined when no map satisfies the strict condition")
    map_id: Optional[str] = None
    pair: Optional[List[str]] = None


class KhanCrossCheck(BaseModel):
    agreements: int
    skipped: int
    disagreements: int
    first_disagreement: Optional[List[str]] = None
    float_mantissa_bits: int = Field(..., description="np.finfo(np.longdouble).nmant on the running platform")


class GornickiReport(BaseModel):
    n: int
    pairs_checked: int
    closed_forms_ok: bool
    holds: bool
    distances_in_band: bool = Field(..., description="1 < d(x,y) <= 2 for distinct x, y")
    fixed_points: List[int]
    first_failure: Optional[List[int]] = None

    @property
    def confirmed(self) -> bool:
        return self.closed_forms_ok and self.holds and self.distances_in_band and not self.fixed_points


class ConstructionEntry(BaseModel):
    source_index: int
    target_index: int


class CounterexampleReport(BaseModel):
    report: ConditionReport
    construction: List[ConstructionEntry]
    fixed_points: List[str]


class GallerySection(BaseModel):
    name: str
    status: Literal["as-paper", "deviates"]
    details: Dict[str, Any] = Field(default_factory=dict)


class GalleryReport(BaseModel):
    sections: List[GallerySection]

    @property
    def passed(self) -> bool:
        return all(section.status == "as-paper" for section in self.sections)


class RunOutput(BaseModel):
    config: Dict[str, Any]
    result: Dict[str, Any]
