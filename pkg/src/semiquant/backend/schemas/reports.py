"""Report envelope and payload models shared by the CLI and the HTTP API."""
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from semiquant.backend.core.constants import REPORT_SCHEMA_VERSION, TOOL_VERSION

Matrix = List[List[float]]


# ============================================================
# Bracket
# ============================================================
class DefectCheck(BaseModel):
    """A Jacobi or Leibniz defect evaluated for one extra argument."""
    argument: str = Field(..., description="Canonical text of the extra argument")
    defect: str = Field(..., description="Canonical text of the defect")
    vanishes: bool


class BracketResult(BaseModel):
    kind: Literal["bracket"] = "bracket"
    bracket: str = Field(..., description="Bracket kind: quantum, poisson, standard_hybrid, anderson_hybrid")
    dims: List[int] = Field(..., description="Degrees of freedom (n_q, n_c)")
    a: str
    b: str
    result: str
    jacobi: Optional[DefectCheck] = None
    leibniz: Optional[DefectCheck] = None


# ============================================================
# No-go induction
# ============================================================
class CertificateModel(BaseModel):
    triple_class: str
    triple: List[str] = Field(..., description="The three basis monomials")
    monomial: str = Field(..., description="Monomial carrying the nonzero residual coefficient")
    witness_value: str
    residual: str


class StepSummary(BaseModel):
    step: int
    pair_class: List[int]
    unknowns: int
    expected_unknowns: int
    determining_classes: List[str]
    check_class: str
    determining_triples: int
    check_triples: int
    equations: int
    rank: int
    determining_outcome: str
    outcome: str
    as_predicted: bool
    matches_standard_hybrid: Optional[bool] = None
    assignment: Dict[str, str] = Field(
        default_factory=dict, description="Resolved constant per entry '(M, M')', with symbolic hbar"
    )
    free: List[str] = Field(default_factory=list)
    certificate: Optional[CertificateModel] = None


class NoGoReport(BaseModel):
    kind: Literal["nogo"] = "nogo"
    steps: int
    unknown_counts: List[int]
    verdict: Literal["reproduced", "deviation"]
    records: List[StepSummary]


# ============================================================
# Plane waves
# ============================================================
class ScanPointModel(BaseModel):
    member: str
    h: Optional[float] = None
    err_u: float
    err_v: float


class ViolationModel(BaseModel):
    f_kind: str
    samples: int
    seed: int
    max_residual: float
    witness: List[List[float]] = Field(..., description="Three wave vectors (q, p, x, k)")
    violated: bool


class OdeCheckModel(BaseModel):
    f_kind: str
    max_residual: float


class ScanReport(BaseModel):
    kind: Literal["scan"] = "scan"
    points: List[ScanPointModel]
    min_max_error: float
    best_member: str
    incompatible: bool
    violations: List[ViolationModel] = Field(default_factory=list)
    ode_checks: List[OdeCheckModel] = Field(default_factory=list)
    normalization: Dict[str, List[float]] = Field(
        default_factory=dict, description="(dF/du, dF/dv) at the origin per kind"
    )


# ============================================================
# Field theory
# ============================================================
class SpectrumModel(BaseModel):
    R: float
    mplussq: float
    mminussq: float
    m3sq: float
    degenerate: bool
    Qplus: Optional[Matrix] = None
    Qminus: Optional[Matrix] = None
    Q3: Optional[Matrix] = None


class PositivityModel(BaseModel):
    verdict: Literal["Positive", "NotPositive"]
    min_eigenvalues: Dict[str, float]
    witness_residue: Optional[str] = None
    witness_eigenvalue: Optional[float] = None
    witness_vector: Optional[List[float]] = None


class ModeModel(BaseModel):
    ksq: float
    covariance: Matrix
    covariance_se: Matrix
    exact: Matrix
    z_scores: List[float] = Field(..., description="Entries (1,1), (1,2), (2,2)")
    mean: List[float]
    mean_se: List[float]
    fourth_cumulant: List[float]
    fourth_cumulant_se: List[float]
    gaussian_consistent: bool
    dtau_half_difference: Optional[Matrix] = None


class SimulationModel(BaseModel):
    dtau: float
    n_steps: int
    n_burnin: int
    n_batches: int
    seed: int
    agreement: float = Field(..., description="Fraction of (entry, k) pairs within the sigma band")
    modes: List[ModeModel]


class FieldReport(BaseModel):
    kind: Literal["field"] = "field"
    subcommand: Literal["spectrum", "positivity", "simulate"]
    spectrum: Optional[SpectrumModel] = None
    positivity: Optional[PositivityModel] = None
    simulation: Optional[SimulationModel] = None


Payload = Annotated[
    Union[BracketResult, NoGoReport, ScanReport, FieldReport],
    Field(discriminator="kind"),
]


class ReportEnvelope(BaseModel):
    schema_version: str = REPORT_SCHEMA_VERSION
    tool_version: str = TOOL_VERSION
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    payload: Payload
    wall_time_s: Optional[float] = Field(default=None, description="Present only when timing was requested")
