from typing import List, Optional

from pydantic import BaseModel, Field

from semiquant.backend.core.constants import DEFAULT_SEED


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str


class BracketRequest(BaseModel):
    """Schema for bracket evaluation requests."""
    a: str = Field(..., description="Left argument in observable syntax")
    b: str = Field(..., description="Right argument in observable syntax")
    kind: str = Field(default="s", description="q, c, s, a or the full bracket name")
    jacobi: Optional[str] = Field(default=None, description="Third argument for the Jacobi defect")
    leibniz: Optional[str] = Field(default=None, description="Multiplier for the Leibniz defect")
    n_q: int = Field(default=1, ge=1)
    n_c: int = Field(default=1, ge=1)


class NoGoRequest(BaseModel):
    steps: int = Field(default=4, ge=1, le=4)


class FieldRequest(BaseModel):
    """Schema for field-theory requests. Invariants are checked by the engine."""
    m1sq: float
    m2sq: float
    g: float = 0.0
    hbar1: float = 1.0
    hbar2: float = 1.0


class SimulateRequest(FieldRequest):
    k_grid: Optional[List[float]] = Field(default=None, description="k^2 values; settings default if omitted")
    dtau: Optional[float] = None
    n_steps: Optional[int] = None
    n_burnin: Optional[int] = None
    seed: Optional[int] = None
    bias: bool = Field(default=False, description="Also rerun at dtau/2")


class PlaneWaveRequest(BaseModel):
    h_grid: Optional[List[float]] = None
    n_samples: int = Field(default=1000, ge=1, le=100_000)
    seed: int = DEFAULT_SEED
