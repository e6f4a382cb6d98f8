"""Validated parameter models for the two-field hybrid theory."""
from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from semiquant.backend.core.constants import (
    DEFAULT_DTAU,
    DEFAULT_K_GRID,
    DEFAULT_N_BATCHES,
    DEFAULT_N_BURNIN,
    DEFAULT_N_STEPS,
    DEFAULT_SEED,
)
from semiquant.backend.exceptions.errors import FieldParamsError


class FieldParams(BaseModel):
    """Masses, mixing and per-field hbar of the quadratic action."""

    model_config = ConfigDict(frozen=True)

    m1sq: float = Field(description="Mass squared of field 1.")
    m2sq: float = Field(description="Mass squared of field 2.")
    g: float = Field(default=0.0, description="Off-diagonal coupling (mass squared).")
    hbar1: float = Field(default=1.0, description="Noise strength of field 1.")
    hbar2: float = Field(default=1.0, description="Noise strength of field 2.")

    @model_validator(mode="after")
    def _check_invariants(self) -> "FieldParams":
        if not self.m1sq > 0:
            raise FieldParamsError(f"m1sq must be > 0, got {self.m1sq}", parameter="m1sq")
        if not self.m2sq > 0:
            raise FieldParamsError(f"m2sq must be > 0, got {self.m2sq}", parameter="m2sq")
        if not self.m1sq * self.m2sq > self.g ** 2:
            raise FieldParamsError(
                f"m1sq*m2sq must exceed g^2 for a positive definite mass matrix, got g={self.g}",
                parameter="g",
            )
        if self.hbar1 < 0:
            raise FieldParamsError(f"hbar1 must be >= 0, got {self.hbar1}", parameter="hbar1")
        if self.hbar2 < 0:
            raise FieldParamsError(f"hbar2 must be >= 0, got {self.hbar2}", parameter="hbar2")
        return self


class SimConfig(BaseModel):
    """Langevin run configuration. The dtau stability bound depends on the masses and is checked at run time."""

    model_config = ConfigDict(frozen=True)

    k_grid: List[float] = Field(default_factory=lambda: list(DEFAULT_K_GRID))
    dtau: float = DEFAULT_DTAU
    n_steps: int = DEFAULT_N_STEPS
    n_burnin: int = DEFAULT_N_BURNIN
    n_batches: int = DEFAULT_N_BATCHES
    seed: int = DEFAULT_SEED
    workers: int = 1

    @model_validator(mode="after")
    def _check_invariants(self) -> "SimConfig":
        if not self.k_grid:
            raise FieldParamsError("k_grid must not be empty", parameter="k_grid")
        if any(k < 0 for k in self.k_grid):
            raise FieldParamsError("k_grid values must be >= 0", parameter="k_grid")
        if not self.dtau > 0:
            raise FieldParamsError(f"dtau must be > 0, got {self.dtau}", parameter="dtau")
        if self.n_burnin < 0:
            raise FieldParamsError("n_burnin must be >= 0", parameter="n_burnin")
        if self.n_steps <= self.n_burnin:
            raise FieldParamsError(
                f"n_steps ({self.n_steps}) must exceed n_burnin ({self.n_burnin})", parameter="n_steps"
            )
        if self.n_batches < 2:
            raise FieldParamsError("n_batches must be >= 2", parameter="n_batches")
        if self.n_steps - self.n_burnin < self.n_batches:
            raise FieldParamsError("fewer recorded steps than batches", parameter="n_batches")
        if self.workers < 1:
            raise FieldParamsError("workers must be >= 1", parameter="workers")
        return self

    def refined(self) -> "SimConfig":
        """Half the step over the same simulated time."""
        return self.model_copy(
            update={"dtau": self.dtau / 2, "n_steps": 2 * self.n_steps, "n_burnin": 2 * self.n_burnin}
        )
