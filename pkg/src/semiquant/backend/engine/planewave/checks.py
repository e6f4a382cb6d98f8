"""Numerical checks: ODE identity, postulate scan, violation search."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from semiquant.backend.core.constants import (
    DEFAULT_SEED,
    FD_STEP,
    SCAN_POINTS,
    SEMIQUANT_LOGGER,
    WAVE_VECTOR_BOX,
)
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.planewave.functions import (
    FFamily,
    FKind,
    LINEAR,
    WaveVector,
    jacobi_residual,
)

logger = get_logger(SEMIQUANT_LOGGER)

Profile = Callable[[float], float]


def _profile_derivatives(kind: FKind, x: float) -> Tuple[float, float, float, float]:
    """(f(x), f'(x), f''(x), f'(0)) for the one-variable profiles f(w)."""
    family = kind.family
    if family in (FFamily.LINEAR, FFamily.CLASSICAL):
        return x, 1.0, 0.0, 1.0
    if family is FFamily.SINE_FAMILY:
        h = kind.h
        return np.sin(h * x) / h, np.cos(h * x), -h * np.sin(h * x), 1.0
    if family in (FFamily.QUANTUM, FFamily.QUANTUM_QUANTUM):
        return 2.0 * np.sin(x / 2.0), np.cos(x / 2.0), -0.5 * np.sin(x / 2.0), 1.0
    raise ValueError(f"{kind} has no one-variable profile")


def _numeric_derivatives(f: Profile, x: float, step: float = FD_STEP) -> Tuple[float, float, float, float]:
    fx = f(x)
    d1 = (f(x + step) - f(x - step)) / (2 * step)
    d2 = (f(x + step) - 2 * fx + f(x - step)) / step ** 2
    d0 = (f(step) - f(-step)) / (2 * step)
    return fx, d1, d2, d0


def ode_residual(kind: Union[FKind, Profile], x: float) -> float:
    """f(x) f''(x) + f'(0)^2 - f'(x)^2."""
    if isinstance(kind, FKind):
        f, d1, d2, d0 = _profile_derivatives(kind, x)
    else:
        f, d1, d2, d0 = _numeric_derivatives(kind, x)
    return float(f * d2 + d0 ** 2 - d1 ** 2)


@dataclass
class ScanPoint:
    kind: str
    h: Optional[float]
    err_u: float
    err_v: float

    @property
    def worst(self) -> float:
        return max(self.err_u, self.err_v)


@dataclass
class ScanReport:
    points: List[ScanPoint] = field(default_factory=list)

    @property
    def best(self) -> ScanPoint:
        return min(self.points, key=lambda pt: pt.worst)

    @property
    def min_max_error(self) -> float:
        return self.best.worst

    def incompatible(self, threshold: float = 0.1) -> bool:
        return self.min_max_error > threshold


def default_h_grid() -> List[float]:
    return [float(h) for h in np.linspace(0.05, 2.0, 40)]


def postulate_scan(h_grid: Optional[Sequence[float]] = None, n_points: int = SCAN_POINTS) -> ScanReport:
    """
    For each member sin(h(u+v))/h (and the linear member u+v) measure how far
    it is from F(u,0) = 2 sin(u/2) and F(0,v) = v on [-pi, pi].
    """
    grid = list(h_grid) if h_grid is not None else default_h_grid()
    if not grid:
        raise ValueError("h_grid must not be empty")
    w = np.linspace(-np.pi, np.pi, n_points)
    report = ScanReport()
    for h in grid:
        if h <= 0:
            raise ValueError(f"h must be > 0, got {h}")
        member = np.sin(h * w) / h
        report.points.append(
            ScanPoint(
                kind=str(FKind.sine(h)),
                h=float(h),
                err_u=float(np.max(np.abs(member - 2.0 * np.sin(w / 2.0)))),
                err_v=float(np.max(np.abs(member - w))),
            )
        )
    report.points.append(
        ScanPoint(
            kind=str(LINEAR),
            h=None,
            err_u=float(np.max(np.abs(w - 2.0 * np.sin(w / 2.0)))),
            err_v=0.0,
        )
    )
    logger.debug(
        "🔭 Postulate scan finished",
        extra={"component": "planewave", "event": "postulate_scan", "min_max_error": report.min_max_error},
    )
    return report


def random_wave_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(-WAVE_VECTOR_BOX, WAVE_VECTOR_BOX, size=(n, 3, 4))


@dataclass
class ViolationResult:
    kind: str
    samples: int
    max_residual: float
    witness: Tuple[WaveVector, WaveVector, WaveVector]


def find_violation(kind: FKind, n_samples: int = 1000, seed: int = DEFAULT_SEED) -> ViolationResult:
    """Largest |Jacobi residual| over seeded random triples in [-2, 2]^4."""
    rng = np.random.default_rng(seed)
    worst, witness = -1.0, None
    for triple in random_wave_vectors(rng, n_samples):
        r, s, t = (WaveVector.from_array(row) for row in triple)
        value = abs(jacobi_residual(kind, r, s, t))
        if value > worst:
            worst, witness = value, (r, s, t)
    return ViolationResult(kind=str(kind), samples=n_samples, max_residual=worst, witness=witness)
