"""Plane-wave structure functions and their numerical checks."""
from semiquant.backend.engine.planewave.functions import (
    ALL_FIXED_KINDS,
    CLASSICAL,
    LINEAR,
    QUANTUM,
    QUANTUM_QUANTUM,
    STANDARD_S,
    FFamily,
    FKind,
    WaveVector,
    derivative_normalization,
    f_eval,
    jacobi_residual,
    structure_constant,
    uv,
)
from semiquant.backend.engine.planewave.checks import (
    ScanPoint,
    ScanReport,
    ViolationResult,
    default_h_grid,
    find_violation,
    ode_residual,
    postulate_scan,
    random_wave_vectors,
)

__all__ = [
    "ALL_FIXED_KINDS",
    "CLASSICAL",
    "LINEAR",
    "QUANTUM",
    "QUANTUM_QUANTUM",
    "STANDARD_S",
    "FFamily",
    "FKind",
    "WaveVector",
    "derivative_normalization",
    "f_eval",
    "jacobi_residual",
    "structure_constant",
    "uv",
    "ScanPoint",
    "ScanReport",
    "ViolationResult",
    "default_h_grid",
    "find_violation",
    "ode_residual",
    "postulate_scan",
    "random_wave_vectors",
]
