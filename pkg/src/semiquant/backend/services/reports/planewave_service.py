from typing import List, Optional, Sequence

import numpy as np

from semiquant.backend.core.constants import DEFAULT_SEED, VIOLATION_TOL
from semiquant.backend.engine.planewave import (
    ALL_FIXED_KINDS,
    LINEAR,
    QUANTUM,
    QUANTUM_QUANTUM,
    STANDARD_S,
    FKind,
    derivative_normalization,
    find_violation,
    ode_residual,
    postulate_scan,
)
from semiquant.backend.schemas import reports

ODE_SAMPLE_POINTS = np.linspace(-np.pi, np.pi, 61)


def _ode_check(kind: FKind) -> reports.OdeCheckModel:
    worst = max(abs(ode_residual(kind, float(x))) for x in ODE_SAMPLE_POINTS)
    return reports.OdeCheckModel(f_kind=str(kind), max_residual=worst)


def planewave_report(
    h_grid: Optional[Sequence[float]] = None,
    n_samples: int = 1000,
    seed: int = DEFAULT_SEED,
) -> reports.ScanReport:
    """Postulate scan, Jacobi violation search per kind and ODE residuals of the one-variable profiles."""
    scan = postulate_scan(h_grid)
    best = scan.best

    violations: List[reports.ViolationModel] = []
    for kind in (QUANTUM, QUANTUM_QUANTUM, STANDARD_S, LINEAR):
        found = find_violation(kind, n_samples=n_samples, seed=seed)
        violations.append(
            reports.ViolationModel(
                f_kind=found.kind,
                samples=found.samples,
                seed=seed,
                max_residual=found.max_residual,
                witness=[w.as_array().tolist() for w in found.witness],
                violated=found.max_residual > VIOLATION_TOL,
            )
        )

    ode_kinds = [LINEAR, QUANTUM, QUANTUM_QUANTUM] + [FKind.sine(pt.h) for pt in scan.points if pt.h is not None]
    return reports.ScanReport(
        points=[
            reports.ScanPointModel(member=pt.kind, h=pt.h, err_u=pt.err_u, err_v=pt.err_v) for pt in scan.points
        ],
        min_max_error=scan.min_max_error,
        best_member=best.kind,
        incompatible=scan.incompatible(),
        violations=violations,
        ode_checks=[_ode_check(k) for k in ode_kinds],
        normalization={str(k): list(derivative_normalization(k)) for k in ALL_FIXED_KINDS},
    )
