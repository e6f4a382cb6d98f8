from typing import Dict, List, Optional

import numpy as np

from semiquant.backend.core.config import get_settings
from semiquant.backend.engine.hybridfield import (
    FieldParams,
    ModeEstimate,
    SimConfig,
    discretization_bias,
    langevin_simulate,
    reflection_positivity,
    residues,
)
from semiquant.backend.schemas import reports


def _matrix(m: Optional[np.ndarray]) -> Optional[List[List[float]]]:
    return None if m is None else np.asarray(m, dtype=float).tolist()


def spectrum_report(p: FieldParams) -> reports.FieldReport:
    spectral_data = residues(p)
    return reports.FieldReport(
        subcommand="spectrum",
        spectrum=reports.SpectrumModel(
            R=spectral_data.R,
            mplussq=spectral_data.mplussq,
            mminussq=spectral_data.mminussq,
            m3sq=spectral_data.m3sq,
            degenerate=spectral_data.degenerate,
            Qplus=_matrix(spectral_data.Qplus),
            Qminus=_matrix(spectral_data.Qminus),
            Q3=_matrix(spectral_data.Q3),
        ),
    )


def positivity_report(p: FieldParams) -> reports.FieldReport:
    verdict = reflection_positivity(p)
    model = reports.PositivityModel(verdict=verdict.label, min_eigenvalues=verdict.min_eigenvalues)
    if verdict.witness is not None:
        model.witness_residue = verdict.witness.residue
        model.witness_eigenvalue = verdict.witness.eigenvalue
        model.witness_vector = verdict.witness.eigenvector.tolist()
    return reports.FieldReport(subcommand="positivity", positivity=model)


def default_sim_config(
    k_grid: Optional[List[float]] = None,
    dtau: Optional[float] = None,
    n_steps: Optional[int] = None,
    n_burnin: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> SimConfig:
    """Fill unspecified simulation options from settings."""
    settings = get_settings()
    return SimConfig(
        k_grid=k_grid if k_grid is not None else settings.k_grid,
        dtau=dtau if dtau is not None else settings.dtau,
        n_steps=n_steps if n_steps is not None else settings.n_steps,
        n_burnin=n_burnin if n_burnin is not None else settings.n_burnin,
        n_batches=settings.n_batches,
        seed=seed if seed is not None else settings.seed,
        workers=workers if workers is not None else settings.workers,
    )


def _mode_model(mode: ModeEstimate, bias: Optional[np.ndarray]) -> reports.ModeModel:
    return reports.ModeModel(
        ksq=mode.ksq,
        covariance=_matrix(mode.covariance),
        covariance_se=_matrix(mode.covariance_se),
        exact=_matrix(mode.exact),
        z_scores=mode.z_scores().tolist(),
        mean=mode.mean.tolist(),
        mean_se=mode.mean_se.tolist(),
        fourth_cumulant=mode.fourth_cumulant.tolist(),
        fourth_cumulant_se=mode.fourth_cumulant_se.tolist(),
        gaussian_consistent=mode.gaussian_consistent(),
        dtau_half_difference=_matrix(bias),
    )


def simulate_report(p: FieldParams, cfg: SimConfig, bias: bool = False) -> reports.FieldReport:
    result = langevin_simulate(p, cfg)
    differences: Dict[float, np.ndarray] = {}
    if bias:
        differences = {b.ksq: b.difference for b in discretization_bias(p, cfg)}
    return reports.FieldReport(
        subcommand="simulate",
        simulation=reports.SimulationModel(
            dtau=cfg.dtau,
            n_steps=cfg.n_steps,
            n_burnin=cfg.n_burnin,
            n_batches=cfg.n_batches,
            seed=cfg.seed,
            agreement=result.agreement,
            modes=[_mode_model(m, differences.get(m.ksq)) for m in result.modes],
        ),
    )
