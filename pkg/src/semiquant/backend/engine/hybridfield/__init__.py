"""Two-field hybrid theory: propagator, residues, positivity, Langevin sampling and ground-state checks."""
from semiquant.backend.engine.hybridfield.params import FieldParams, SimConfig
from semiquant.backend.engine.hybridfield.spectral import (
    SIGMA_Z,
    PositivityVerdict,
    PositivityWitness,
    SpectralData,
    hbar_matrix,
    lyapunov_covariance,
    mass_matrix,
    mass_spectrum,
    propagator,
    reconstruct_propagator,
    reflection_positivity,
    residues,
    spectral_projectors,
)
from semiquant.backend.engine.hybridfield.langevin import (
    BiasEstimate,
    ModeEstimate,
    SimulationResult,
    check_stability,
    discretization_bias,
    langevin_simulate,
    mode_rng,
    sample_trajectory,
)
from semiquant.backend.engine.hybridfield.groundstate import GroundStateResult, ground_state_check

__all__ = [
    "FieldParams",
    "SimConfig",
    "SIGMA_Z",
    "PositivityVerdict",
    "PositivityWitness",
    "SpectralData",
    "hbar_matrix",
    "lyapunov_covariance",
    "mass_matrix",
    "mass_spectrum",
    "propagator",
    "reconstruct_propagator",
    "reflection_positivity",
    "residues",
    "spectral_projectors",
    "BiasEstimate",
    "ModeEstimate",
    "SimulationResult",
    "check_stability",
    "discretization_bias",
    "langevin_simulate",
    "mode_rng",
    "sample_trajectory",
    "GroundStateResult",
    "ground_state_check",
]
