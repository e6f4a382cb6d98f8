"""Closed-form propagator, spectral residues and the reflection-positivity verdict."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np
from scipy.linalg import solve_continuous_lyapunov

from semiquant.backend.core.constants import EIGEN_SIGN_TOL, SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.hybridfield.params import FieldParams
from semiquant.backend.exceptions.errors import FieldParamsError

logger = get_logger(SEMIQUANT_LOGGER)

SIGMA_Z = np.diag([1.0, -1.0])


@dataclass
class SpectralData:
    R: float
    mplussq: float
    mminussq: float
    m3sq: float
    Qplus: Optional[np.ndarray] = None
    Qminus: Optional[np.ndarray] = None
    Q3: Optional[np.ndarray] = None
    degenerate: bool = False

    def residue_matrices(self) -> Dict[str, np.ndarray]:
        return {"Qplus": self.Qplus, "Qminus": self.Qminus, "Q3": self.Q3}


def _check_ksq(ksq: float) -> None:
    if ksq < 0:
        raise FieldParamsError(f"k^2 must be >= 0, got {ksq}", parameter="ksq")


def hbar_matrix(p: FieldParams) -> np.ndarray:
    return np.diag([p.hbar1, p.hbar2])


def mass_matrix(p: FieldParams, ksq: float = 0.0) -> np.ndarray:
    return np.array([[ksq + p.m1sq, p.g], [p.g, ksq + p.m2sq]], dtype=float)


def mass_spectrum(p: FieldParams) -> SpectralData:
    R = float(np.hypot(p.m1sq - p.m2sq, 2.0 * p.g))
    total = p.m1sq + p.m2sq
    return SpectralData(
        R=R,
        mplussq=0.5 * (total + R),
        mminussq=0.5 * (total - R),
        m3sq=0.5 * total,
        degenerate=R == 0.0,
    )


def propagator(p: FieldParams, ksq: float) -> np.ndarray:
    """W(k): hbar-weighted quantum propagator plus the sigma_z admixture."""
    _check_ksq(ksq)
    a, b = ksq + p.m1sq, ksq + p.m2sq
    wq = np.linalg.inv(mass_matrix(p, ksq))
    w = (p.hbar2 * a + p.hbar1 * b) / (a + b) * wq + (p.hbar1 - p.hbar2) / (a + b) * SIGMA_Z
    return 0.5 * (w + w.T)


def spectral_projectors(p: FieldParams) -> tuple[np.ndarray, np.ndarray]:
    spectral_data = mass_spectrum(p)
    if spectral_data.degenerate:
        raise FieldParamsError("projectors undefined for a degenerate spectrum", parameter="g")
    m0 = mass_matrix(p)
    eye = np.eye(2)
    return (m0 - spectral_data.mminussq * eye) / spectral_data.R, (spectral_data.mplussq * eye - m0) / spectral_data.R


def residues(p: FieldParams) -> SpectralData:
    spectral_data = mass_spectrum(p)
    if spectral_data.degenerate:
        # equal masses and no mixing: the two fields decouple at one mass
        spectral_data.Qplus = np.diag([p.hbar1, 0.0])
        spectral_data.Qminus = np.diag([0.0, p.hbar2])
        spectral_data.Q3 = np.zeros((2, 2))
        logger.info(
            "⚠️ Degenerate spectrum, using decoupled residues",
            extra={"component": "hybridfield", "event": "degenerate_spectrum"},
        )
        return spectral_data
    p_plus, p_minus = spectral_projectors(p)
    mean = 0.5 * (p.hbar1 + p.hbar2)
    split = (p.hbar1 - p.hbar2) * (p.m1sq - p.m2sq) / (2.0 * spectral_data.R)
    spectral_data.Qplus = (mean + split) * p_plus
    spectral_data.Qminus = (mean - split) * p_minus
    mixing = (p.m1sq - p.m2sq) / spectral_data.R
    spectral_data.Q3 = 0.5 * (p.hbar1 - p.hbar2) * (SIGMA_Z - mixing * (p_plus - p_minus))
    return spectral_data


def reconstruct_propagator(spectral_data: SpectralData, ksq: float) -> np.ndarray:
    """Sum of residue matrices over their poles."""
    _check_ksq(ksq)
    return (
        spectral_data.Qplus / (ksq + spectral_data.mplussq)
        + spectral_data.Qminus / (ksq + spectral_data.mminussq)
        + spectral_data.Q3 / (ksq + spectral_data.m3sq)
    )


@dataclass
class PositivityWitness:
    residue: str
    eigenvalue: float
    eigenvector: np.ndarray


@dataclass
class PositivityVerdict:
    positive: bool
    min_eigenvalues: Dict[str, float] = field(default_factory=dict)
    witness: Optional[PositivityWitness] = None

    @property
    def label(self) -> str:
        return "Positive" if self.positive else "NotPositive"


def reflection_positivity(p: FieldParams, tol: float = EIGEN_SIGN_TOL) -> PositivityVerdict:
    """Positive iff every residue matrix is positive semidefinite."""
    spectral_data = residues(p)
    verdict = PositivityVerdict(positive=True)
    for name, matrix in spectral_data.residue_matrices().items():
        values, vectors = np.linalg.eigh(matrix)
        verdict.min_eigenvalues[name] = float(values[0])
        if values[0] < -tol and verdict.witness is None:
            verdict.positive = False
            verdict.witness = PositivityWitness(name, float(values[0]), vectors[:, 0])
    logger.debug(
        f"🔎 Reflection positivity: {verdict.label}",
        extra={"component": "hybridfield", "event": "reflection_positivity", "params": p.model_dump()},
    )
    return verdict


def lyapunov_covariance(p: FieldParams, ksq: float) -> np.ndarray:
    """Stationary covariance C of the mode process: M C + C M = 2 diag(hbar1, hbar2)."""
    _check_ksq(ksq)
    c = solve_continuous_lyapunov(mass_matrix(p, ksq), 2.0 * hbar_matrix(p))
    return 0.5 * (c + c.T)
