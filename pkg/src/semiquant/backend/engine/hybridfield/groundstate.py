"""Ground-state positivity of <A (H - E0) A> for finite Hermitian matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from semiquant.backend.core.constants import CLOSED_FORM_TOL, EIGEN_SIGN_TOL
from semiquant.backend.exceptions.errors import FieldParamsError


@dataclass
class GroundStateResult:
    value: float
    dispersion: float
    expectation: float
    ground_energy: float
    gap: float
    degenerate: bool
    commutator_form: float


def _check_hermitian(name: str, m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise FieldParamsError(f"{name} must be square, got shape {m.shape}", parameter=name)
    if m.shape[0] < 2:
        raise FieldParamsError(f"{name} must be at least 2x2", parameter=name)
    if not np.allclose(m, m.conj().T, atol=CLOSED_FORM_TOL):
        raise FieldParamsError(f"{name} must be Hermitian", parameter=name)
    return m


def ground_state_check(H, A, hbar: float = 1.0) -> GroundStateResult:
    """
    value = <psi0| A (H - E0) A |psi0> by full diagonalization of H.
    commutator_form evaluates -(i hbar/2) <[A, dA/dt]> with dA/dt = (i/hbar)[H, A];
    both agree on the ground state. A degenerate ground state is flagged, not rejected.
    """
    H = _check_hermitian("H", H)
    A = _check_hermitian("A", A)
    if H.shape != A.shape:
        raise FieldParamsError(f"H {H.shape} and A {A.shape} differ in shape", parameter="A")

    energies, states = np.linalg.eigh(H)
    e0 = float(energies[0])
    psi0 = states[:, 0]
    gap = float(energies[1] - energies[0])

    a_psi = A @ psi0
    expectation = float(np.real(np.vdot(psi0, a_psi)))
    value = float(np.real(np.vdot(a_psi, (H - e0 * np.eye(len(H))) @ a_psi)))
    dispersion = float(np.real(np.vdot(a_psi, a_psi))) - expectation ** 2

    a_dot = (1j / hbar) * (H @ A - A @ H)
    comm = A @ a_dot - a_dot @ A
    commutator_form = float(np.real(-(1j * hbar / 2.0) * np.vdot(psi0, comm @ psi0)))

    return GroundStateResult(
        value=value,
        dispersion=dispersion,
        expectation=expectation,
        ground_energy=e0,
        gap=gap,
        degenerate=gap < EIGEN_SIGN_TOL,
        commutator_form=commutator_form,
    )
