import itertools

import numpy as np
import pytest

from semiquant.backend.core.constants import CLOSED_FORM_TOL, EIGEN_SIGN_TOL
from semiquant.backend.engine.hybridfield import (
    SIGMA_Z,
    FieldParams,
    lyapunov_covariance,
    mass_matrix,
    mass_spectrum,
    propagator,
    reconstruct_propagator,
    reflection_positivity,
    residues,
)
from semiquant.backend.exceptions.errors import FieldParamsError


def random_params(rng: np.random.Generator) -> FieldParams:
    m1sq, m2sq = rng.uniform(0.2, 5.0, size=2)
    g = rng.uniform(-0.95, 0.95) * np.sqrt(m1sq * m2sq)
    h1, h2 = rng.uniform(0.0, 2.0, size=2)
    return FieldParams(m1sq=m1sq, m2sq=m2sq, g=g, hbar1=h1, hbar2=h2)


# ============================================================
# Parameters
# ============================================================
@pytest.mark.parametrize(
    "kwargs, parameter",
    [
        ({"m1sq": 0.0, "m2sq": 1.0}, "m1sq"),
        ({"m1sq": 1.0, "m2sq": -2.0}, "m2sq"),
        ({"m1sq": 1.0, "m2sq": 4.0, "g": 2.0}, "g"),
        ({"m1sq": 1.0, "m2sq": 4.0, "hbar1": -0.1}, "hbar1"),
        ({"m1sq": 1.0, "m2sq": 4.0, "hbar2": -1.0}, "hbar2"),
    ],
)
def test_invalid_field_params_name_the_parameter(kwargs, parameter):
    with pytest.raises(FieldParamsError) as info:
        FieldParams(**kwargs)
    assert info.value.parameter == parameter


# ============================================================
# Spectrum and propagator
# ============================================================
def test_mass_spectrum_decoupled():
    spectral_data = mass_spectrum(FieldParams(m1sq=1, m2sq=4))
    assert (spectral_data.R, spectral_data.mplussq, spectral_data.mminussq, spectral_data.m3sq) == pytest.approx((3.0, 4.0, 1.0, 2.5))
    assert not spectral_data.degenerate


def test_mass_spectrum_equal_masses_split_by_coupling():
    spectral_data = mass_spectrum(FieldParams(m1sq=3, m2sq=3, g=0.5))
    assert spectral_data.mplussq == pytest.approx(3.5)
    assert spectral_data.mminussq == pytest.approx(2.5)
    assert spectral_data.m3sq == pytest.approx(0.5 * (spectral_data.mplussq + spectral_data.mminussq))


def test_propagator_example():
    w = propagator(FieldParams(m1sq=1, m2sq=4, g=1, hbar1=1, hbar2=0), 0.0)
    assert np.allclose(w, np.array([[19, -4], [-4, 1]]) / 15, atol=CLOSED_FORM_TOL)
    wq = np.linalg.inv(mass_matrix(FieldParams(m1sq=1, m2sq=4, g=1)))
    assert np.allclose(w, 0.8 * wq + 0.2 * SIGMA_Z, atol=CLOSED_FORM_TOL)


@pytest.mark.parametrize("ksq", [0.0, 0.3, 2.0, 10.0])
def test_equal_hbar_gives_the_quantum_propagator(ksq):
    p = FieldParams(m1sq=1.5, m2sq=2.5, g=0.7)
    assert np.allclose(propagator(p, ksq), np.linalg.inv(mass_matrix(p, ksq)), atol=CLOSED_FORM_TOL)
    silent = p.model_copy(update={"hbar1": 0.0, "hbar2": 0.0})
    assert np.array_equal(propagator(silent, ksq), np.zeros((2, 2)))


def test_propagator_rejects_negative_ksq():
    with pytest.raises(FieldParamsError) as info:
        propagator(FieldParams(m1sq=1, m2sq=1), -1.0)
    assert info.value.parameter == "ksq"


def test_propagator_is_symmetric_positive_semidefinite(np_rng):
    for _ in range(200):
        p = random_params(np_rng)
        w = propagator(p, float(np_rng.uniform(0, 10)))
        assert np.array_equal(w, w.T)
        assert np.linalg.eigvalsh(w)[0] >= -CLOSED_FORM_TOL


def test_lyapunov_oracle_matches_propagator(np_rng):
    p = FieldParams(m1sq=1, m2sq=4, g=1, hbar1=1, hbar2=0)
    assert np.allclose(lyapunov_covariance(p, 0.0), np.array([[19, -4], [-4, 1]]) / 15, atol=CLOSED_FORM_TOL)
    for _ in range(200):
        p = random_params(np_rng)
        ksq = float(np_rng.uniform(0, 10))
        assert np.allclose(lyapunov_covariance(p, ksq), propagator(p, ksq), atol=CLOSED_FORM_TOL)


def test_lyapunov_decoupled_is_diagonal():
    p = FieldParams(m1sq=2, m2sq=5, hbar1=0.5, hbar2=1.5)
    c = lyapunov_covariance(p, 1.0)
    assert np.allclose(c, np.diag([0.5 / 3.0, 1.5 / 6.0]), atol=CLOSED_FORM_TOL)


# ============================================================
# Residues
# ============================================================
def test_residues_sum_rule_trace_and_reconstruction(np_rng):
    for _ in range(200):
        p = random_params(np_rng)
        spectral_data = residues(p)
        assert np.allclose(spectral_data.Qplus + spectral_data.Qminus + spectral_data.Q3, np.diag([p.hbar1, p.hbar2]), atol=CLOSED_FORM_TOL)
        assert abs(np.trace(spectral_data.Q3)) < CLOSED_FORM_TOL
        ksq = float(np_rng.uniform(0, 10))
        assert np.allclose(reconstruct_propagator(spectral_data, ksq), propagator(p, ksq), atol=CLOSED_FORM_TOL)


def test_residues_closed_form_for_maximal_mixing():
    spectral_data = residues(FieldParams(m1sq=2, m2sq=2, g=1, hbar1=1.0, hbar2=0.0))
    assert (spectral_data.mplussq, spectral_data.mminussq, spectral_data.m3sq) == pytest.approx((3.0, 1.0, 2.0))
    assert np.allclose(spectral_data.Qplus, [[0.25, 0.25], [0.25, 0.25]], atol=CLOSED_FORM_TOL)
    assert np.allclose(spectral_data.Qminus, [[0.25, -0.25], [-0.25, 0.25]], atol=CLOSED_FORM_TOL)
    assert np.allclose(spectral_data.Q3, np.diag([0.5, -0.5]), atol=CLOSED_FORM_TOL)


def test_equal_hbar_has_no_extra_mode():
    spectral_data = residues(FieldParams(m1sq=1, m2sq=3, g=0.5, hbar1=0.7, hbar2=0.7))
    assert np.allclose(spectral_data.Q3, 0.0, atol=CLOSED_FORM_TOL)


def test_degenerate_spectrum_uses_decoupled_residues():
    p = FieldParams(m1sq=2, m2sq=2, hbar1=1.0, hbar2=0.0)
    spectral_data = residues(p)
    assert spectral_data.degenerate
    assert np.array_equal(spectral_data.Qplus, np.diag([1.0, 0.0]))
    assert np.array_equal(spectral_data.Qminus, np.diag([0.0, 0.0]))
    assert np.array_equal(spectral_data.Q3, np.zeros((2, 2)))
    assert np.allclose(reconstruct_propagator(spectral_data, 1.0), propagator(p, 1.0), atol=CLOSED_FORM_TOL)


# ============================================================
# Reflection positivity
# ============================================================
def test_quantum_classical_coupling_is_not_reflection_positive():
    verdict = reflection_positivity(FieldParams(m1sq=1, m2sq=4, g=1, hbar1=1, hbar2=0))
    assert verdict.label == "NotPositive"
    assert verdict.witness.residue == "Q3"
    assert verdict.witness.eigenvalue < 0
    assert verdict.min_eigenvalues["Qplus"] >= -EIGEN_SIGN_TOL
    assert verdict.min_eigenvalues["Qminus"] >= -EIGEN_SIGN_TOL


@pytest.mark.parametrize(
    "h1, h2, g",
    list(itertools.product([0.0, 0.5, 1.0], [0.0, 0.5, 1.0], [-1.0, 0.0, 1.0])),
)
def test_positive_only_when_decoupled_or_equal_hbar(h1, h2, g):
    verdict = reflection_positivity(FieldParams(m1sq=2, m2sq=3, g=g, hbar1=h1, hbar2=h2))
    assert verdict.positive == (h1 == h2 or g == 0.0)
    if not verdict.positive:
        assert verdict.witness.residue == "Q3"


def test_classical_second_field_is_never_positive_with_coupling(np_rng):
    for _ in range(100):
        p = random_params(np_rng).model_copy(update={"hbar2": 0.0})
        if p.hbar1 < 1e-3 or abs(p.g) < 1e-3:
            continue
        assert not reflection_positivity(p).positive
