import numpy as np
import pytest

from semiquant.backend.core.constants import CLOSED_FORM_TOL, DISPERSION_TOL, IDENTITY_TOL
from semiquant.backend.engine.hybridfield import ground_state_check
from semiquant.backend.exceptions.errors import FieldParamsError


def random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return 0.5 * (m + m.conj().T)


def test_identity_observable_has_no_excitation():
    H = np.diag([0.0, 1.0, 3.0])
    result = ground_state_check(H, np.eye(3))
    assert result.value == pytest.approx(0.0, abs=CLOSED_FORM_TOL)
    assert result.dispersion == pytest.approx(0.0, abs=CLOSED_FORM_TOL)
    assert result.ground_energy == pytest.approx(0.0)
    assert result.gap == pytest.approx(1.0)
    assert not result.degenerate


def test_hamiltonian_as_observable(np_rng):
    H = random_hermitian(np_rng, 5)
    result = ground_state_check(H, H)
    assert result.value == pytest.approx(0.0, abs=IDENTITY_TOL)
    assert result.dispersion == pytest.approx(0.0, abs=IDENTITY_TOL)
    assert result.expectation == pytest.approx(result.ground_energy)


def test_random_pairs_are_nonnegative_and_vanish_only_without_dispersion(np_rng):
    for trial in range(1000):
        d = int(np_rng.integers(2, 9))
        H = random_hermitian(np_rng, d)
        if trial % 10 == 0:
            A = H @ H - 2.0 * H
        else:
            A = random_hermitian(np_rng, d)
        result = ground_state_check(H, A)
        assert result.value >= -IDENTITY_TOL
        assert (result.value < IDENTITY_TOL) == (result.dispersion < DISPERSION_TOL)


def test_commutator_form_agrees_with_direct_value(np_rng):
    for _ in range(100):
        d = int(np_rng.integers(2, 7))
        H, A = random_hermitian(np_rng, d), random_hermitian(np_rng, d)
        for hbar in (1.0, 0.3):
            result = ground_state_check(H, A, hbar=hbar)
            assert result.commutator_form == pytest.approx(result.value, rel=1e-8, abs=1e-9)


def test_degenerate_ground_state_is_flagged():
    result = ground_state_check(np.diag([1.0, 1.0, 2.0]), np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1.0]]))
    assert result.degenerate


@pytest.mark.parametrize(
    "H, A, parameter",
    [
        (np.array([[1.0, 2.0], [0.0, 1.0]]), np.eye(2), "H"),
        (np.eye(2), np.array([[0.0, 1j], [1j, 0.0]]), "A"),
        (np.eye(1), np.eye(1), "H"),
        (np.ones((2, 3)), np.eye(2), "H"),
        (np.eye(2), np.eye(3), "A"),
    ],
)
def test_rejects_invalid_matrices(H, A, parameter):
    with pytest.raises(FieldParamsError) as info:
        ground_state_check(H, A)
    assert info.value.parameter == parameter
