import numpy as np
import pytest

from semiquant.backend.engine.hybridfield import (
    FieldParams,
    SimConfig,
    discretization_bias,
    langevin_simulate,
    propagator,
)
from semiquant.backend.exceptions.errors import FieldParamsError, StabilityError

PARAMS = FieldParams(m1sq=1, m2sq=4, g=1, hbar1=1, hbar2=0)
SMALL = SimConfig(k_grid=[0.0, 1.0], dtau=0.01, n_steps=4_000, n_burnin=200, n_batches=10, seed=11)


@pytest.mark.parametrize(
    "kwargs, parameter",
    [
        ({"k_grid": []}, "k_grid"),
        ({"k_grid": [-1.0]}, "k_grid"),
        ({"dtau": 0.0}, "dtau"),
        ({"n_steps": 100, "n_burnin": 100}, "n_steps"),
        ({"n_batches": 1}, "n_batches"),
        ({"workers": 0}, "workers"),
    ],
)
def test_invalid_sim_config(kwargs, parameter):
    with pytest.raises(FieldParamsError) as info:
        SimConfig(**kwargs)
    assert info.value.parameter == parameter


def test_stability_bound_is_enforced():
    cfg = SMALL.model_copy(update={"dtau": 0.2, "k_grid": [4.0]})
    with pytest.raises(StabilityError) as info:
        langevin_simulate(PARAMS, cfg)
    assert info.value.parameter == "dtau"


def test_noiseless_process_stays_at_zero():
    result = langevin_simulate(PARAMS.model_copy(update={"hbar1": 0.0}), SMALL)
    for mode in result.modes:
        assert np.array_equal(mode.covariance, np.zeros((2, 2)))
        assert np.array_equal(mode.covariance_se, np.zeros((2, 2)))
        assert np.all(mode.z_scores() == 0)
    assert result.agreement == 1.0


def test_simulation_is_deterministic_for_a_seed():
    first = langevin_simulate(PARAMS, SMALL)
    second = langevin_simulate(PARAMS, SMALL)
    for a, b in zip(first.modes, second.modes):
        assert np.array_equal(a.covariance, b.covariance)
        assert np.array_equal(a.covariance_se, b.covariance_se)
    other = langevin_simulate(PARAMS, SMALL.model_copy(update={"seed": 12}))
    assert not np.array_equal(first.modes[0].covariance, other.modes[0].covariance)


def test_results_do_not_depend_on_worker_count():
    serial = langevin_simulate(PARAMS, SMALL)
    parallel = langevin_simulate(PARAMS, SMALL.model_copy(update={"workers": 2}))
    for a, b in zip(serial.modes, parallel.modes):
        assert a.ksq == b.ksq
        assert np.array_equal(a.covariance, b.covariance)


def test_mode_streams_are_independent_of_grid_neighbours():
    alone = langevin_simulate(PARAMS, SMALL.model_copy(update={"k_grid": [0.0]}))
    paired = langevin_simulate(PARAMS, SMALL)
    assert np.array_equal(alone.modes[0].covariance, paired.modes[0].covariance)


def test_discretization_bias_reruns_at_half_step():
    estimates = discretization_bias(PARAMS, SMALL)
    assert [e.ksq for e in estimates] == SMALL.k_grid
    for e in estimates:
        assert np.allclose(e.extrapolated, 2 * e.fine - e.coarse)
        assert np.allclose(e.difference, e.coarse - e.fine)


@pytest.mark.slow
def test_sampled_covariance_matches_propagator():
    cfg = SimConfig(n_steps=100_000, seed=20240601)
    result = langevin_simulate(PARAMS, cfg)
    assert result.agreement >= 0.95
    for mode in result.modes:
        assert np.all(np.abs(mode.mean) <= 4 * mode.mean_se + 1e-12)
        assert np.array_equal(mode.exact, propagator(PARAMS, mode.ksq))


@pytest.mark.slow
def test_standard_errors_shrink_with_longer_runs():
    p = FieldParams(m1sq=1, m2sq=4, g=1, hbar1=1, hbar2=0.5)
    short = langevin_simulate(p, SimConfig(n_steps=50_000, n_burnin=2_000))
    long = langevin_simulate(p, SimConfig(n_steps=100_000, n_burnin=2_000))
    ratios = [
        s.covariance_se[e] / l.covariance_se[e]
        for s, l in zip(short.modes, long.modes)
        for e in ((0, 0), (0, 1), (1, 1))
    ]
    assert 1.2 <= float(np.median(ratios)) <= 1.7
