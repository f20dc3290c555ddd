#!/usr/bin/env python3
"""
Test the data-generating processes
"""

import sys
from pathlib import Path

# Add project root directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import numpy as np
import pytest

from invertml.errors import ConfigError, NonstationarityError
from invertml.models import ModelSpec
from invertml.simulation import recovery_gap, simulate, student_t_draws, make_rng


GARCH = ModelSpec.from_values("beta_t_garch", [0.05, 0.9, 0.03, 0.02, 6.0])


def test_simulation_is_reproducible():
    print("=== Testing Simulation Reproducibility ===")
    a = simulate(GARCH, n=300, seed=42, burn_in=100)
    b = simulate(GARCH, n=300, seed=42, burn_in=100)
    c = simulate(GARCH, n=300, seed=43, burn_in=100)
    np.testing.assert_array_equal(a.series, b.series)
    np.testing.assert_array_equal(a.true_path, b.true_path)
    assert not np.array_equal(a.series, c.series)
    print("✓ Same seed, same path")


def test_output_lengths():
    garch = simulate(GARCH, n=50, seed=1, burn_in=10)
    assert len(garch.series) == 50
    assert garch.n == 50
    tv_ar = simulate(ModelSpec.from_values("tv_ar", [0.0, 0.9, 0.05, 1.0, 5.0]), n=50, seed=1, burn_in=10)
    # leading lag y_0
    assert len(tv_ar.series) == 51
    assert len(tv_ar.true_path) == 50


def test_constant_variance_path():
    """alpha = gamma = 0 keeps f at omega / (1 - beta)"""
    spec = ModelSpec.from_values("beta_t_garch", [0.2, 0.5, 0.0, 0.0, 5.0])
    sim = simulate(spec, n=100, seed=3, burn_in=0)
    np.testing.assert_allclose(sim.true_path, 0.4)


def test_true_path_generates_observations():
    """y_t = f_t y_{t-1} + sigma eps_t uses f_t from the stored path"""
    spec = ModelSpec.from_values("tv_ar", [0.0, 0.9, 0.05, 1.0, 5.0])
    sim = simulate(spec, n=200, seed=5, burn_in=50)
    residual = sim.series[1:] - sim.true_path * sim.series[:-1]
    eps = student_t_draws(make_rng(5), 5.0, 50 + 1 + 200)[50 + 1:]
    np.testing.assert_allclose(residual, eps, atol=1e-9)


def test_filter_recovers_true_path():
    """Filtering at the true parameter forgets the wrong start"""
    sim = simulate(GARCH, n=1000, seed=9, burn_in=500)
    gap = recovery_gap(sim, f0=sim.true_path[0] * 5.0)
    assert gap[0] > 0.0
    assert gap[-1] < 1e-6


def test_sample_variance_matches_level():
    spec = ModelSpec.from_values("beta_t_garch", [0.1, 0.8, 0.05, 0.05, 8.0])
    sim = simulate(spec, n=20000, seed=2, burn_in=1000)
    # E f = omega / (1 - beta - alpha - gamma / 2)
    assert float(np.var(sim.series)) == pytest.approx(0.1 / 0.125, rel=0.15)


def test_explosive_parameters_raise():
    spec = ModelSpec.from_values("beta_t_garch", [0.1, 0.95, 0.6, 0.0, 6.0])
    with pytest.raises(NonstationarityError):
        simulate(spec, n=5000, seed=0, burn_in=1000)


def test_invalid_arguments():
    with pytest.raises(ConfigError):
        simulate(ModelSpec.from_values("beta_t_garch", [0.1, 1.2, 0.1, 0.0, 6.0]), n=10, seed=0)
    with pytest.raises(ConfigError):
        simulate(GARCH, n=0, seed=0)
    with pytest.raises(ConfigError):
        simulate(GARCH, n=10, seed=0, burn_in=-1)
