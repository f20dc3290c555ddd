#!/usr/bin/env python3
"""
Test the update maps, their derivatives, Lipschitz coefficients and densities
"""

import sys
from pathlib import Path

# Add project root directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import math

import numpy as np
import pytest

from invertml.errors import DomainError
from invertml.models import (
    ModelSpec,
    filter_step,
    filter_step_deriv,
    lipschitz_coeff,
    lipschitz_series,
    log_density,
)


GARCH = ModelSpec.from_values("beta_t_garch", [0.1, 0.5, 0.1, 0.0, 5.0])


def _central_diff(spec, f, window, h=1e-6):
    return (filter_step(f + h, window, spec) - filter_step(f - h, window, spec)) / (2.0 * h)


def test_garch_step_hand_computed():
    """omega + beta f + alpha (v+1) y^2 f / ((v-2) f + y^2)"""
    print("=== Testing Beta-t-GARCH Update ===")

    assert filter_step(0.2, [1.0], GARCH) == pytest.approx(0.275, abs=1e-12)
    assert filter_step_deriv(0.2, [1.0], GARCH) == pytest.approx(0.734375, abs=1e-12)
    # omega_bar = 0.2, where the derivative is largest
    assert lipschitz_coeff([1.0], GARCH) == pytest.approx(0.734375, abs=1e-12)
    print("✓ step 0.275, derivative 0.734375")


def test_garch_constant_when_news_switched_off():
    spec = ModelSpec.from_values("beta_t_garch", [0.2, 0.5, 0.0, 0.0, 5.0])
    assert filter_step(1.0, [3.7], spec) == pytest.approx(0.7)
    assert filter_step_deriv(1.0, [3.7], spec) == pytest.approx(0.5)


def test_garch_leverage_branch():
    """Negative and zero returns use alpha + gamma"""
    spec = ModelSpec.from_values("beta_t_garch", [0.1, 0.5, 0.1, 0.2, 5.0])
    symmetric = ModelSpec.from_values("beta_t_garch", [0.1, 0.5, 0.3, 0.0, 5.0])
    assert filter_step(0.4, [-1.0], spec) == pytest.approx(filter_step(0.4, [-1.0], symmetric))
    assert filter_step(0.4, [1.0], spec) < filter_step(0.4, [-1.0], spec)
    assert filter_step(0.4, [0.0], spec) == pytest.approx(0.1 + 0.5 * 0.4)


def test_location_step_outside_domain():
    """alpha = 0 collapses F_theta to a point; the map is still defined elsewhere"""
    spec = ModelSpec.from_values("t_location", [0.1, 0.5, 0.0, 1.0, 5.0])
    assert filter_step(0.3, [1.0], spec) == pytest.approx(0.25)


def test_tv_ar_step_and_derivative():
    print("=== Testing Time-Varying AR Update ===")
    spec = ModelSpec.from_values("tv_ar", [0.1, 0.9, 0.05, 1.0, 4.0])
    # u = 2 - 0.5 * 2 = 1, 1 + u^2 / (v sigma^2) = 1.25
    assert filter_step(0.5, [2.0, 2.0], spec) == pytest.approx(0.1 + 0.45 + 0.08)
    # u = 0 puts the kernel at its minimum -1
    assert filter_step_deriv(1.0, [2.0, 2.0], spec) == pytest.approx(0.9 - 0.05 * 4.0)
    assert lipschitz_coeff([0.3, 2.0], spec) == pytest.approx(max(abs(0.9 - 0.2), abs(0.9 + 0.2 / 8.0)))


@pytest.mark.parametrize("model,values,window,f", [
    ("beta_t_garch", [0.1, 0.8, 0.05, 0.05, 6.0], [1.3], 0.9),
    ("beta_t_garch", [0.1, 0.8, 0.05, 0.05, 6.0], [-0.2], 2.5),
    ("tv_ar", [0.0, 0.9, 0.08, 1.0, 5.0], [0.7, -1.4], 0.3),
    ("t_location", [0.05, 0.7, 0.4, 1.0, 5.0], [2.1], 0.1),
])
def test_derivative_matches_finite_differences(model, values, window, f):
    spec = ModelSpec.from_values(model, values)
    assert filter_step_deriv(f, window, spec) == pytest.approx(_central_diff(spec, f, window), rel=1e-5, abs=1e-8)


@pytest.mark.parametrize("model,values,window", [
    ("beta_t_garch", [0.1, 0.8, 0.05, 0.05, 6.0], [1.3]),
    ("beta_t_garch", [0.1, 0.8, 0.05, 0.05, 6.0], [-0.05]),
    ("tv_ar", [0.0, 0.9, 0.08, 1.0, 5.0], [0.7, -1.4]),
    ("t_location", [0.05, 0.7, 0.4, 1.0, 5.0], [2.1]),
    ("t_location", [0.05, 0.7, 0.4, 1.0, 5.0], [0.1]),
])
def test_lipschitz_dominates_grid_of_derivatives(model, values, window):
    """Lambda_t is the supremum of |d phi/d f| over F_theta"""
    spec = ModelSpec.from_values(model, values)
    from invertml.models import ModelFactory
    lo, hi = ModelFactory.create_model(spec).domain().search_bounds(50.0)
    grid = np.linspace(lo, hi, 20001)
    derivs = [abs(filter_step_deriv(f, window, spec)) for f in grid]
    lam = lipschitz_coeff(window, spec)
    assert lam >= max(derivs) - 1e-9
    assert lam == pytest.approx(max(derivs), rel=1e-3)


def test_lipschitz_series_alignment():
    """One coefficient per observation after the k leading lags"""
    spec = ModelSpec.from_values("tv_ar", [0.0, 0.9, 0.08, 1.0, 5.0])
    series = [0.5, -1.0, 2.0, 0.3]
    lam = lipschitz_series(series, spec)
    assert lam.shape == (3,)
    assert lam[1] == pytest.approx(lipschitz_coeff([2.0, -1.0], spec))

    with pytest.raises(DomainError):
        lipschitz_series([0.5, math.nan, 1.0], spec)


def test_garch_log_density_value():
    """Standardised Student-t with unit variance at y = 0"""
    spec = ModelSpec.from_values("beta_t_garch", [0.1, 0.5, 0.1, 0.0, 4.0])
    assert log_density(0.0, 1.0, spec) == pytest.approx(-0.63428, abs=1e-4)


def test_densities_integrate_to_one():
    grid = np.linspace(-60.0, 60.0, 24001)
    dx = grid[1] - grid[0]
    cases = [
        (ModelSpec.from_values("beta_t_garch", [0.1, 0.5, 0.1, 0.0, 6.0]), 1.5, None),
        (ModelSpec.from_values("t_location", [0.0, 0.5, 0.1, 1.2, 6.0]), 0.0, None),
        (ModelSpec.from_values("tv_ar", [0.0, 0.5, 0.1, 0.8, 6.0]), 0.4, 1.5),
    ]
    for spec, f, y_lag in cases:
        dens = np.exp([log_density(y, f, spec, y_lag) for y in grid])
        assert float(dens.sum() * dx) == pytest.approx(1.0, abs=2e-3)


def test_invalid_inputs_raise_domain_error():
    with pytest.raises(DomainError):
        filter_step(math.nan, [1.0], GARCH)
    with pytest.raises(DomainError):
        filter_step(0.3, [math.inf], GARCH)
    with pytest.raises(DomainError):
        filter_step(0.3, [1.0, 2.0], GARCH)
    # below omega_bar = 0.2
    with pytest.raises(DomainError):
        log_density(1.0, 0.1, GARCH)
    tv_ar = ModelSpec.from_values("tv_ar", [0.0, 0.9, 0.08, 1.0, 5.0])
    with pytest.raises(DomainError):
        log_density(1.0, 0.2, tv_ar)
