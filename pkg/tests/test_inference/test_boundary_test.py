#!/usr/bin/env python3
"""
Test the boundary statistic and the confidence-set memberships
"""

import sys
from pathlib import Path

# Add project root directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import math

import numpy as np
import pytest
from scipy.signal import lfilter

from invertml.errors import DataError, DegenerateVarianceError, DomainError
from invertml.inference import (
    boundary_test_from_terms,
    confidence_membership,
    invertibility_test,
    membership_from_test,
)
from invertml.models import ModelSpec
from invertml.simulation import simulate


def test_statistic_from_terms():
    print("=== Testing Boundary Statistic ===")
    rng = np.random.default_rng(1)
    x = rng.standard_normal(400) - 0.3
    result = boundary_test_from_terms(x, bandwidth=0)
    expected = math.sqrt(400) * x.mean() / math.sqrt(np.var(x))
    assert result.t_stat == pytest.approx(expected)
    assert result.p_left + result.p_right == pytest.approx(1.0)
    assert result.p_two_sided == pytest.approx(2.0 * min(result.p_left, result.p_right))
    assert result.bandwidth == 0
    assert result.mean_log_lambda == pytest.approx(x.mean())
    print(f"✓ T_n = {result.t_stat:.3f}")


def test_null_rejection_rate():
    """Zero-mean i.i.d. terms reject at about the nominal 5% level"""
    rng = np.random.default_rng(77)
    rejections = 0
    trials = 400
    for _ in range(trials):
        result = boundary_test_from_terms(rng.standard_normal(500))
        rejections += result.p_two_sided < 0.05
    assert 0.02 < rejections / trials < 0.09


def test_null_rejection_rate_long_streams():
    """500 zero-mean streams of length 2000 with the default bandwidth"""
    print("=== Testing Boundary Test Size ===")
    rng = np.random.default_rng(2000)
    trials = 500
    rejections = sum(boundary_test_from_terms(rng.standard_normal(2000)).p_two_sided < 0.05
                     for _ in range(trials))
    assert 0.03 <= rejections / trials <= 0.08
    print(f"✓ rejection rate {rejections / trials:.3f}")


def test_power_against_dependent_negative_mean():
    """Mean -0.2 with AR(1) dependence: T_n falls below z_0.05 in nearly every stream"""
    rng = np.random.default_rng(5)
    trials = 200
    hits = 0
    for _ in range(trials):
        x = lfilter([1.0], [1.0, -0.3], rng.standard_normal(2000)) - 0.2
        hits += boundary_test_from_terms(x).t_stat < -1.645
    assert hits / trials >= 0.99


def test_constant_terms_are_degenerate():
    with pytest.raises(DegenerateVarianceError):
        boundary_test_from_terms(np.full(50, math.log(0.6)))


def test_small_or_infinite_samples():
    with pytest.raises(DataError):
        boundary_test_from_terms(np.zeros(29))
    terms = np.random.default_rng(0).standard_normal(40)
    terms[3] = -math.inf
    with pytest.raises(DomainError):
        boundary_test_from_terms(terms)


def test_membership_thresholds():
    base = boundary_test_from_terms(np.random.default_rng(2).standard_normal(100))
    inside = membership_from_test(base.__class__(**{**base.to_dict(), "t_stat": -3.0}), alpha=0.05)
    assert inside.in_up and inside.in_lo
    boundary = membership_from_test(base.__class__(**{**base.to_dict(), "t_stat": 0.0}), alpha=0.05)
    assert boundary.in_up and not boundary.in_lo
    outside = membership_from_test(base.__class__(**{**base.to_dict(), "t_stat": 3.0}), alpha=0.05)
    assert not outside.in_up and not outside.in_lo
    with pytest.raises(DomainError):
        membership_from_test(base, alpha=0.7)


def test_well_inside_region_is_in_both_sets():
    spec = ModelSpec.from_values("beta_t_garch", [0.05, 0.85, 0.04, 0.04, 7.0])
    series = simulate(spec, n=1000, seed=13, burn_in=300).series
    membership = confidence_membership(series, spec, alpha=0.05)
    assert membership.test.t_stat < -1.645
    assert membership.in_up and membership.in_lo
    assert invertibility_test(series, spec).t_stat == pytest.approx(membership.test.t_stat)
    assert membership.to_dict()["test"]["n"] == 1000
