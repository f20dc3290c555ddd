#!/usr/bin/env python3
"""
Test the Newey-West long-run variance and normal helpers
"""

import sys
from pathlib import Path

# Add project root directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

import numpy as np
import pytest
from scipy.signal import lfilter

from invertml.errors import DataError, DomainError
from invertml.inference import default_bandwidth, newey_west_variance, normal_cdf, normal_quantile


def test_alternating_series():
    """gamma_0 = 1, gamma_1 = -3/4, weight 1/2 gives 1 - 3/4 = 1/4"""
    print("=== Testing Newey-West Variance ===")
    assert newey_west_variance([1.0, -1.0, 1.0, -1.0], bandwidth=1) == pytest.approx(0.25)
    assert newey_west_variance([1.0, -1.0, 1.0, -1.0], bandwidth=0) == pytest.approx(1.0)
    print("✓ Hand-computed value reproduced")


def test_default_bandwidth_rule():
    assert default_bandwidth(100) == 4
    assert default_bandwidth(435) == 5
    assert default_bandwidth(1000) == 6
    assert default_bandwidth(2) == 1


def test_ar1_long_run_variance():
    """Long-run variance of an AR(1) with coefficient 0.5 and unit shocks is 1 / (1 - 0.5)^2"""
    rng = np.random.default_rng(31)
    e = rng.standard_normal(200_000)
    x = np.empty_like(e)
    x[0] = e[0]
    for t in range(1, len(e)):
        x[t] = 0.5 * x[t - 1] + e[t]
    assert newey_west_variance(x, bandwidth=100) == pytest.approx(4.0, rel=0.1)


def test_default_bandwidth_long_ar1():
    """At n = 100000 the default bandwidth is 18; Bartlett weights leave the average near 3.72"""
    print("=== Testing Default Bandwidth On Long AR(1) ===")
    n = 100_000
    assert default_bandwidth(n) == 18
    estimates = []
    for seed in range(20):
        e = np.random.default_rng(seed).standard_normal(n)
        estimates.append(newey_west_variance(lfilter([1.0], [1.0, -0.5], e)))
    average = float(np.mean(estimates))
    assert average == pytest.approx(4.0, rel=0.15)
    print(f"✓ average long-run variance {average:.3f}")


def test_invalid_inputs():
    with pytest.raises(DataError):
        newey_west_variance([1.0])
    with pytest.raises(DataError):
        newey_west_variance([1.0, 2.0, 3.0], bandwidth=3)


def test_normal_helpers():
    assert normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-6)
    assert normal_cdf(0.0) == pytest.approx(0.5)
    assert normal_cdf(normal_quantile(0.05)) == pytest.approx(0.05)
    for p in (0.0, 1.0, float("nan")):
        with pytest.raises(DomainError):
            normal_quantile(p)
