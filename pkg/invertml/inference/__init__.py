"""Boundary test, Newey-West variance and confidence-set membership"""

from .normal import normal_cdf, normal_quantile
from .hac import newey_west_variance, default_bandwidth
from .boundary_test import (
    TestResult,
    ConfidenceMembership,
    boundary_test_from_terms,
    invertibility_test,
    membership_from_test,
    confidence_membership,
)

__all__ = [
    'normal_cdf',
    'normal_quantile',
    'newey_west_variance',
    'default_bandwidth',
    'TestResult',
    'ConfidenceMembership',
    'boundary_test_from_terms',
    'invertibility_test',
    'membership_from_test',
    'confidence_membership',
]
