"""ramlab: statistics of ramified primes in low-degree number fields.

Exact local densities, an independent-Bernoulli model with exact and
sampled moments, a segmented omega(n) sieve, enumeration of quadratic and
cubic fields by discriminant, and the comparison statistics between them.
"""

__version__ = "0.1.0"

from .densities import (FamilySpec, density, gaussian_moment, local_density,
                        loglog_mean)
from .intsieve import Histogram, omega_histogram, omega_of
from .model import (BernoulliFamily, ModelDistribution, MomentReport,
                    exact_distribution, exact_moments, paper_cutoff, sample,
                    standardized_moments)
from .quadfields import FieldRecord, enumerate_fundamental_discriminants
from .cubicfields import (CubicForm, enumerate_cubic_fields,
                          enumerate_reduced_forms, form_discriminant,
                          is_maximal_at)
from .stats import (StandardizedSample, central_moment, divisibility_count,
                    ks_distance, truncated_omega, truncated_raw_moment)

__all__ = [
    "FamilySpec", "density", "gaussian_moment", "local_density", "loglog_mean",
    "Histogram", "omega_histogram", "omega_of",
    "BernoulliFamily", "ModelDistribution", "MomentReport",
    "exact_distribution", "exact_moments", "paper_cutoff", "sample",
    "standardized_moments",
    "FieldRecord", "enumerate_fundamental_discriminants",
    "CubicForm", "enumerate_cubic_fields", "enumerate_reduced_forms",
    "form_discriminant", "is_maximal_at",
    "StandardizedSample", "central_moment", "divisibility_count",
    "ks_distance", "truncated_omega", "truncated_raw_moment",
]
