"""Exact Poincare series of the covariant algebra of a binary form.

The library computes graded dimensions exactly, reconstructs the series
as a rational function, extracts the degree data from its Laurent
expansion at z = 1, and verifies the results against an independent
partition-counting oracle, exact closed forms, and rigorous quadrature.
"""

from .closed_forms import (
    DegreePair,
    PiMultiple,
    c_constant,
    deg_covariants,
    deg_invariants,
    degree_pair,
    psi_covariants,
    wolstenholme_integral,
)
from .engine import (
    GorensteinReport,
    LaurentHead,
    ReconstructionError,
    covariant_series,
    gorenstein_check,
    laurent_at_one,
    poincare_series,
    reconstruct_rational,
)
from .exact import Polynomial, RationalFunction, TruncatedSeries, poly_divmod, poly_gcd
from .multisection import AlphaHead, alpha_head, multisect, roots_of_unity_check
from .numerics import (
    SCALED_DEGREE_LIMIT,
    SCALED_INTEGRAL_LIMIT,
    AccuracyError,
    AsymptoticSample,
    asymptotic_scan,
    deg_asymptotic_ratio,
    integral_sinc_pow,
)
from .oracle import dim_covariants, partition_count
from .qseries import (
    pochhammer_head_at_one,
    q_pochhammer,
    term_laurent_head,
    term_rational,
    term_series,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "TruncatedSeries",
    "RationalFunction",
    "poly_gcd",
    "poly_divmod",
    "q_pochhammer",
    "term_rational",
    "term_series",
    "pochhammer_head_at_one",
    "term_laurent_head",
    "multisect",
    "AlphaHead",
    "alpha_head",
    "roots_of_unity_check",
    "covariant_series",
    "reconstruct_rational",
    "poincare_series",
    "laurent_at_one",
    "gorenstein_check",
    "ReconstructionError",
    "LaurentHead",
    "GorensteinReport",
    "PiMultiple",
    "DegreePair",
    "c_constant",
    "deg_covariants",
    "psi_covariants",
    "degree_pair",
    "deg_invariants",
    "wolstenholme_integral",
    "partition_count",
    "dim_covariants",
    "AccuracyError",
    "AsymptoticSample",
    "integral_sinc_pow",
    "asymptotic_scan",
    "deg_asymptotic_ratio",
    "SCALED_INTEGRAL_LIMIT",
    "SCALED_DEGREE_LIMIT",
    "__version__",
]
