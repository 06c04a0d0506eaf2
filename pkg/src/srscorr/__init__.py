"""srscorr: exact high-order inclusion correlations of simple random
sampling, their polynomial coefficient expansions, and the scaled
large-population limits — cross-validated by enumeration and Monte Carlo.
"""

from .correlation import (
    AlphaTable,
    CorrRecord,
    LimitSpec,
    alpha_coefficients,
    coefficient_limit,
    convergence_scan,
    corr_exact,
    evaluate_correlation,
    limit_spec,
    parity_exponent,
    theorem_limit,
)
from .errors import DomainError, EnumerationBoundError, SrsCorrError
from .exactnum import (
    HalfInteger,
    Rational,
    alternating_fraction_sum,
    bernoulli,
    binomial,
    falling_factorial,
    gamma_ratio,
    normal_moment,
    parse_rational,
    rational_str,
    stirling_first_unsigned,
    stirling_second,
    sum_of_powers,
)
from .oracle import (
    DEFAULT_MC_SEED,
    McEstimate,
    SampleSubset,
    SplitMix64,
    brute_force_corr,
    hypergeom_inclusion_prob,
    monte_carlo_corr,
    sample_srs,
)
from .ppoly import (
    Poly,
    elementary_sum_oracle,
    falling_factorial_via_p0,
    p0_eval,
    p_poly,
    weighted_prefix_poly,
)
from .report import decimal_str, emit_report
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlphaTable",
    "CheckResult",
    "CorrRecord",
    "DEFAULT_MC_SEED",
    "DomainError",
    "EnumerationBoundError",
    "HalfInteger",
    "LimitSpec",
    "McEstimate",
    "Poly",
    "Rational",
    "SampleSubset",
    "SplitMix64",
    "SrsCorrError",
    "alpha_coefficients",
    "alternating_fraction_sum",
    "bernoulli",
    "binomial",
    "brute_force_corr",
    "coefficient_limit",
    "convergence_scan",
    "corr_exact",
    "decimal_str",
    "elementary_sum_oracle",
    "emit_report",
    "evaluate_correlation",
    "falling_factorial",
    "falling_factorial_via_p0",
    "gamma_ratio",
    "hypergeom_inclusion_prob",
    "limit_spec",
    "monte_carlo_corr",
    "normal_moment",
    "p0_eval",
    "p_poly",
    "parity_exponent",
    "parse_rational",
    "rational_str",
    "run_suite",
    "sample_srs",
    "stirling_first_unsigned",
    "stirling_second",
    "sum_of_powers",
    "theorem_limit",
    "weighted_prefix_poly",
]
