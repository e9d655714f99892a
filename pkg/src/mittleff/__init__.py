"""Numerics for Mittag-Leffler functions, their composition algebra,
time-fractional evolution problems, and fractional counting statistics.
"""

from .errors import ConvergenceError, DomainError, EnvelopeError
from .scalar_core import (
    QuadratureRule,
    gauss_laguerre_rule,
    log_gamma,
    reciprocal_gamma,
)
from .mittag import (
    MLParams,
    SeriesResult,
    deriv_ml_integer,
    e_sab,
    laguerre_exp,
    laguerre_limit_term,
    ml_e,
    ml_trig,
    ml_via_borel,
    wright,
)
from .umbral import (
    UmbralKind,
    UmbralMoment,
    laguerre_binomial_power,
    ml_binomial,
    ml_compose_power,
    ml_gaussian_integral,
    ml_semigroup_sum,
    ml_stretched_integral,
    umbral_c_moment,
    umbral_d_moment,
)
from .fracpde import (
    DriftSolution,
    GenPowerSeries,
    GridFunction,
    gaussian_profile,
    grid_second_moment,
    hermite_kdf,
    ml_derivative_apply,
    ml_series_frac_powers,
    ml_series_integer_powers,
    rl_frac_derivative,
    solve_drift_pde,
    solve_fractional_diffusion,
)
from .fracstats import (
    CountDistribution,
    MomentSummary,
    Variant,
    build_count_distribution,
    coherent_amplitude_laskin,
    generating_function_value,
    hermitian_square_amplitude,
    laskin_moments,
    p_m_laskin,
    p_m_schrodinger,
    sample_counts,
    schrodinger_moments,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EnvelopeError",
    "QuadratureRule",
    "gauss_laguerre_rule",
    "log_gamma",
    "reciprocal_gamma",
    "MLParams",
    "SeriesResult",
    "deriv_ml_integer",
    "e_sab",
    "laguerre_exp",
    "laguerre_limit_term",
    "ml_e",
    "ml_trig",
    "ml_via_borel",
    "wright",
    "UmbralKind",
    "UmbralMoment",
    "laguerre_binomial_power",
    "ml_binomial",
    "ml_compose_power",
    "ml_gaussian_integral",
    "ml_semigroup_sum",
    "ml_stretched_integral",
    "umbral_c_moment",
    "umbral_d_moment",
    "DriftSolution",
    "GenPowerSeries",
    "GridFunction",
    "gaussian_profile",
    "grid_second_moment",
    "hermite_kdf",
    "ml_derivative_apply",
    "ml_series_frac_powers",
    "ml_series_integer_powers",
    "rl_frac_derivative",
    "solve_drift_pde",
    "solve_fractional_diffusion",
    "CountDistribution",
    "MomentSummary",
    "Variant",
    "build_count_distribution",
    "coherent_amplitude_laskin",
    "generating_function_value",
    "hermitian_square_amplitude",
    "laskin_moments",
    "p_m_laskin",
    "p_m_schrodinger",
    "sample_counts",
    "schrodinger_moments",
    "__version__",
]
