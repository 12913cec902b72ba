"""Extreme-value stress calibration: block maxima, peaks over threshold, factors."""

from .. import constants
from .factors import (
    ConditionalStressFit,
    conditional_stress,
    cross_section_aggregate,
    cross_sectional_median,
    historical_stress,
    make_factor_sample,
    moving_average_filter,
)
from .gev import (
    GevParams,
    block_maxima,
    fit_gev,
    gev_cdf,
    gev_neg_loglik,
    gev_quantile,
    gev_stress,
)
from .gpd import (
    GpdParams,
    fit_gpd,
    gpd_neg_loglik,
    gpd_stress,
    gpd_tail_cdf,
    mean_residual_life,
    suggest_threshold,
)
from .types import (
    AggregationMode,
    ConvergenceError,
    FactorKind,
    FactorSample,
    StressValue,
)

DEFAULT_BLOCK_LEN = 21


def years_to_days(years: float) -> float:
    """Return time in trading days from years."""
    return years * constants.TRADING_DAYS_PER_YEAR


__all__ = [
    "AggregationMode",
    "ConditionalStressFit",
    "ConvergenceError",
    "DEFAULT_BLOCK_LEN",
    "FactorKind",
    "FactorSample",
    "GevParams",
    "GpdParams",
    "StressValue",
    "block_maxima",
    "conditional_stress",
    "cross_section_aggregate",
    "cross_sectional_median",
    "fit_gev",
    "fit_gpd",
    "gev_cdf",
    "gev_neg_loglik",
    "gev_quantile",
    "gev_stress",
    "gpd_neg_loglik",
    "gpd_stress",
    "gpd_tail_cdf",
    "historical_stress",
    "make_factor_sample",
    "mean_residual_life",
    "moving_average_filter",
    "suggest_threshold",
    "years_to_days",
]
