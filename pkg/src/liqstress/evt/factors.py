"""Shock-factor samples and the historical / conditional stress estimators."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

import numpy as np

from .types import AggregationMode, FactorKind, FactorSample, StressValue


def make_factor_sample(
    series,
    horizon: int,
    kind: FactorKind,
    reductive: bool = False,
) -> FactorSample:
    """Overlapping h-day shock factors from a parameter time series.

    Multiplicative factors are p[t+h] / p[t], additive ones p[t+h] - p[t].
    Windows overlap to keep the sample as large as possible (block maxima
    later re-impose independence through non-overlapping blocks).

    reductive flips multiplicative ratios to p[t] / p[t+h]; use it for series
    like trading volume where the stress direction is a drop, so that large
    factors mean stress for downstream quantiles (a volume factor m maps to a
    participation factor 1/m).
    """
    x = np.asarray(series, dtype=float)
    if x.size <= horizon:
        raise ValueError(
            f"series of length {x.size} too short for horizon {horizon}"
        )
    if kind is FactorKind.MULT:
        if np.any(x <= 0):
            raise ValueError("multiplicative factors need positive series values")
        values = x[horizon:] / x[:-horizon]
        if reductive:
            values = 1.0 / values
    else:
        if reductive:
            raise ValueError("reductive orientation only applies to ratios")
        values = x[horizon:] - x[:-horizon]
    return FactorSample(values, horizon, kind)


def cross_section_aggregate(
    samples: Sequence[FactorSample], mode: AggregationMode
) -> FactorSample:
    """Combine per-security factor samples into one.

    Pooling concatenates everything; averaging takes the cross-sectional mean
    position by position, which requires date-aligned (equal length) samples.
    The same call also serves the block-maxima pipeline: wrap each security's
    per-block maxima in a FactorSample and average across securities.
    """
    if len(samples) == 0:
        raise ValueError("need at least one sample")
    kind = samples[0].kind
    horizon = samples[0].horizon
    for s in samples[1:]:
        if s.kind is not kind or s.horizon != horizon:
            raise ValueError("samples must share kind and horizon")
    if mode is AggregationMode.POOLING:
        values = np.concatenate([s.values for s in samples])
    else:
        sizes = {s.values.size for s in samples}
        if len(sizes) != 1:
            raise ValueError(
                "averaging needs date-aligned samples of equal length"
            )
        values = np.mean(np.vstack([s.values for s in samples]), axis=0)
    return FactorSample(values, horizon, kind)


def historical_stress(
    sample: FactorSample, return_time: float, horizon: int | None = None
) -> StressValue | None:
    """Empirical quantile of the factor sample at the return-time level.

    The level is 1 - horizon / return_time with both in trading days: an
    h-day shock recurring once per return period. Linear interpolation
    between order statistics. Returns None when the sample cannot resolve
    the quantile (fewer than one expected tail observation), mirroring a
    blank table cell rather than extrapolating.
    """
    h = sample.horizon if horizon is None else horizon
    if return_time <= h:
        raise ValueError(
            f"return_time ({return_time}) must exceed the horizon ({h})"
        )
    alpha = 1.0 - h / return_time
    n = sample.values.size
    if (1.0 - alpha) * n < 1.0 - 1e-12:
        return None
    return StressValue(return_time, float(np.quantile(sample.values, alpha)))


@dataclass(frozen=True)
class ConditionalStressFit:
    """OLS projection of a liquidity parameter on risk factors."""

    coefficients: np.ndarray  # intercept first
    value: float


def conditional_stress(
    series, factors, factor_stress
) -> ConditionalStressFit:
    """Stressed parameter from a linear factor model.

    Regresses the parameter series on the factor matrix (with intercept) and
    evaluates the fit at the stressed factor vector. No factors at all is
    allowed and reduces to the sample mean.

    Raises:
        ValueError: rank-deficient design or too few observations.
    """
    y = np.asarray(series, dtype=float)
    F = np.asarray(factors, dtype=float)
    if F.ndim == 1:
        F = F[:, None]
    if F.size == 0:
        F = F.reshape(y.size, 0)
    m = F.shape[1]
    if y.size < m + 2:
        raise ValueError(f"need at least {m + 2} observations for {m} factors")
    X = np.column_stack([np.ones(y.size), F])
    if np.linalg.matrix_rank(X) < m + 1:
        raise ValueError("rank-deficient design matrix")
    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    stress = np.asarray(factor_stress, dtype=float).reshape(m)
    value = float(coef[0] + coef[1:] @ stress)
    return ConditionalStressFit(coef, value)


def moving_average_filter(series, window: int = 10) -> np.ndarray:
    """Trailing moving average, an optional smoother for noisy end-of-day marks."""
    x = np.asarray(series, dtype=float)
    if window < 1:
        raise ValueError("window must be >= 1")
    out = np.convolve(x, np.ones(window) / window, mode="valid")
    return out


def cross_sectional_median(panel) -> np.ndarray:
    """Per-date median across securities, the other optional de-noising filter."""
    arr = np.asarray(panel, dtype=float)
    if arr.ndim != 2:
        raise ValueError("panel must be 2-dimensional (securities x dates)")
    return np.median(arr, axis=0)
