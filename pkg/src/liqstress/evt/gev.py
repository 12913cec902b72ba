"""Block-maxima extreme value fitting and stress quantiles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .types import ConvergenceError, StressValue

_EULER_GAMMA = 0.5772156649015329
_XI_GUMBEL_TOL = 1e-9


@dataclass(frozen=True)
class GevParams:
    """Location, scale and shape of a generalized extreme value law."""

    mu: float
    sigma: float
    xi: float

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")


def block_maxima(series, block_len: int) -> np.ndarray:
    """Maxima of consecutive non-overlapping blocks; the trailing partial block is dropped."""
    if block_len < 1:
        raise ValueError(f"block_len must be >= 1, got {block_len}")
    x = np.asarray(series, dtype=float)
    n_blocks = x.size // block_len
    if n_blocks == 0:
        raise ValueError(
            f"series of length {x.size} is shorter than one block of {block_len}"
        )
    return x[: n_blocks * block_len].reshape(n_blocks, block_len).max(axis=1)


def gev_neg_loglik(mu: float, sigma: float, xi: float, x: np.ndarray) -> float:
    """Negative log-likelihood; large penalty outside the support."""
    z = (x - mu) / sigma
    if abs(xi) < _XI_GUMBEL_TOL:
        return x.size * math.log(sigma) + float(np.sum(z + np.exp(-z)))
    t = 1.0 + xi * z
    if np.any(t <= 0):
        return 1e10 * (1.0 + float(np.sum(np.maximum(0.0, -t))))
    return (
        x.size * math.log(sigma)
        + (1.0 + 1.0 / xi) * float(np.sum(np.log(t)))
        + float(np.sum(t ** (-1.0 / xi)))
    )


def _pwm_init(x: np.ndarray) -> GevParams:
    """Probability-weighted-moments starting point for the likelihood search."""
    xs = np.sort(x)
    n = xs.size
    j = np.arange(1, n + 1, dtype=float)
    b0 = xs.mean()
    b1 = float(np.sum((j - 1) / (n - 1) * xs)) / n
    b2 = float(np.sum((j - 1) * (j - 2) / ((n - 1) * (n - 2)) * xs)) / n
    c = (2 * b1 - b0) / (3 * b2 - b0) - math.log(2) / math.log(3)
    k = 7.8590 * c + 2.9554 * c * c
    if abs(k) < 1e-6:
        sigma = (2 * b1 - b0) / math.log(2)
        mu = b0 - _EULER_GAMMA * sigma
        xi = 0.0
    else:
        gk = math.gamma(1.0 + k)
        sigma = (2 * b1 - b0) * k / (gk * (1.0 - 2.0**-k))
        mu = b0 + sigma * (gk - 1.0) / k
        xi = -k
    if not (sigma > 0 and math.isfinite(sigma) and math.isfinite(mu)):
        # fall back to a Gumbel moment fit
        sigma = float(np.std(xs)) * math.sqrt(6.0) / math.pi
        mu = b0 - _EULER_GAMMA * sigma
        xi = 0.1
    xi = min(max(xi, -0.9), 0.9)
    return GevParams(mu, sigma, xi)


def fit_gev(maxima, min_maxima: int = 20) -> GevParams:
    """Maximum-likelihood GEV fit of a block-maxima sample.

    Runs a derivative-free simplex over (mu, log sigma, xi) from a
    probability-weighted-moments start; the returned point never has a lower
    likelihood than that start.

    Raises:
        ValueError: fewer than min_maxima points, or a zero-variance sample.
        ConvergenceError: no finite likelihood anywhere along the search.
    """
    x = np.asarray(maxima, dtype=float)
    if x.size < min_maxima:
        raise ValueError(f"need at least {min_maxima} maxima, got {x.size}")
    if float(np.std(x)) == 0.0:
        raise ValueError("degenerate sample: all block maxima are equal")

    init = _pwm_init(x)
    x0 = np.array([init.mu, math.log(init.sigma), init.xi])

    def objective(theta: np.ndarray) -> float:
        mu, log_sigma, xi = theta
        if not np.all(np.isfinite(theta)) or abs(log_sigma) > 50:
            return 1e12
        return gev_neg_loglik(mu, math.exp(log_sigma), xi, x)

    result = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-10, "maxiter": 5000, "maxfev": 5000},
    )
    nll_init = objective(x0)
    nll_best = objective(result.x)
    if not math.isfinite(min(nll_init, nll_best)):
        raise ConvergenceError("likelihood not finite at any candidate")
    if nll_best <= nll_init:
        mu, log_sigma, xi = result.x
        return GevParams(float(mu), float(math.exp(log_sigma)), float(xi))
    return init


def gev_quantile(params: GevParams, alpha: float) -> float:
    """Inverse CDF at probability alpha."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    loglog = -math.log(alpha)
    if abs(params.xi) < _XI_GUMBEL_TOL:
        return params.mu - params.sigma * math.log(loglog)
    return params.mu - params.sigma / params.xi * (1.0 - loglog**-params.xi)


def gev_cdf(params: GevParams, x: float) -> float:
    if abs(params.xi) < _XI_GUMBEL_TOL:
        return math.exp(-math.exp(-(x - params.mu) / params.sigma))
    t = 1.0 + params.xi * (x - params.mu) / params.sigma
    if t <= 0:
        return 0.0 if params.xi > 0 else 1.0
    return math.exp(-(t ** (-1.0 / params.xi)))


def gev_stress(
    params: GevParams, block_len: int, return_time: float
) -> StressValue:
    """Shock of a given return time implied by a block-maxima fit.

    The block maxima law is read at probability 1 - block_len / return_time,
    both in trading days, so the block's worst outcome is exceeded once per
    return period on average.
    """
    if return_time <= block_len:
        raise ValueError(
            f"return_time ({return_time}) must exceed the block length ({block_len})"
        )
    alpha = 1.0 - block_len / return_time
    return StressValue(return_time, gev_quantile(params, alpha))
