"""Peaks-over-threshold fitting: mean residual life, GPD likelihood, stress quantiles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .types import ConvergenceError, StressValue

_XI_EXP_TOL = 1e-9


@dataclass(frozen=True)
class GpdParams:
    """Generalized Pareto fit above a threshold, with sample bookkeeping.

    n is the full sample size, n_exceed the number of points above u0; the
    pair sets the tail mass n_exceed / n used by stress quantiles.
    """

    u0: float
    sigma: float
    xi: float
    n: int
    n_exceed: int

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not 0 < self.n_exceed <= self.n:
            raise ValueError("need 0 < n_exceed <= n")


def mean_residual_life(series, grid_size: int = 100, grid=None):
    """Mean excess over a grid of thresholds.

    Returns (u, mean of x - u over x > u) pairs. The default grid runs from
    the sample minimum to the third largest point, so every threshold keeps
    at least two exceedances. For a GPD tail the curve is affine with slope
    xi / (1 - xi), which is what threshold pickers look for.
    """
    x = np.asarray(series, dtype=float)
    if x.size == 0:
        raise ValueError("series must be nonempty")
    if grid is None:
        if x.size < 3:
            raise ValueError("need at least 3 points for the default grid")
        top3 = np.sort(x)[-3]
        grid = np.linspace(x.min(), top3, grid_size)
    out = []
    for u in np.asarray(grid, dtype=float):
        exceed = x[x > u]
        if exceed.size == 0:
            continue
        out.append((float(u), float(np.mean(exceed - u))))
    return out


def suggest_threshold(mrl_points, min_points: int = 5, r2_min: float = 0.98):
    """Heuristic threshold pick from a mean-residual-life grid.

    Returns the first grid threshold from which the remaining curve is close
    to affine (ordinary least squares R-squared above r2_min on the tail of
    the grid). This is a labeled heuristic, not part of any fitting contract;
    callers must opt in. Returns None when no grid point qualifies.
    """
    pts = list(mrl_points)
    for start in range(0, len(pts) - min_points + 1):
        u = np.array([p[0] for p in pts[start:]])
        e = np.array([p[1] for p in pts[start:]])
        A = np.column_stack([np.ones_like(u), u])
        coef, *_ = np.linalg.lstsq(A, e, rcond=None)
        resid = e - A @ coef
        ss_tot = float(np.sum((e - e.mean()) ** 2))
        if ss_tot == 0:
            return float(u[0])
        r2 = 1.0 - float(np.sum(resid**2)) / ss_tot
        if r2 > r2_min:
            return float(u[0])
    return None


def gpd_neg_loglik(sigma: float, xi: float, z: np.ndarray) -> float:
    """Negative log-likelihood of exceedances z >= 0; penalized off-support."""
    if abs(xi) < _XI_EXP_TOL:
        return z.size * math.log(sigma) + float(np.sum(z)) / sigma
    t = 1.0 + xi * z / sigma
    if np.any(t <= 0):
        return 1e10 * (1.0 + float(np.sum(np.maximum(0.0, -t))))
    return z.size * math.log(sigma) + (1.0 + 1.0 / xi) * float(np.sum(np.log(t)))


def fit_gpd(series, threshold: float, min_exceedances: int = 30) -> GpdParams:
    """Maximum-likelihood GPD fit of the exceedances over a threshold.

    Simplex search over (log sigma, xi) from a method-of-moments start; the
    result never has lower likelihood than the start.

    Raises:
        ValueError: fewer than min_exceedances points above the threshold, or
            all exceedances equal.
        ConvergenceError: no finite likelihood found.
    """
    x = np.asarray(series, dtype=float)
    z = x[x > threshold] - threshold
    if z.size < min_exceedances:
        raise ValueError(
            f"need at least {min_exceedances} exceedances, got {z.size}"
        )
    if float(np.std(z)) == 0.0:
        raise ValueError("degenerate sample: all exceedances are equal")

    m = float(np.mean(z))
    v = float(np.var(z))
    xi0 = 0.5 * (1.0 - m * m / v)
    sigma0 = 0.5 * m * (1.0 + m * m / v)
    xi0 = min(max(xi0, -0.9), 0.9)
    if not (sigma0 > 0 and math.isfinite(sigma0)):
        sigma0 = m
    x0 = np.array([math.log(sigma0), xi0])

    def objective(theta: np.ndarray) -> float:
        log_sigma, xi = theta
        if not np.all(np.isfinite(theta)) or abs(log_sigma) > 50:
            return 1e12
        return gpd_neg_loglik(math.exp(log_sigma), xi, z)

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
        log_sigma, xi = result.x
        sigma, xi = float(math.exp(log_sigma)), float(xi)
    else:
        sigma, xi = float(sigma0), float(xi0)
    return GpdParams(
        u0=float(threshold), sigma=sigma, xi=xi, n=int(x.size), n_exceed=int(z.size)
    )


def gpd_tail_cdf(params: GpdParams, x: float) -> float:
    """Semi-parametric CDF above the threshold: 1 - tail mass * GPD survival."""
    if x < params.u0:
        raise ValueError("CDF only defined above the threshold")
    frac = params.n_exceed / params.n
    z = x - params.u0
    if abs(params.xi) < _XI_EXP_TOL:
        surv = math.exp(-z / params.sigma)
    else:
        t = 1.0 + params.xi * z / params.sigma
        surv = t ** (-1.0 / params.xi) if t > 0 else 0.0
    return 1.0 - frac * surv


def gpd_stress(params: GpdParams, return_time: float) -> StressValue:
    """Shock of a given return time from a peaks-over-threshold fit.

    Inverts the semi-parametric tail CDF at probability 1 - 1/return_time
    (return time in trading days). Return times inside the threshold's own
    recurrence (n / n_exceed days) are rejected: the quantile would sit below
    the fitted region.
    """
    ratio = params.n / (params.n_exceed * return_time)
    if ratio > 1.0:
        raise ValueError(
            f"return_time {return_time} is below the threshold recurrence "
            f"{params.n / params.n_exceed:.2f} days"
        )
    if abs(params.xi) < _XI_EXP_TOL:
        value = params.u0 + params.sigma * math.log(1.0 / ratio)
    else:
        value = params.u0 + params.sigma / params.xi * (ratio**-params.xi - 1.0)
    return StressValue(return_time, value)
