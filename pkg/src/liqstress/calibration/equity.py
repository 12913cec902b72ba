"""Nonlinear least squares for the equity cost model."""

from __future__ import annotations

import numpy as np
from scipy.optimize import least_squares

from .base import (
    COLLINEARITY_CONDITION_LIMIT,
    FitResult,
    _normal_p_value,
    drop_negative_costs,
    ols,
    r2_metrics,
)


def _arrays(observations):
    c = np.array([o.cost for o in observations])
    s = np.array([o.spread for o in observations])
    x = np.array([o.participation for o in observations])
    r = np.array([o.risk for o in observations])
    return c, s, x, r


def nls_fit_equity(observations, constrain_gamma: float | None = None) -> FitResult:
    """Fit cost = beta_spread * s + beta_impact * risk * x ** gamma1.

    Minimizes the sum of squared residuals with an analytic Jacobian,
    starting from the linear fit at gamma fixed (the constraint value, or 1/2
    when free). The returned solution never has a larger residual norm than
    that start. With constrain_gamma the exponent is held fixed and only the
    two betas are estimated.

    Raises:
        ValueError: fewer than 10 observations or nonpositive participations.
    """
    observations, n_excluded = drop_negative_costs(observations)
    if len(observations) < 10:
        raise ValueError("need at least 10 observations")
    c, s, x, r = _arrays(observations)
    if np.any(x <= 0):
        raise ValueError("participations must be > 0 for the power law")
    if not (np.any(s != 0) or np.any(r != 0)):
        raise ValueError("all regressors are zero")

    gamma0 = 0.5 if constrain_gamma is None else constrain_gamma
    start = ols(np.column_stack([s, r * x**gamma0]), c)
    beta0 = start.coef
    log_x = np.log(x)

    if constrain_gamma is not None:
        # Linear problem: reuse the OLS solution directly.
        fitted = start.fitted
        r2, r2_c = r2_metrics(fitted, c)
        names = ["beta_spread", "beta_impact", "gamma1"]
        est = [float(beta0[0]), float(beta0[1]), float(constrain_gamma)]
        se = [float(start.stderr[0]), float(start.stderr[1]), 0.0]
        ts = [float(start.t_stats[0]), float(start.t_stats[1]), float("inf")]
        ps = [float(start.p_values[0]), float(start.p_values[1]), 0.0]
        warnings = ()
        if start.condition > COLLINEARITY_CONDITION_LIMIT:
            warnings = (f"ill-conditioned design (cond={start.condition:.3g})",)
        return FitResult(
            estimates=dict(zip(names, est)),
            stderrs=dict(zip(names, se)),
            t_stats=dict(zip(names, ts)),
            p_values=dict(zip(names, ps)),
            r2=r2,
            r2_c=r2_c,
            n_obs=len(observations),
            n_excluded=n_excluded,
            warnings=warnings,
        )

    def residual(theta):
        beta_s, beta_pi, gamma = theta
        return c - beta_s * s - beta_pi * r * x**gamma

    def jacobian(theta):
        beta_s, beta_pi, gamma = theta
        xg = x**gamma
        return np.column_stack([-s, -r * xg, -beta_pi * r * xg * log_x])

    x0 = np.array([beta0[0], beta0[1], gamma0])
    sol = least_squares(
        residual, x0, jac=jacobian, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15
    )
    theta = sol.x
    if np.sum(residual(theta) ** 2) > np.sum(residual(x0) ** 2):
        theta = x0

    res = residual(theta)
    J = jacobian(theta)
    n, p = J.shape
    sigma2 = float(res @ res) / max(n - p, 1)
    cov = sigma2 * np.linalg.pinv(J.T @ J)
    se = np.sqrt(np.maximum(np.diag(cov), 0.0))
    fitted = c - res
    r2, r2_c = r2_metrics(fitted, c)
    names = ["beta_spread", "beta_impact", "gamma1"]
    with np.errstate(divide="ignore", invalid="ignore"):
        ts = np.where(se > 0, theta / se, np.inf)
    return FitResult(
        estimates={k: float(v) for k, v in zip(names, theta)},
        stderrs={k: float(v) for k, v in zip(names, se)},
        t_stats={k: float(v) for k, v in zip(names, ts)},
        p_values={k: _normal_p_value(float(t)) for k, t in zip(names, ts)},
        r2=r2,
        r2_c=r2_c,
        n_obs=n,
        n_excluded=n_excluded,
    )


def nls_residual_gradient(theta, observations) -> np.ndarray:
    """Gradient of the half sum-of-squares objective; exposed for testing."""
    c, s, x, r = _arrays(observations)
    beta_s, beta_pi, gamma = theta
    xg = x**gamma
    res = c - beta_s * s - beta_pi * r * xg
    J = np.column_stack([-s, -r * xg, -beta_pi * r * xg * np.log(x)])
    return J.T @ res
