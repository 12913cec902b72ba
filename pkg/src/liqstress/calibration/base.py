"""Shared observation and result types plus small OLS plumbing."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

COLLINEARITY_CONDITION_LIMIT = 1e8


@dataclass(frozen=True)
class TradeObservation:
    """One realized trade: unit cost, half-spread, participation and risk level.

    risk carries whichever risk measure the model uses (daily volatility or
    DTS), already as a fraction. group holds optional descriptive keys such
    as issuer, currency or cap bucket for later slicing.
    """

    cost: float
    spread: float
    participation: float
    risk: float
    security_id: str = ""
    group: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.participation < 0:
            raise ValueError("participation must be >= 0")
        if self.spread < 0:
            raise ValueError("spread must be >= 0")
        if self.risk < 0:
            raise ValueError("risk must be >= 0")


@dataclass
class FitResult:
    """Estimates with homoskedastic standard errors and fit diagnostics."""

    estimates: dict[str, float]
    stderrs: dict[str, float]
    t_stats: dict[str, float]
    p_values: dict[str, float]
    r2: float
    r2_c: float
    n_obs: int
    n_excluded: int = 0
    warnings: tuple[str, ...] = ()
    details: dict = field(default_factory=dict)


def drop_negative_costs(
    observations,
) -> tuple[list[TradeObservation], int]:
    """Remove opportunistic trades with negative realized cost, with a count."""
    kept = [o for o in observations if o.cost >= 0]
    return kept, len(observations) - len(kept)


def r2_metrics(fitted, observed) -> tuple[float, float]:
    """Uncentered and centered coefficients of determination.

    The uncentered version compares the residual sum of squares to the raw
    sum of squares of the observations, the centered one to their variance
    around the mean. A model that only explains the average level scores high
    on the first and near zero on the second. Zero denominators yield NaN.
    """
    f = np.asarray(fitted, dtype=float)
    y = np.asarray(observed, dtype=float)
    if y.size == 0:
        raise ValueError("need at least one observation")
    ssr = float(np.sum((y - f) ** 2))
    raw = float(np.sum(y**2))
    centered = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - ssr / raw if raw > 0 else float("nan")
    r2_c = 1.0 - ssr / centered if centered > 0 else float("nan")
    return r2, r2_c


def _normal_p_value(t: float) -> float:
    return math.erfc(abs(t) / math.sqrt(2.0))


@dataclass
class OlsFit:
    coef: np.ndarray
    stderr: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    fitted: np.ndarray
    condition: float


def ols(X: np.ndarray, y: np.ndarray) -> OlsFit:
    """Least squares with asymptotic homoskedastic standard errors."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n, k = X.shape
    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    fitted = X @ coef
    resid = y - fitted
    dof = max(n - k, 1)
    sigma2 = float(resid @ resid) / dof
    xtx_inv = np.linalg.pinv(X.T @ X)
    stderr = np.sqrt(np.maximum(sigma2 * np.diag(xtx_inv), 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = np.where(stderr > 0, coef / stderr, np.inf * np.sign(coef))
    p_values = np.array([_normal_p_value(t) for t in t_stats])
    condition = float(np.linalg.cond(X))
    return OlsFit(coef, stderr, t_stats, p_values, fitted, condition)
