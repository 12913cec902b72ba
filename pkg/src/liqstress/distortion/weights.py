"""Post-trade weights, their share-space inverse, and feasibility bounds."""

from __future__ import annotations

import numpy as np


def _as_arrays(*xs):
    return tuple(np.asarray(x, dtype=float) for x in xs)


def portfolio_value(holdings, prices) -> float:
    holdings, prices = _as_arrays(holdings, prices)
    return float(holdings @ prices)


def current_weights(holdings, prices) -> np.ndarray:
    holdings, prices = _as_arrays(holdings, prices)
    value = float(holdings @ prices)
    if value <= 0:
        raise ValueError("portfolio value must be > 0")
    return holdings * prices / value


def weights_after(holdings, quantities, prices) -> np.ndarray:
    """Weights of what remains after selling the given quantities.

    Pro-rata quantities leave the weights unchanged; selling everything has
    no weights and raises.
    """
    holdings, q, prices = _as_arrays(holdings, quantities, prices)
    residual = (holdings - q) * prices
    value = float(residual.sum())
    if value <= 0:
        raise ValueError("full liquidation leaves no portfolio to weight")
    return residual / value


def shares_from_weights(
    target_weights, holdings, redemption_value: float, prices
) -> np.ndarray:
    """Quantities to sell so the remainder lands on the target weights.

    Exact inverse of weights_after before integer rounding; the implied
    quantities automatically sum to the redemption value in dollars whenever
    the target weights sum to one.
    """
    w_target, holdings, prices = _as_arrays(target_weights, holdings, prices)
    value = float(holdings @ prices)
    w_now = holdings * prices / value
    q = (value * (w_now - w_target) + redemption_value * w_target) / prices
    return q


def weight_bounds(
    holdings, redemption_value: float, prices, epsilon: float = 0.5
):
    """Reachable post-trade weight interval per security.

    Derived from the share-space box (sell nothing up to the full position,
    softened by epsilon shares on both sides): the lower bound is the small
    negative slack -eps_i, the upper bound is the weight of keeping the whole
    position, plus slack, capped at 1.
    """
    holdings, prices = _as_arrays(holdings, prices)
    value = float(holdings @ prices)
    if redemption_value >= value:
        raise ValueError("redemption must be smaller than the portfolio value")
    remaining = value - redemption_value
    eps = epsilon * prices / remaining
    w_now = holdings * prices / value
    lower = -eps
    upper = np.minimum(value * w_now / remaining + eps, 1.0)
    return lower, upper


def validate_covariance(cov, tol: float = 1e-10) -> np.ndarray:
    """Check symmetry and positive semi-definiteness (tiny negative eigenvalues pass)."""
    cov = np.asarray(cov, dtype=float)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
        raise ValueError("covariance must be a square matrix")
    if not np.allclose(cov, cov.T, atol=1e-12, rtol=1e-9):
        raise ValueError("covariance must be symmetric")
    eigvals = np.linalg.eigvalsh(cov)
    if eigvals.min() < -tol:
        raise ValueError(
            f"covariance has negative eigenvalue {eigvals.min():.3g}"
        )
    return cov


def assemble_covariance(vols, corr) -> np.ndarray:
    """Covariance from a volatility vector and a correlation matrix."""
    vols = np.asarray(vols, dtype=float)
    corr = np.asarray(corr, dtype=float)
    cov = np.outer(vols, vols) * corr
    return validate_covariance(cov)
