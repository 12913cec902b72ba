"""Cost-model fitting from trade observations."""

from .base import (
    FitResult,
    TradeObservation,
    drop_negative_costs,
    ols,
    r2_metrics,
)
from .bond import grid_search_gamma, two_stage_bond_fit
from .equity import nls_fit_equity, nls_residual_gradient
from .persec import PerSecurityOlsResult, per_security_ols
from .synthetic import synthetic_trades
from .toy import (
    AffineCost,
    PiecewiseLinearCost,
    affine_match_endpoint,
    affine_ols_projection,
    piecewise_from_endpoint,
    piecewise_from_ols,
)

__all__ = [
    "AffineCost",
    "FitResult",
    "PerSecurityOlsResult",
    "PiecewiseLinearCost",
    "TradeObservation",
    "affine_match_endpoint",
    "affine_ols_projection",
    "drop_negative_costs",
    "grid_search_gamma",
    "nls_fit_equity",
    "nls_residual_gradient",
    "ols",
    "per_security_ols",
    "piecewise_from_endpoint",
    "piecewise_from_ols",
    "r2_metrics",
    "synthetic_trades",
    "two_stage_bond_fit",
]
