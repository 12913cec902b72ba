"""Portfolio distortion: weights, tracking error, optimal liquidation frontier."""

from .optimize import FrontierPoint, frontier, optimal_liquidation
from .risk import active_risk_bond, tracking_error
from .weights import (
    assemble_covariance,
    current_weights,
    portfolio_value,
    shares_from_weights,
    validate_covariance,
    weight_bounds,
    weights_after,
)

__all__ = [
    "FrontierPoint",
    "active_risk_bond",
    "assemble_covariance",
    "current_weights",
    "frontier",
    "optimal_liquidation",
    "portfolio_value",
    "shares_from_weights",
    "tracking_error",
    "validate_covariance",
    "weight_bounds",
    "weights_after",
]
