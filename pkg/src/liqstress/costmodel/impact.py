"""Price-impact curves: single power law, two-regime, and square-root-linear."""

from __future__ import annotations

import math

from .. import constants
from .types import TwoRegimeImpactParams, UnitCost


def daily_vol(annual_vol: float) -> float:
    """Convert an annualized volatility to a daily one.

    Args:
        annual_vol: volatility as a fraction per year, >= 0.

    Returns:
        annual_vol divided by the square root of the trading-day count.
    """
    if annual_vol < 0:
        raise ValueError(f"annual_vol must be >= 0, got {annual_vol}")
    return annual_vol / constants.sqrt_trading_days()


def phi_for_linear_exponent(x_tilde: float, phi_sqrt: float = 1.0) -> float:
    """Scale factor that makes the linear impact meet the square-root one at x_tilde.

    With phi_sqrt the square-root-law scale, the matching linear scale is
    phi_sqrt / sqrt(x_tilde). The remaining standard scales are phi = 1 for the
    square-root law and phi = 0 for the pure bid-ask model; any other exponent
    needs an explicitly chosen phi.
    """
    if x_tilde <= 0:
        raise ValueError("x_tilde must be > 0")
    return phi_sqrt / math.sqrt(x_tilde)


def power_impact(x: float, gamma: float, phi: float, sigma_daily: float) -> float:
    """Power-law price impact phi * sigma_daily * x ** gamma.

    gamma = 0 with phi = 0 degenerates to the pure bid-ask model (zero impact).
    """
    if x < 0:
        raise ValueError(f"participation must be >= 0, got {x}")
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    if x == 0.0 and gamma == 0.0:
        # x**0 is 1 even at x=0; zero size must cost nothing.
        return 0.0
    return phi * sigma_daily * x**gamma


def two_regime_impact(
    x: float, p: TwoRegimeImpactParams, sigma_daily: float
) -> UnitCost:
    """Two-power-regime impact, continuous at the inflection point.

    Returns phi1*sigma*x**gamma1 below x_tilde, phi2*sigma*x**gamma2 between
    x_tilde and x_plus, and the prohibitive sentinel beyond x_plus.
    """
    if x < 0:
        raise ValueError(f"participation must be >= 0, got {x}")
    if x > p.x_plus:
        return UnitCost.prohibitive()
    if x <= p.x_tilde:
        return UnitCost(p.phi1 * sigma_daily * x**p.gamma1)
    return UnitCost(p.phi2 * sigma_daily * x**p.gamma2)


def sqrl_impact(
    x: float,
    phi1: float,
    x_tilde: float,
    x_plus: float | None,
    sigma_daily: float,
) -> UnitCost:
    """Square-root-linear impact.

    Square-root law phi1*sigma*sqrt(x) below x_tilde, then the tangent-matched
    linear law phi1*sigma*x/sqrt(x_tilde) up to the trading limit, prohibitive
    beyond. ``x_plus=None`` disables the limit (handy for plotting the raw
    curve).
    """
    limit = math.inf if x_plus is None else x_plus
    p = TwoRegimeImpactParams(
        phi1=phi1, gamma1=0.5, gamma2=1.0, x_tilde=x_tilde, x_plus=limit
    )
    return two_regime_impact(x, p, sigma_daily)


def participation_kernel(
    x: float, gamma1: float, gamma2: float, x_tilde: float, x_plus: float
) -> float | None:
    """Dimensionless two-regime kernel used inside the econometric cost form.

    x**gamma1 below x_tilde, continuity-glued x_tilde**(gamma1-gamma2) * x**gamma2
    on [x_tilde, x_plus]. Returns None beyond the trading limit.
    """
    if x < 0:
        raise ValueError(f"participation must be >= 0, got {x}")
    if x > x_plus:
        return None
    if x <= x_tilde:
        return x**gamma1
    return x_tilde ** (gamma1 - gamma2) * x**gamma2
