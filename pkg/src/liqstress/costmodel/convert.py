"""Conversions between participation bases and risk measures."""

from __future__ import annotations


def y_from_x(x: float, turnover: float) -> float:
    """Outstanding-based participation from the volume-based one: y = x * turnover."""
    if turnover <= 0:
        raise ValueError(f"turnover must be > 0, got {turnover}")
    return x * turnover


def x_from_y(y: float, turnover: float) -> float:
    """Volume-based participation from the outstanding-based one: x = y / turnover."""
    if turnover <= 0:
        raise ValueError(f"turnover must be > 0, got {turnover}")
    return y / turnover


def implied_beta(turnover: float, beta_tilde: float, gamma1: float) -> float:
    """Volume-based impact coefficient implied by an outstanding-based one.

    beta = turnover**gamma1 * beta_tilde.
    """
    if turnover <= 0 or beta_tilde <= 0 or gamma1 <= 0:
        raise ValueError("turnover, beta_tilde and gamma1 must be > 0")
    return turnover**gamma1 * beta_tilde


def implied_turnover(beta: float, beta_tilde: float, gamma1: float) -> float:
    """Daily turnover implied by a pair of impact coefficients.

    Inverse of implied_beta: turnover = (beta / beta_tilde) ** (1 / gamma1).
    """
    if beta <= 0 or beta_tilde <= 0 or gamma1 <= 0:
        raise ValueError("beta, beta_tilde and gamma1 must be > 0")
    return (beta / beta_tilde) ** (1.0 / gamma1)


def dts_volatility(spread_vol: float, duration: float, credit_spread: float) -> float:
    """Daily bond-return volatility proxy: spread vol times duration times spread."""
    if spread_vol < 0 or duration < 0 or credit_spread < 0:
        raise ValueError("inputs must be >= 0")
    return spread_vol * duration * credit_spread
