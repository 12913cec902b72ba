"""Exact maps between the flat-then-linear and the affine toy cost curves.

Given the flat-then-linear curve (half-spread s up to an inflection point,
slope alpha afterwards, limit x_plus), there are two natural affine stand-ins
on [0, x_plus]: one that matches the endpoint value, and the least squares
projection of the curve onto affine functions of the participation. Both
directions of each map are provided; the projections invert each other in
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PiecewiseLinearCost:
    s: float
    alpha: float
    x_tilde: float
    x_plus: float

    def __post_init__(self):
        if not 0 < self.x_tilde < self.x_plus:
            raise ValueError("need 0 < x_tilde < x_plus")


@dataclass(frozen=True)
class AffineCost:
    s: float
    alpha: float
    x_plus: float

    def __post_init__(self):
        if self.x_plus <= 0:
            raise ValueError("need x_plus > 0")


def affine_match_endpoint(p: PiecewiseLinearCost) -> AffineCost:
    """Affine curve with the same spread intercept and the same value at x_plus."""
    alpha = p.alpha * (p.x_plus - p.x_tilde) / p.x_plus
    return AffineCost(p.s, alpha, p.x_plus)


def piecewise_from_endpoint(a: AffineCost, x_tilde: float) -> PiecewiseLinearCost:
    """Invert the endpoint match for a chosen inflection point."""
    alpha = a.alpha * a.x_plus / (a.x_plus - x_tilde)
    return PiecewiseLinearCost(a.s, alpha, x_tilde, a.x_plus)


def affine_ols_projection(p: PiecewiseLinearCost) -> AffineCost:
    """Least squares affine approximation of the flat-then-linear curve.

    Continuous-design OLS over [0, x_plus]; both the slope and the intercept
    shift, and the intercept can go slightly negative when the flat branch is
    long.
    """
    ratio = p.x_tilde / p.x_plus
    alpha = p.alpha * (1.0 + 2.0 * ratio**3 - 3.0 * ratio**2)
    s = p.s - p.alpha * p.x_tilde * (1.0 - ratio) ** 2
    return AffineCost(s, alpha, p.x_plus)


def piecewise_from_ols(a: AffineCost, x_tilde: float) -> PiecewiseLinearCost:
    """Closed-form inverse of the least squares projection."""
    xp = a.x_plus
    alpha = a.alpha * xp**3 / (xp**3 + 2.0 * x_tilde**3 - 3.0 * x_tilde**2 * xp)
    s = a.s + alpha * x_tilde * (1.0 - x_tilde / xp) ** 2
    return PiecewiseLinearCost(s, alpha, x_tilde, xp)
