"""Piecewise-flat and affine toy unit-cost curves.

Two reduced forms of the unit cost in the participation rate x. The first is
flat at the half-spread up to an inflection point, then rises linearly until
the trading limit. The second drops the inflection point and is affine from
zero. Both are prohibitive past the limit.
"""

from __future__ import annotations

from .types import UnitCost


def toy_cost_prime(
    x: float, s: float, alpha: float, x_tilde: float, x_plus: float
) -> UnitCost:
    """Flat-then-linear unit cost.

    s for x <= x_tilde, s + alpha*(x - x_tilde) up to x_plus, prohibitive
    beyond.
    """
    if x_tilde > x_plus:
        raise ValueError(
            f"need x_tilde <= x_plus, got x_tilde={x_tilde}, x_plus={x_plus}"
        )
    if x < 0:
        raise ValueError(f"participation must be >= 0, got {x}")
    if x > x_plus:
        return UnitCost.prohibitive()
    if x <= x_tilde:
        return UnitCost(s)
    return UnitCost(s + alpha * (x - x_tilde))


def toy_cost_double_prime(x: float, s: float, alpha: float, x_plus: float) -> UnitCost:
    """Affine unit cost s + alpha*x up to x_plus, prohibitive beyond."""
    if x < 0:
        raise ValueError(f"participation must be >= 0, got {x}")
    if x > x_plus:
        return UnitCost.prohibitive()
    return UnitCost(s + alpha * x)
