"""Volume-based liquidity measures of a liquidation schedule."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .schedule import LiquidationSchedule, Portfolio, pro_rata


def _values(schedule: LiquidationSchedule, prices: Mapping[str, float]) -> np.ndarray:
    p = np.asarray([prices[sid] for sid in schedule.security_ids], dtype=float)
    return schedule.sold * p[:, None]


def liquidation_ratio(
    schedule: LiquidationSchedule, prices: Mapping[str, float], h: int
) -> float:
    """Value fraction of the redemption executed within the first h days."""
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    values = _values(schedule, prices)
    total = values.sum()
    if total <= 0:
        raise ValueError("liquidation ratio undefined for an empty redemption")
    done = values[:, : min(h, schedule.horizon)].sum()
    return float(done / total)


def liquidation_ratio_series(
    schedule: LiquidationSchedule, prices: Mapping[str, float]
) -> list[float]:
    """LR for h = 1..horizon as a list."""
    return [
        liquidation_ratio(schedule, prices, h)
        for h in range(1, schedule.horizon + 1)
    ]


@dataclass(frozen=True)
class LiquidationContributions:
    """Value-based decomposition of the liquidation by asset and day.

    by_asset_day[i, k]: fraction of the redemption value traded in asset i on
    day k+1. by_day: its column sums. weights: its row sums (asset weights in
    the redemption). asset_ratio[i, h]: fraction of asset i's own quantity
    sold within h+1 days. by_asset_cum[i, h] = weights[i] * asset_ratio[i, h],
    the asset's cumulative contribution to the overall ratio.
    """

    security_ids: tuple[str, ...]
    by_asset_day: np.ndarray
    by_day: np.ndarray
    weights: np.ndarray
    asset_ratio: np.ndarray
    by_asset_cum: np.ndarray


def liquidation_contributions(
    schedule: LiquidationSchedule, prices: Mapping[str, float]
) -> LiquidationContributions:
    values = _values(schedule, prices)
    total = values.sum()
    if total <= 0:
        raise ValueError("contributions undefined for an empty redemption")
    by_asset_day = values / total
    by_day = by_asset_day.sum(axis=0)
    weights = by_asset_day.sum(axis=1)
    qty = schedule.totals.astype(float)
    cum_shares = np.cumsum(schedule.sold, axis=1).astype(float)
    with np.errstate(invalid="ignore", divide="ignore"):
        asset_ratio = np.where(qty[:, None] > 0, cum_shares / qty[:, None], 1.0)
    by_asset_cum = weights[:, None] * asset_ratio
    return LiquidationContributions(
        schedule.security_ids, by_asset_day, by_day, weights, asset_ratio, by_asset_cum
    )


def time_to_liquidation(
    schedule: LiquidationSchedule, prices: Mapping[str, float], p: float
) -> int:
    """Smallest day count whose liquidation ratio reaches p; never less than 1.

    A nonzero sale takes at least one trading day, so the floor is 1 even for
    p below the first-day ratio.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    for h in range(1, schedule.horizon + 1):
        if liquidation_ratio(schedule, prices, h) >= p - 1e-12:
            return h
    return schedule.horizon


def liquidation_shortfall(
    schedule: LiquidationSchedule, prices: Mapping[str, float]
) -> float:
    """Value fraction of the redemption left unsold after one day: 1 - LR(1)."""
    return 1.0 - liquidation_ratio(schedule, prices, 1)


def break_even_redemption(
    portfolio: Portfolio,
    limits: Mapping[str, int] | Sequence[int],
    prices: Mapping[str, float],
    iterations: int = 100,
) -> float:
    """Largest pro-rata redemption amount with zero one-day shortfall.

    Scans the pro-rata family by bisection on the redemption rate: feasible
    means every rounded quantity fits in its daily limit. Returns the dollar
    value of the largest feasible scenario.
    """
    ids = portfolio.security_ids
    if isinstance(limits, Mapping):
        lim = [int(limits[sid]) for sid in ids]
    else:
        lim = [int(v) for v in limits]
    holdings = [h.shares for h in portfolio.holdings]

    def feasible(rate: float) -> bool:
        return all(
            round(rate * w) <= l for w, l in zip(holdings, lim)
        )

    if feasible(1.0):
        return portfolio.total_value(prices)
    lo, hi = 0.0, 1.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    best = pro_rata(portfolio, lo)
    return math.fsum(q * prices[sid] for sid, q in best.quantities)
