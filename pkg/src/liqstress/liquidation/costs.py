"""Dollar transaction costs of liquidation schedules."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from ..costmodel import (
    BucketParams,
    ParticipationBasis,
    ProhibitiveTradeError,
    SecurityLiquidityProfile,
    UnitCost,
    unit_cost,
)
from .schedule import LiquidationSchedule


@dataclass(frozen=True)
class CostBreakdown:
    """Total liquidation cost split into spread, impact and fixed parts.

    All currency amounts. cells_* matrices give the per-security, per-day
    split (rows follow security_ids). relative is total / redemption value;
    spread_ratio is total / spread_part (how many spreads the trade cost).
    """

    security_ids: tuple[str, ...]
    total: float
    spread_part: float
    impact_part: float
    fixed_part: float
    redemption_value: float
    relative: float
    spread_ratio: float
    cells_total: np.ndarray
    cells_spread: np.ndarray
    cells_impact: np.ndarray
    cells_fixed: np.ndarray


def _bucket_for(
    sid: str, buckets: BucketParams | Mapping[str, BucketParams]
) -> BucketParams:
    if isinstance(buckets, BucketParams):
        return buckets
    return buckets[sid]


def total_cost(
    schedule: LiquidationSchedule,
    profiles: Mapping[str, SecurityLiquidityProfile],
    buckets: BucketParams | Mapping[str, BucketParams],
) -> CostBreakdown:
    """Price the schedule day by day with the bucket cost model.

    Each day's sale is charged its own unit cost at that day's participation,
    so later (smaller) sales of a split order are cheaper. The spread part is
    the full quantity at beta_spread * half_spread, the fixed part is the
    per-share fee, and the impact part is the remainder.

    Raises:
        ProhibitiveTradeError: if any daily sale exceeds its trading limit
            (cannot happen for schedules built against the same limits).
    """
    ids = schedule.security_ids
    n, horizon = schedule.sold.shape
    cells_total = np.zeros((n, horizon))
    cells_spread = np.zeros((n, horizon))
    cells_fixed = np.zeros((n, horizon))
    for i, sid in enumerate(ids):
        profile = profiles[sid]
        bucket = _bucket_for(sid, buckets)
        for h in range(horizon):
            q = int(schedule.sold[i, h])
            if q == 0:
                continue
            c = unit_cost(q, profile, bucket)
            if c.is_prohibitive:
                raise ProhibitiveTradeError(
                    f"{sid}: day {h + 1} sale of {q} shares exceeds the trading limit"
                )
            amount = q * profile.price
            cells_total[i, h] = amount * c.value + q * profile.fixed_cost_per_share
            cells_spread[i, h] = amount * bucket.beta_spread * profile.half_spread
            cells_fixed[i, h] = q * profile.fixed_cost_per_share
    cells_impact = cells_total - cells_spread - cells_fixed

    total = math.fsum(cells_total.ravel())
    spread_part = math.fsum(cells_spread.ravel())
    fixed_part = math.fsum(cells_fixed.ravel())
    impact_part = total - spread_part - fixed_part
    redemption_value = math.fsum(
        int(schedule.totals[i]) * profiles[sid].price for i, sid in enumerate(ids)
    )
    relative = total / redemption_value if redemption_value > 0 else 0.0
    spread_ratio = total / spread_part if spread_part > 0 else float("nan")
    return CostBreakdown(
        security_ids=ids,
        total=total,
        spread_part=spread_part,
        impact_part=impact_part,
        fixed_part=fixed_part,
        redemption_value=redemption_value,
        relative=relative,
        spread_ratio=spread_ratio,
        cells_total=cells_total,
        cells_spread=cells_spread,
        cells_impact=cells_impact,
        cells_fixed=cells_fixed,
    )


@dataclass(frozen=True)
class MultiDayCost:
    """Value-weighted average unit cost of an order split over days."""

    quantities: tuple[float, ...]
    unit_costs: tuple[float, ...]
    average: UnitCost
    days: int


def multi_day_unit_cost(
    q: float,
    profile: SecurityLiquidityProfile,
    bucket: BucketParams,
    max_days: int = 100_000,
) -> MultiDayCost:
    """Average unit cost of selling q shares at full speed under the limit.

    Sells the daily capacity (trading limit times the participation
    denominator) each day until done, prices each slice at its own unit cost
    and averages by traded value. Falls back to the plain unit cost when the
    order fits in one day. Quantities here may be fractional: this is the
    participation-level view, not the integer share schedule.
    """
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q <= 1e-9:
        # sub-nanoshare orders are float noise from box-constrained callers
        c = unit_cost(0, profile, bucket)
        return MultiDayCost((0.0,), (c.value,), c, 1)
    if bucket.participation_basis is ParticipationBasis.VOLUME:
        denom = profile.daily_volume
    else:
        if profile.outstanding is None:
            raise ValueError(f"{profile.security_id}: outstanding required")
        denom = profile.outstanding
    if denom <= 0:
        raise ValueError(f"{profile.security_id}: participation denominator must be > 0")
    capacity = bucket.x_plus * denom
    quantities: list[float] = []
    remaining = float(q)
    tol = 1e-9 * max(q, 1.0)
    while remaining > tol:
        if len(quantities) >= max_days:
            raise ValueError("order does not complete within max_days")
        sale = min(remaining, capacity)
        quantities.append(sale)
        remaining -= sale
    costs = []
    for sale in quantities:
        c = unit_cost(sale, profile, bucket)
        costs.append(c.value)
    avg = math.fsum(s * c for s, c in zip(quantities, costs)) / math.fsum(quantities)
    return MultiDayCost(tuple(quantities), tuple(costs), UnitCost(avg), len(quantities))


def implementation_shortfall(
    mid_value: float, fills: Sequence[tuple[float, float]]
) -> float:
    """Slippage versus the mark: max(mid value - sum of fill proceeds, 0).

    fills are (shares, realized price) pairs; the result is floored at zero
    so rising prices never report a negative shortfall.
    """
    for shares, price in fills:
        if shares < 0 or price < 0:
            raise ValueError("fills must be nonnegative")
    proceeds = math.fsum(shares * price for shares, price in fills)
    return max(mid_value - proceeds, 0.0)
