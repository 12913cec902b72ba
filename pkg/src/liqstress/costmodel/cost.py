"""Unit cost evaluation for a security under a bucket's cost model."""

from __future__ import annotations

from collections.abc import Sequence

from .impact import daily_vol, participation_kernel
from .types import (
    BucketParams,
    ParticipationBasis,
    RiskMeasure,
    SecurityLiquidityProfile,
    UnitCost,
)


class MissingFieldError(ValueError):
    """A profile lacks (or carries an unusable zero for) a required field."""


def _participation(q: float, profile: SecurityLiquidityProfile, bucket: BucketParams) -> float:
    if q < 0:
        raise ValueError(f"trade size must be >= 0, got {q}")
    if bucket.participation_basis is ParticipationBasis.VOLUME:
        denom = profile.daily_volume
        what = "daily_volume"
    else:
        if profile.outstanding is None:
            raise MissingFieldError(
                f"{profile.security_id}: outstanding-based participation needs "
                "the outstanding field"
            )
        denom = profile.outstanding
        what = "outstanding"
    if q == 0:
        return 0.0
    if denom <= 0:
        raise MissingFieldError(
            f"{profile.security_id}: {what} must be > 0 for q > 0"
        )
    x = q / denom
    # q built as a fraction of denom can round one ulp past the trading
    # limit; snap exact-capacity trades back onto it
    if bucket.x_plus < x <= bucket.x_plus * (1.0 + 1e-12):
        return bucket.x_plus
    return x


def _risk(profile: SecurityLiquidityProfile, bucket: BucketParams) -> float:
    if bucket.risk_measure is RiskMeasure.VOLATILITY:
        return daily_vol(profile.annual_vol)
    if profile.dts is None:
        raise MissingFieldError(
            f"{profile.security_id}: DTS risk measure needs the dts field"
        )
    return profile.dts


def unit_cost(
    q: float, profile: SecurityLiquidityProfile, bucket: BucketParams
) -> UnitCost:
    """Unit transaction cost (fraction of traded value) for trading q shares.

    beta_spread * s plus beta_impact * R * kernel(participation), where R is
    the daily volatility or the DTS and the kernel is the two-regime power
    law. Prohibitive when the participation exceeds the bucket's trading
    limit. The per-share fixed cost is handled at the total-cost level, never
    folded into this fraction.
    """
    x = _participation(q, profile, bucket)
    kernel = participation_kernel(
        x, bucket.gamma1, bucket.gamma2, bucket.x_tilde, bucket.x_plus
    )
    if kernel is None:
        return UnitCost.prohibitive()
    spread_part = bucket.beta_spread * profile.half_spread
    impact_part = bucket.beta_impact * _risk(profile, bucket) * kernel
    return UnitCost(spread_part + impact_part)


def unit_cost_at_participation(
    x: float, profile: SecurityLiquidityProfile, bucket: BucketParams
) -> UnitCost:
    """Unit cost at a given participation rate instead of a share count."""
    kernel = participation_kernel(
        x, bucket.gamma1, bucket.gamma2, bucket.x_tilde, bucket.x_plus
    )
    if kernel is None:
        return UnitCost.prohibitive()
    spread_part = bucket.beta_spread * profile.half_spread
    impact_part = bucket.beta_impact * _risk(profile, bucket) * kernel
    return UnitCost(spread_part + impact_part)


def historical_stress_cost(
    q: float,
    history: Sequence[SecurityLiquidityProfile],
    bucket: BucketParams,
) -> tuple[UnitCost, UnitCost]:
    """Supremum of the unit cost over a history of market snapshots.

    Returns a pair (supremum cost, worst-case cost). The worst-case cost
    combines the componentwise extremes over the history (max spread, max
    vol, min volume, and max DTS when used) and always dominates the
    supremum.

    Prohibitive on any date (or under the worst-case composition) makes the
    corresponding element prohibitive.
    """
    if len(history) == 0:
        raise ValueError("history must contain at least one snapshot")
    sup: UnitCost | None = None
    for profile in history:
        c = unit_cost(q, profile, bucket)
        if c.is_prohibitive:
            sup = c
            break
        if sup is None or c.value > sup.value:
            sup = c
    base = history[0]
    worst = SecurityLiquidityProfile(
        security_id=base.security_id,
        price=base.price,
        half_spread=max(p.half_spread for p in history),
        annual_vol=max(p.annual_vol for p in history),
        daily_volume=min(p.daily_volume for p in history),
        outstanding=base.outstanding,
        turnover=base.turnover,
        dts=(
            max(p.dts for p in history)
            if all(p.dts is not None for p in history)
            else base.dts
        ),
        fixed_cost_per_share=base.fixed_cost_per_share,
    )
    return sup, unit_cost(q, worst, bucket)
