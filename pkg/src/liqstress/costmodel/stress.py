"""Apply stress scenarios to security profiles."""

from __future__ import annotations

from .types import SecurityLiquidityProfile, StressScenario


def apply_stress(
    profile: SecurityLiquidityProfile, scenario: StressScenario
) -> SecurityLiquidityProfile:
    """Replace spread, volatility and volume by their stressed values.

    Working on the share-count scale, a stressed volume automatically shifts
    the inflection share count and the per-day trading capacity, since both
    are participation thresholds times the (now smaller) volume. Negative
    stressed spreads or volatilities are rejected by profile validation.
    """
    return profile.with_market(
        half_spread=scenario.spread.apply(profile.half_spread),
        annual_vol=scenario.vol.apply(profile.annual_vol),
        daily_volume=scenario.volume.apply(profile.daily_volume),
    )
