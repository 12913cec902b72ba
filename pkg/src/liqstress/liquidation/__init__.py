"""Multi-day liquidation schedules and liquidity measures."""

from .costs import (
    CostBreakdown,
    MultiDayCost,
    implementation_shortfall,
    multi_day_unit_cost,
    total_cost,
)
from .measures import (
    LiquidationContributions,
    break_even_redemption,
    liquidation_contributions,
    liquidation_ratio,
    liquidation_ratio_series,
    liquidation_shortfall,
    time_to_liquidation,
)
from .schedule import (
    Holding,
    LiquidationSchedule,
    Portfolio,
    RedemptionScenario,
    build_schedule,
    pro_rata,
    share_limits_from_participation,
)

__all__ = [
    "CostBreakdown",
    "Holding",
    "LiquidationContributions",
    "LiquidationSchedule",
    "MultiDayCost",
    "Portfolio",
    "RedemptionScenario",
    "break_even_redemption",
    "build_schedule",
    "implementation_shortfall",
    "liquidation_contributions",
    "liquidation_ratio",
    "liquidation_ratio_series",
    "liquidation_shortfall",
    "multi_day_unit_cost",
    "pro_rata",
    "share_limits_from_participation",
    "time_to_liquidation",
    "total_cost",
]
