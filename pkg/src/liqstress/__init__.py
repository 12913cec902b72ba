"""Liquidity cost modelling, liquidation schedules and stress tools."""

__version__ = "0.1.0"

from .costmodel import (
    BucketKind,
    BucketParams,
    ProhibitiveTradeError,
    RiskMeasure,
    SecurityLiquidityProfile,
    StressScenario,
    UnitCost,
    benchmark_bucket,
    unit_cost,
    unit_cost_at_participation,
)
from .liquidation import (
    Holding,
    LiquidationSchedule,
    Portfolio,
    RedemptionScenario,
    build_schedule,
    liquidation_ratio,
    multi_day_unit_cost,
    pro_rata,
    total_cost,
)

__all__ = [
    "__version__",
    "BucketKind",
    "BucketParams",
    "ProhibitiveTradeError",
    "RiskMeasure",
    "SecurityLiquidityProfile",
    "StressScenario",
    "UnitCost",
    "benchmark_bucket",
    "unit_cost",
    "unit_cost_at_participation",
    "Holding",
    "LiquidationSchedule",
    "Portfolio",
    "RedemptionScenario",
    "build_schedule",
    "liquidation_ratio",
    "multi_day_unit_cost",
    "pro_rata",
    "total_cost",
]
