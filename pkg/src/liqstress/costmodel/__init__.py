"""Transaction cost models: impact curves, unit costs, buckets, stress shocks."""

from .buckets import (
    DEFAULT_X_PLUS_OUTSTANDING,
    DEFAULT_X_PLUS_VOLUME,
    BucketKind,
    benchmark_bucket,
)
from .convert import (
    dts_volatility,
    implied_beta,
    implied_turnover,
    x_from_y,
    y_from_x,
)
from .cost import (
    MissingFieldError,
    historical_stress_cost,
    unit_cost,
    unit_cost_at_participation,
)
from .impact import (
    daily_vol,
    participation_kernel,
    phi_for_linear_exponent,
    power_impact,
    sqrl_impact,
    two_regime_impact,
)
from .stress import apply_stress
from .toy import toy_cost_double_prime, toy_cost_prime
from .types import (
    BucketParams,
    ParticipationBasis,
    ProhibitiveTradeError,
    RiskMeasure,
    SecurityLiquidityProfile,
    Shock,
    ShockKind,
    StressScenario,
    TwoRegimeImpactParams,
    UnitCost,
)

__all__ = [
    "BucketKind",
    "BucketParams",
    "DEFAULT_X_PLUS_OUTSTANDING",
    "DEFAULT_X_PLUS_VOLUME",
    "MissingFieldError",
    "ParticipationBasis",
    "ProhibitiveTradeError",
    "RiskMeasure",
    "SecurityLiquidityProfile",
    "Shock",
    "ShockKind",
    "StressScenario",
    "TwoRegimeImpactParams",
    "UnitCost",
    "apply_stress",
    "benchmark_bucket",
    "daily_vol",
    "dts_volatility",
    "historical_stress_cost",
    "implied_beta",
    "implied_turnover",
    "participation_kernel",
    "phi_for_linear_exponent",
    "power_impact",
    "sqrl_impact",
    "toy_cost_double_prime",
    "toy_cost_prime",
    "two_regime_impact",
    "unit_cost",
    "unit_cost_at_participation",
    "x_from_y",
    "y_from_x",
]
