"""Package-wide numeric conventions."""

import math

# Trading days per year used for annualization throughout the package.
# Tests may monkeypatch this module attribute; production code must read it
# at call time rather than baking the square root into an import-time constant.
TRADING_DAYS_PER_YEAR = 260


def sqrt_trading_days() -> float:
    """Square root of the trading-day count, read at call time."""
    return math.sqrt(TRADING_DAYS_PER_YEAR)
