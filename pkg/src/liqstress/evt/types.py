"""Shared value types for the stress-calibration module."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


@dataclass(frozen=True)
class StressValue:
    """A calibrated shock at a given return time (in trading days)."""

    return_time: float
    value: float


class FactorKind(Enum):
    MULT = "mult"
    ADD = "add"


@dataclass(frozen=True)
class FactorSample:
    """Sample of h-day shock factors for one liquidity parameter.

    values holds multiplicative ratios or additive differences depending on
    kind; horizon is the day count h the factors span.
    """

    values: np.ndarray
    horizon: int
    kind: FactorKind

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if self.kind is FactorKind.MULT and np.any(self.values <= 0):
            raise ValueError("multiplicative factors must be > 0")


class AggregationMode(Enum):
    POOLING = "pooling"
    AVERAGING = "averaging"


class ConvergenceError(RuntimeError):
    """A numerical fit failed to produce a usable optimum."""
