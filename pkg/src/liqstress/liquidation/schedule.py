"""Portfolios, redemption scenarios, and multi-day liquidation schedules."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Holding:
    security_id: str
    shares: int

    def __post_init__(self):
        if self.shares < 0:
            raise ValueError(f"{self.security_id}: holdings must be >= 0 shares")


@dataclass(frozen=True)
class Portfolio:
    """Long-only share holdings; valuation needs a price per security."""

    holdings: tuple[Holding, ...]

    @classmethod
    def of(cls, pairs: Sequence[tuple[str, int]]) -> "Portfolio":
        return cls(tuple(Holding(sid, int(n)) for sid, n in pairs))

    @property
    def security_ids(self) -> tuple[str, ...]:
        return tuple(h.security_id for h in self.holdings)

    def shares(self, security_id: str) -> int:
        for h in self.holdings:
            if h.security_id == security_id:
                return h.shares
        raise KeyError(security_id)

    def total_value(self, prices: Mapping[str, float]) -> float:
        return math.fsum(h.shares * prices[h.security_id] for h in self.holdings)


@dataclass(frozen=True)
class RedemptionScenario:
    """Integer share quantities to sell per security."""

    quantities: tuple[tuple[str, int], ...]
    target_value: float | None = None

    def __post_init__(self):
        for sid, q in self.quantities:
            if q < 0:
                raise ValueError(f"{sid}: redemption quantity must be >= 0")

    @property
    def security_ids(self) -> tuple[str, ...]:
        return tuple(sid for sid, _ in self.quantities)

    @property
    def shares(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.quantities)

    def value(self, prices: Mapping[str, float]) -> float:
        """Achieved dollar redemption at the given prices."""
        return math.fsum(q * prices[sid] for sid, q in self.quantities)


def pro_rata(
    portfolio: Portfolio,
    redemption_rate: float,
    prices: Mapping[str, float] | None = None,
) -> RedemptionScenario:
    """Vertical slice of the portfolio: q_i = round(rate * holdings_i).

    Rounding is half-to-even, so the achieved dollar redemption can differ
    slightly from rate * TNA; pass prices to record the target value on the
    scenario and compare it with ``scenario.value(prices)``.
    """
    if not 0 <= redemption_rate <= 1:
        raise ValueError(f"redemption_rate must be in [0, 1], got {redemption_rate}")
    quantities = tuple(
        (h.security_id, int(round(redemption_rate * h.shares)))
        for h in portfolio.holdings
    )
    target = None
    if prices is not None:
        target = redemption_rate * portfolio.total_value(prices)
    return RedemptionScenario(quantities, target_value=target)


@dataclass(frozen=True)
class LiquidationSchedule:
    """Shares sold per security per day under daily trading limits.

    sold[i, h] is the share count of security i sold on day h+1. Rows sum to
    the scenario quantities; each entry respects the security's daily limit;
    sales are front-loaded (a zero day is never followed by a positive one).
    """

    security_ids: tuple[str, ...]
    sold: np.ndarray  # int64, shape (n_securities, horizon)
    limits: tuple[int, ...]
    _frozen: bool = field(default=True, repr=False)

    @property
    def horizon(self) -> int:
        return self.sold.shape[1]

    @property
    def totals(self) -> np.ndarray:
        """Total shares sold per security (the scenario quantities)."""
        return self.sold.sum(axis=1)

    def row(self, security_id: str) -> np.ndarray:
        return self.sold[self.security_ids.index(security_id)]


def share_limits_from_participation(
    x_plus: float, volumes: Mapping[str, float], security_ids: Sequence[str]
) -> dict[str, int]:
    """Daily share limits q_plus = floor(x_plus * daily volume) per security."""
    if x_plus <= 0:
        raise ValueError(f"x_plus must be > 0, got {x_plus}")
    return {
        sid: int(math.floor(x_plus * volumes[sid] + 1e-9)) for sid in security_ids
    }


def build_schedule(
    scenario: RedemptionScenario,
    limits: Mapping[str, int] | Sequence[int],
) -> LiquidationSchedule:
    """Spread a redemption over days, selling up to the daily limit of each name.

    Day h sells min(remaining, limit) of each security. The horizon is the
    first day by which everything is sold (at least 1 even for an all-zero
    scenario, so downstream ratios stay well defined).

    Raises:
        ValueError: if a security with a positive quantity has a zero or
            negative daily limit (it could never finish).
    """
    ids = scenario.security_ids
    q = np.asarray(scenario.shares, dtype=np.int64)
    if isinstance(limits, Mapping):
        lim = np.asarray([int(limits[sid]) for sid in ids], dtype=np.int64)
    else:
        if len(limits) != len(ids):
            raise ValueError(
                f"got {len(limits)} limits for {len(ids)} securities"
            )
        lim = np.asarray([int(v) for v in limits], dtype=np.int64)
    bad = [ids[i] for i in range(len(ids)) if q[i] > 0 and lim[i] <= 0]
    if bad:
        raise ValueError(f"zero daily limit with positive quantity: {', '.join(bad)}")

    days = []
    remaining = q.copy()
    while remaining.any():
        sale = np.minimum(remaining, lim)
        days.append(sale)
        remaining = remaining - sale
    if not days:
        days.append(np.zeros_like(q))
    sold = np.column_stack(days)
    sold.setflags(write=False)
    return LiquidationSchedule(ids, sold, tuple(int(v) for v in lim))
