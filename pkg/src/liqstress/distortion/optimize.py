"""Cost-versus-distortion optimal liquidation and the efficient frontier.

The objective 0.5 * TE(q)^2 + lambda * cost(q) is non-convex (the impact
kernel is concave below the inflection point) and non-smooth at the regime
switch, so the solver is a projected multi-start pairwise-transfer descent on
the post-trade allocation rather than anything gradient based: budget-neutral
dollar transfers between asset pairs, each line-searched, from the pro-rata
point and a few seeded random feasible points. Shares are rounded at the end.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, replace

import numpy as np

from ..costmodel import BucketParams, ParticipationBasis, SecurityLiquidityProfile
from ..liquidation import (
    Portfolio,
    RedemptionScenario,
    build_schedule,
    multi_day_unit_cost,
    total_cost,
)
from .risk import tracking_error
from .weights import validate_covariance


@dataclass(frozen=True)
class FrontierPoint:
    """One solved trade-off point: the scenario and its cost / distortion pair."""

    lam: float
    cost: float
    tracking_error: float
    scenario: RedemptionScenario
    objective: float
    dominated: bool = False


def _bucket_for(sid: str, buckets) -> BucketParams:
    if isinstance(buckets, BucketParams):
        return buckets
    return buckets[sid]


def _capacity(profile: SecurityLiquidityProfile, bucket: BucketParams) -> float:
    if bucket.participation_basis is ParticipationBasis.VOLUME:
        return bucket.x_plus * profile.daily_volume
    if profile.outstanding is None:
        raise ValueError(f"{profile.security_id}: outstanding required")
    return bucket.x_plus * profile.outstanding


class _Objective:
    def __init__(self, portfolio, cov, profiles, buckets, lam):
        self.ids = portfolio.security_ids
        self.holdings = np.array([h.shares for h in portfolio.holdings], dtype=float)
        self.prices = np.array([profiles[sid].price for sid in self.ids])
        self.profiles = [profiles[sid] for sid in self.ids]
        self.buckets = [_bucket_for(sid, buckets) for sid in self.ids]
        self.cov = cov
        self.lam = lam
        self.value = float(self.holdings @ self.prices)

    def relative_cost(self, q: np.ndarray) -> float:
        notional = float(q @ self.prices)
        if notional <= 0:
            return 0.0
        total = 0.0
        for i in range(q.size):
            if q[i] <= 0:
                continue
            avg = multi_day_unit_cost(q[i], self.profiles[i], self.buckets[i])
            total += q[i] * self.prices[i] * avg.average.value
        return total / notional

    def __call__(self, q: np.ndarray) -> float:
        te = tracking_error(self.holdings, q, self.cov, self.prices)
        return 0.5 * te * te + self.lam * self.relative_cost(q)


def _random_feasible(rng, holdings, prices, redemption_value) -> np.ndarray:
    """Random dollar allocation over assets, repaired into the share box."""
    n = holdings.size
    dollars = redemption_value * rng.dirichlet(np.ones(n))
    capacity = holdings * prices
    for _ in range(200):
        excess = np.maximum(dollars - capacity, 0.0)
        spill = float(excess.sum())
        if spill <= 1e-12 * max(redemption_value, 1.0):
            break
        dollars = np.minimum(dollars, capacity)
        slack = capacity - dollars
        total_slack = float(slack.sum())
        dollars = dollars + spill * slack / total_slack
    return np.minimum(dollars, capacity) / prices


def _pair_descent(objective, q0, holdings, prices, max_sweeps, tol):
    q = q0.copy()
    best = objective(q)
    n = q.size
    for _ in range(max_sweeps):
        improved = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                # transfer t dollars of selling from j to i
                t_max = min((holdings[i] - q[i]) * prices[i], q[j] * prices[j])
                t_min = -min((holdings[j] - q[j]) * prices[j], q[i] * prices[i])
                if t_max - t_min <= 0:
                    continue

                def moved(t):
                    trial = q.copy()
                    trial[i] += t / prices[i]
                    trial[j] -= t / prices[j]
                    return trial

                grid = np.linspace(t_min, t_max, 9)
                grid = np.append(grid, 0.0)
                values = [objective(moved(t)) for t in grid]
                k = int(np.argmin(values))
                lo = grid[k - 1] if k > 0 else grid[k]
                hi = grid[k + 1] if k < grid.size - 1 else grid[k]
                a, b = min(lo, hi), max(lo, hi)
                phi = 0.5 * (3.0 - np.sqrt(5.0))
                x1 = a + phi * (b - a)
                x2 = b - phi * (b - a)
                f1, f2 = objective(moved(x1)), objective(moved(x2))
                for _ in range(40):
                    if b - a < 1e-12 * max(abs(t_max), abs(t_min), 1.0):
                        break
                    if f1 <= f2:
                        b, x2, f2 = x2, x1, f1
                        x1 = a + phi * (b - a)
                        f1 = objective(moved(x1))
                    else:
                        a, x1, f1 = x1, x2, f2
                        x2 = b - phi * (b - a)
                        f2 = objective(moved(x2))
                candidates = [(best, 0.0)] + [
                    (objective(moved(t)), t) for t in (grid[k], x1, x2)
                ]
                f_new, t_new = min(candidates, key=lambda p: p[0])
                if f_new < best - 1e-15:
                    improved += best - f_new
                    best = f_new
                    q = moved(t_new)
        if improved < tol:
            break
    return q, best


def optimal_liquidation(
    portfolio: Portfolio,
    redemption_value: float,
    cov,
    profiles: Mapping[str, SecurityLiquidityProfile],
    buckets,
    lam: float,
    seed: int = 0,
    n_starts: int = 6,
    max_sweeps: int = 60,
    extra_starts: Sequence[np.ndarray] = (),
) -> FrontierPoint:
    """Minimize 0.5 * TE^2 + lambda * relative cost at a fixed redemption value.

    The search runs on continuous share quantities inside the box
    [0, holdings] on the budget hyperplane, then rounds half-to-even to
    integer shares; reported cost, tracking error and objective are those of
    the integer scenario (cost via its actual multi-day schedule). The result
    is never worse than the pro-rata start in objective, up to rounding.

    Raises:
        ValueError: lambda < 0, or redemption not inside (0, portfolio value).
    """
    if lam < 0:
        raise ValueError(f"lambda must be >= 0, got {lam}")
    cov = validate_covariance(cov)
    obj = _Objective(portfolio, cov, profiles, buckets, lam)
    if not 0 < redemption_value < obj.value:
        raise ValueError(
            "redemption value must be strictly between 0 and the portfolio value"
        )
    holdings, prices = obj.holdings, obj.prices
    q_pro = redemption_value * holdings / obj.value

    rng = np.random.default_rng([seed, abs(int(round(lam * 1e9))) % (2**32)])
    starts = [q_pro] + [np.asarray(s, dtype=float) for s in extra_starts]
    for _ in range(max(n_starts - len(starts), 0)):
        starts.append(_random_feasible(rng, holdings, prices, redemption_value))

    best_q, best_f = None, np.inf
    for q0 in starts:
        q, f = _pair_descent(obj, q0, holdings, prices, max_sweeps, tol=1e-14)
        if f < best_f:
            best_q, best_f = q, f

    q_int = np.clip(np.rint(best_q), 0, holdings).astype(np.int64)
    scenario = RedemptionScenario(
        tuple((sid, int(q_int[i])) for i, sid in enumerate(portfolio.security_ids))
    )
    limits = {
        sid: max(int(np.floor(_capacity(obj.profiles[i], obj.buckets[i]) + 1e-9)), 1)
        for i, sid in enumerate(portfolio.security_ids)
    }
    if q_int.sum() > 0:
        schedule = build_schedule(scenario, limits)
        breakdown = total_cost(
            schedule, {sid: profiles[sid] for sid in portfolio.security_ids}, buckets
        )
        cost = breakdown.relative
    else:
        cost = 0.0
    te = tracking_error(holdings, q_int.astype(float), cov, prices)
    objective = 0.5 * te * te + lam * cost
    return FrontierPoint(lam, cost, te, scenario, objective)


def frontier(
    portfolio: Portfolio,
    redemption_value: float,
    cov,
    profiles: Mapping[str, SecurityLiquidityProfile],
    buckets,
    lambdas: Sequence[float],
    seed: int = 0,
    **kwargs,
) -> list[FrontierPoint]:
    """Sweep the trade-off weight and flag dominated points.

    Unique lambdas are solved once in ascending order, warm starting each
    from the previous solution (duplicates reuse the same solved point, so
    identical inputs give identical outputs). The returned list is sorted by
    lambda. A point is dominated when another point is at least as good on
    both cost and tracking error and strictly better on one.
    """
    lambdas = [float(l) for l in lambdas]
    if not lambdas:
        raise ValueError("lambda grid must be nonempty")
    solved: dict[float, FrontierPoint] = {}
    prev_q = None
    for lam in sorted(set(lambdas)):
        extra = () if prev_q is None else (prev_q,)
        point = optimal_liquidation(
            portfolio,
            redemption_value,
            cov,
            profiles,
            buckets,
            lam,
            seed=seed,
            extra_starts=extra,
            **kwargs,
        )
        solved[lam] = point
        prev_q = np.array([q for _, q in point.scenario.quantities], dtype=float)

    points = [solved[lam] for lam in sorted(lambdas)]
    flagged = []
    for p in points:
        dominated = any(
            (r.cost <= p.cost and r.tracking_error <= p.tracking_error)
            and (r.cost < p.cost or r.tracking_error < p.tracking_error)
            for r in points
        )
        flagged.append(replace(p, dominated=dominated))
    return flagged
