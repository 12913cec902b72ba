"""Reproducible synthetic trade generation for recovery tests and demos."""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

from .base import TradeObservation


def synthetic_trades(
    n: int,
    cost_fn: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray],
    seed: int,
    noise: float = 0.0,
    spread_range: tuple[float, float] = (1e-4, 1e-3),
    participation_range: tuple[float, float] = (1e-4, 0.3),
    risk_range: tuple[float, float] = (0.005, 0.03),
    security_ids: Sequence[str] | None = None,
) -> list[TradeObservation]:
    """Draw trades with log-uniform covariates and model-generated costs.

    cost_fn maps (spread, participation, risk) arrays to the noiseless cost;
    Gaussian noise with standard deviation ``noise`` is added on top. The
    same seed always produces the same trades. Securities are assigned
    round-robin from security_ids (a single synthetic id by default).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)

    def log_uniform(lo: float, hi: float, size: int) -> np.ndarray:
        if not 0 < lo <= hi:
            raise ValueError("ranges must be positive and ordered")
        return np.exp(rng.uniform(np.log(lo), np.log(hi), size))

    s = log_uniform(*spread_range, n)
    x = log_uniform(*participation_range, n)
    r = log_uniform(*risk_range, n)
    c = np.asarray(cost_fn(s, x, r), dtype=float)
    if noise > 0:
        c = c + rng.normal(0.0, noise, n)
    ids = list(security_ids) if security_ids else ["SYNTHETIC"]
    return [
        TradeObservation(
            cost=float(c[i]),
            spread=float(s[i]),
            participation=float(x[i]),
            risk=float(r[i]),
            security_id=ids[i % len(ids)],
        )
        for i in range(n)
    ]
