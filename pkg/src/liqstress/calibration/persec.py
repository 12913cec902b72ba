"""Per-security regressions and the cross-sectional summary of the estimates."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .base import (
    COLLINEARITY_CONDITION_LIMIT,
    FitResult,
    drop_negative_costs,
    ols,
    r2_metrics,
)

_SUMMARY_STATS = ("mean", "median", "q10", "q25", "q75", "q90", "min", "max")


@dataclass
class PerSecurityOlsResult:
    fits: dict[str, FitResult]
    summary: dict[str, dict[str, float]]
    skipped: tuple[tuple[str, int], ...]


def per_security_ols(
    observations, gamma1: float, min_obs: int = 5
) -> PerSecurityOlsResult:
    """OLS of cost on (spread, risk * participation ** gamma1) security by security.

    Securities with fewer than min_obs trades are skipped and reported, not
    silently dropped. The summary gives distribution statistics of the two
    coefficients across securities.
    """
    observations, _ = drop_negative_costs(observations)
    by_sec = defaultdict(list)
    for o in observations:
        by_sec[o.security_id].append(o)

    fits: dict[str, FitResult] = {}
    skipped = []
    for sid in sorted(by_sec):
        group = by_sec[sid]
        if len(group) < min_obs:
            skipped.append((sid, len(group)))
            continue
        c = np.array([o.cost for o in group])
        s = np.array([o.spread for o in group])
        x = np.array([o.participation for o in group])
        r = np.array([o.risk for o in group])
        X = np.column_stack([s, r * x**gamma1])
        fit = ols(X, c)
        r2, r2_c = r2_metrics(fit.fitted, c)
        warnings = ()
        if fit.condition > COLLINEARITY_CONDITION_LIMIT:
            warnings = (f"ill-conditioned design (cond={fit.condition:.3g})",)
        names = ["beta_spread", "beta_impact"]
        fits[sid] = FitResult(
            estimates={k: float(v) for k, v in zip(names, fit.coef)},
            stderrs={k: float(v) for k, v in zip(names, fit.stderr)},
            t_stats={k: float(v) for k, v in zip(names, fit.t_stats)},
            p_values={k: float(v) for k, v in zip(names, fit.p_values)},
            r2=r2,
            r2_c=r2_c,
            n_obs=len(group),
            warnings=warnings,
        )

    summary: dict[str, dict[str, float]] = {}
    for name in ("beta_spread", "beta_impact"):
        values = np.array([f.estimates[name] for f in fits.values()])
        if values.size == 0:
            summary[name] = {stat: float("nan") for stat in _SUMMARY_STATS}
            continue
        summary[name] = {
            "mean": float(values.mean()),
            "median": float(np.median(values)),
            "q10": float(np.quantile(values, 0.10)),
            "q25": float(np.quantile(values, 0.25)),
            "q75": float(np.quantile(values, 0.75)),
            "q90": float(np.quantile(values, 0.90)),
            "min": float(values.min()),
            "max": float(values.max()),
        }
    return PerSecurityOlsResult(fits, summary, tuple(skipped))
