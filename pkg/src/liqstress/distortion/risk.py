"""Distortion risk measures of a liquidation."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .weights import current_weights, weights_after


def tracking_error(holdings, quantities, cov, prices) -> float:
    """Volatility of the weight change caused by the liquidation.

    Square root of delta_w' Cov delta_w with delta_w the difference between
    the pre- and post-trade weight vectors. Zero for pro-rata selling.
    """
    cov = np.asarray(cov, dtype=float)
    w_before = current_weights(holdings, prices)
    if cov.shape != (w_before.size, w_before.size):
        raise ValueError(
            f"covariance shape {cov.shape} does not match {w_before.size} assets"
        )
    delta = w_before - weights_after(holdings, quantities, prices)
    return math.sqrt(max(float(delta @ cov @ delta), 0.0))


def active_risk_bond(
    holdings,
    quantities,
    sectors: Sequence[str],
    modified_duration,
    dts,
    prices,
) -> float:
    """Sector-aggregated duration and DTS mismatch of the weight change.

    Half the sum over sectors of the squared net duration-weighted weight
    change, plus the same for DTS. Note this is a sum of squares, not a
    volatility: it is not on the scale of tracking_error and carries no
    square root.
    """
    md = np.asarray(modified_duration, dtype=float)
    d = np.asarray(dts, dtype=float)
    w_before = current_weights(holdings, prices)
    delta = w_before - weights_after(holdings, quantities, prices)
    if len(sectors) != delta.size:
        raise ValueError("sector list must cover every bond")
    for i, sector in enumerate(sectors):
        if sector is None or sector == "":
            raise ValueError(f"bond at position {i} has no sector")
    md_by_sector: dict[str, float] = {}
    dts_by_sector: dict[str, float] = {}
    for i, sector in enumerate(sectors):
        md_by_sector[sector] = md_by_sector.get(sector, 0.0) + delta[i] * md[i]
        dts_by_sector[sector] = dts_by_sector.get(sector, 0.0) + delta[i] * d[i]
    return 0.5 * sum(v * v for v in md_by_sector.values()) + 0.5 * sum(
        v * v for v in dts_by_sector.values()
    )
