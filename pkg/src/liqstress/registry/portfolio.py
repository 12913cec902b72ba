"""Portfolio file ingestion."""

from __future__ import annotations

import math
from pathlib import Path

import pandas as pd

from ..costmodel import SecurityLiquidityProfile
from ..liquidation import Holding, Portfolio
from .classify import SecurityRecord

REQUIRED_COLUMNS = ("security_id", "shares", "price")
OPTIONAL_NUMERIC = (
    "half_spread_bps",
    "annual_vol_pct",
    "daily_volume",
    "outstanding",
    "turnover_pct",
    "dts_bps",
    "duration_y",
    "credit_spread_bps",
    "fixed_cost_per_share",
)
OPTIONAL_TEXT = ("asset_class", "cap_bucket", "region", "rating")


class PortfolioFileError(ValueError):
    pass


def _num(frame, row_index, column, default=None):
    if column not in frame.columns:
        return default
    raw = frame.at[row_index, column]
    if raw is None or (isinstance(raw, float) and math.isnan(raw)) or raw == "":
        return default
    try:
        return float(raw)
    except (TypeError, ValueError) as exc:
        raise PortfolioFileError(
            f"row {row_index + 2}, column {column}: not a number: {raw!r}"
        ) from exc


def _text(frame, row_index, column) -> str:
    if column not in frame.columns:
        return ""
    raw = frame.at[row_index, column]
    if raw is None or (isinstance(raw, float) and math.isnan(raw)):
        return ""
    return str(raw).strip()


def load_portfolio(path: str | Path) -> tuple[Portfolio, dict[str, SecurityRecord]]:
    """Read a delimited portfolio file into holdings and security records.

    Expects a header row with at least security_id, shares and price. Spread,
    vol, turnover, DTS and credit spread columns carry the unit in their name
    (bps or pct) and land in the records as plain fractions. Optional fields
    left blank are recorded on each SecurityRecord rather than filled with a
    guess (spread, vol and volume fall back to zero, which downstream
    validation treats as "no data", not as a great price).

    Raises:
        PortfolioFileError: missing required column, non-numeric cell,
            duplicate security_id, or a portfolio with no positive value.
    """
    try:
        frame = pd.read_csv(path, sep=None, engine="python")
    except (OSError, pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise PortfolioFileError(f"cannot read portfolio file {path}: {exc}") from exc
    missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
    if missing:
        raise PortfolioFileError(f"missing required columns: {', '.join(missing)}")
    if len(frame) == 0:
        raise PortfolioFileError("portfolio file has no rows")

    ids = [str(v).strip() for v in frame["security_id"]]
    dupes = {sid for sid in ids if ids.count(sid) > 1}
    if dupes:
        raise PortfolioFileError(f"duplicate security_id: {', '.join(sorted(dupes))}")

    holdings = []
    records: dict[str, SecurityRecord] = {}
    for i in frame.index:
        sid = ids[i]
        shares = _num(frame, i, "shares")
        price = _num(frame, i, "price")
        if shares is None or price is None:
            raise PortfolioFileError(f"row {i + 2}: shares and price are required")
        absent = []
        half_spread = _num(frame, i, "half_spread_bps")
        annual_vol = _num(frame, i, "annual_vol_pct")
        daily_volume = _num(frame, i, "daily_volume")
        for name, value in (
            ("half_spread_bps", half_spread),
            ("annual_vol_pct", annual_vol),
            ("daily_volume", daily_volume),
        ):
            if value is None:
                absent.append(name)
        outstanding = _num(frame, i, "outstanding")
        turnover = _num(frame, i, "turnover_pct")
        dts = _num(frame, i, "dts_bps")
        duration = _num(frame, i, "duration_y")
        credit_spread = _num(frame, i, "credit_spread_bps")
        for name, value in (
            ("outstanding", outstanding),
            ("turnover_pct", turnover),
            ("dts_bps", dts),
            ("duration_y", duration),
            ("credit_spread_bps", credit_spread),
        ):
            if value is None and name in frame.columns:
                absent.append(name)
        profile = SecurityLiquidityProfile(
            security_id=sid,
            price=price,
            half_spread=(half_spread or 0.0) * 1e-4,
            annual_vol=(annual_vol or 0.0) / 100.0,
            daily_volume=daily_volume or 0.0,
            outstanding=outstanding,
            turnover=None if turnover is None else turnover / 100.0,
            dts=None if dts is None else dts * 1e-4,
            fixed_cost_per_share=_num(frame, i, "fixed_cost_per_share", 0.0),
        )
        records[sid] = SecurityRecord(
            profile=profile,
            asset_class=_text(frame, i, "asset_class"),
            cap_bucket=_text(frame, i, "cap_bucket"),
            region=_text(frame, i, "region"),
            rating=_text(frame, i, "rating"),
            duration=duration,
            credit_spread=None if credit_spread is None else credit_spread * 1e-4,
            missing_fields=tuple(absent),
        )
        holdings.append(Holding(sid, int(round(shares))))

    portfolio = Portfolio(tuple(holdings))
    prices = {sid: records[sid].profile.price for sid in records}
    if portfolio.total_value(prices) <= 0:
        raise PortfolioFileError("portfolio value must be > 0")
    return portfolio, records
