"""Batch command line interface.

Five subcommands: ``cost``, ``liquidate``, ``stress-calibrate``, ``calibrate``
and ``frontier``. Every number in a report is produced by a library call, the
commands only parse files, loop and format. Identical inputs and seed give
byte-identical output. Exit codes: 0 success, 2 input error, 3 numerical
failure.
"""

from __future__ import annotations

import csv
import functools
import hashlib
import io
import json
import math
import re
import sys
from pathlib import Path

import click
import numpy as np
import pandas as pd

from ..calibration import (
    TradeObservation,
    grid_search_gamma,
    nls_fit_equity,
    two_stage_bond_fit,
)
from ..costmodel import (
    BucketParams,
    MissingFieldError,
    ParticipationBasis,
    ProhibitiveTradeError,
    Shock,
    StressScenario,
    apply_stress,
)
from ..evt import (
    DEFAULT_BLOCK_LEN,
    ConvergenceError,
    FactorKind,
    FactorSample,
    GevParams,
    block_maxima,
    fit_gev,
    fit_gpd,
    gev_stress,
    gpd_stress,
    historical_stress,
    make_factor_sample,
    years_to_days,
)
from ..distortion import frontier as sweep_frontier
from ..liquidation import (
    Portfolio,
    RedemptionScenario,
    build_schedule,
    liquidation_ratio_series,
    liquidation_shortfall,
    multi_day_unit_cost,
    pro_rata,
    share_limits_from_participation,
    time_to_liquidation,
    total_cost,
)
from ..registry import (
    ConfigError,
    PortfolioFileError,
    builtin_buckets,
    load_bucket_config,
    load_portfolio,
    params_key_for,
)

FORMATS = ("table", "json", "csv")


# ---------------------------------------------------------------------------
# plumbing


def guarded(func):
    """Map exceptions to the documented exit codes, message on stderr."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ConvergenceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except np.linalg.LinAlgError as exc:
            click.echo(f"error: linear algebra failure: {exc}", err=True)
            sys.exit(3)
        except (PortfolioFileError, ConfigError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _floats(text: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{flag}: expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise ValueError(f"{flag}: empty list")
    return values


def _ints(text: str, flag: str) -> list[int]:
    out = []
    for value in _floats(text, flag):
        if value != int(value) or value < 1:
            raise ValueError(f"{flag}: expected positive integers, got {text!r}")
        out.append(int(value))
    return out


def _digest(paths, extras) -> str:
    h = hashlib.sha256()
    for path in paths:
        if path is None:
            h.update(b"-")
            continue
        h.update(Path(path).read_bytes())
    h.update(repr(extras).encode())
    return h.hexdigest()[:12]


def _read_series(path) -> np.ndarray:
    """Date-value or value-only column file; the last column is the series.

    Comma, semicolon, tab or whitespace delimited; a leading header row is
    skipped; blank cells are dropped.
    """
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read series file {path}: {exc}") from exc
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f for f in re.split(r"[,;\t ]+", line) if f]
        try:
            value = float(fields[-1])
        except ValueError:
            if lineno == 1:
                continue
            raise ValueError(
                f"series file {path}:{lineno}: bad value {fields[-1]!r}"
            ) from None
        if math.isfinite(value):
            values.append(value)
    if len(values) < 3:
        raise ValueError(f"series file {path}: fewer than 3 numeric values")
    return np.asarray(values, dtype=float)


def parse_stress_file(path) -> StressScenario:
    """Key-value stress file -> scenario.

    One entry per line: ``spread mult 1.75``, ``spread add 0.0008``,
    ``vol mult 2.0``, ``vol add 0.20``, ``volume mult 0.75``. Values are plain
    fractions (spread 0.0008 = 8 bps, vol 0.20 = 20 points of annual vol).
    ``#`` starts a comment; a repeated key takes the last entry.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read stress file {path}: {exc}") from exc
    shocks = {"spread": Shock.none(), "vol": Shock.none(), "volume": Shock.none()}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(
                f"{path}:{lineno}: expected '<field> <mult|add> <value>', got {raw!r}"
            )
        field, kind, value_text = parts
        if field not in shocks:
            raise ValueError(f"{path}:{lineno}: unknown field {field!r}")
        try:
            value = float(value_text)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad number {value_text!r}") from exc
        if kind == "mult":
            shocks[field] = Shock.mult(value)
        elif kind == "add":
            if field == "volume":
                raise ValueError(f"{path}:{lineno}: volume shock must be mult")
            shocks[field] = Shock.add(value)
        else:
            raise ValueError(f"{path}:{lineno}: unknown shock kind {kind!r}")
    return StressScenario(spread=shocks["spread"], vol=shocks["vol"], volume=shocks["volume"])


def _scenario_echo(scenario: StressScenario) -> dict:
    def one(shock: Shock) -> dict:
        return {"kind": shock.kind.value, "value": shock.value}

    return {
        "spread": one(scenario.spread),
        "vol": one(scenario.vol),
        "volume": one(scenario.volume),
    }


def _bucket_table(buckets_path):
    return load_bucket_config(buckets_path) if buckets_path else builtin_buckets()


def _bucket_for(record, table) -> tuple[BucketParams, str]:
    key = params_key_for(record)
    if key and key in table:
        return table[key], key
    return table["large_cap_equity"], "large_cap_equity (fallback)"


def _print_table(rows: list[list[str]], header: list[str]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    parts = []
    parts.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip())
    parts.append("  ".join("-" * w for w in widths))
    for row in rows:
        parts.append(
            "  ".join(cell.rjust(widths[i]) if i else cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        )
    click.echo("\n".join(parts))


def _print_csv(rows: list[list], header: list[str]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    click.echo(buf.getvalue(), nl=False)


def _print_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2))


def _fmt(value, decimals: int) -> str:
    if value is None:
        return "-"
    return f"{value:.{decimals}f}"


def _num(value):
    return None if value is None else float(value)


# ---------------------------------------------------------------------------
# commands


@click.group()
@click.version_option(package_name="liqstress")
def main() -> None:
    """Liquidity cost, liquidation and stress analysis on portfolio files."""


@main.command()
@click.option("--portfolio", "portfolio_path", required=True, type=click.Path())
@click.option("--buckets", "buckets_path", type=click.Path(), default=None,
              help="INI bucket-parameter file; defaults to the built-ins.")
@click.option("--stress", "stress_path", type=click.Path(), default=None,
              help="Stress spec file; omitted means the identity scenario.")
@click.option("--grid", "grid_text", default=None,
              help="Comma list of participation rates to price, e.g. 0.001,0.01,0.1.")
@click.option("--redemption-rate", "rate", type=float, default=None,
              help="Price each security's pro-rata trade for this redemption rate.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table")
@guarded
def cost(portfolio_path, buckets_path, stress_path, grid_text, rate, fmt) -> None:
    """Normal and stressed unit cost per security at requested participations.

    Trades larger than one day's limit are spread over the fewest days the
    limit allows, and the reported cost is the value-weighted average over
    those days; LT is that day count under stress. LS is the part of the
    holding still unsold after the first stressed day.
    """
    portfolio, records = load_portfolio(portfolio_path)
    table = _bucket_table(buckets_path)
    scenario = parse_stress_file(stress_path) if stress_path else StressScenario.identity()
    if grid_text is None and rate is None:
        raise ValueError("provide --grid participations or --redemption-rate")
    participations = _floats(grid_text, "--grid") if grid_text is not None else None
    if participations is not None and any(x < 0 for x in participations):
        raise ValueError("--grid: participation rates must be >= 0")
    if rate is not None and not 0 <= rate <= 1:
        raise ValueError("--redemption-rate must be in [0, 1]")

    rows = []
    notes = []
    for holding in portfolio.holdings:
        sid = holding.security_id
        record = records[sid]
        bucket, key = _bucket_for(record, table)
        if key.endswith("(fallback)"):
            notes.append(f"{sid}: unclassified, priced with large_cap_equity parameters")
        profile = record.profile
        stressed = apply_stress(profile, scenario)
        if bucket.participation_basis is ParticipationBasis.VOLUME:
            denom = profile.daily_volume
            basis_name = "daily_volume"
        else:
            denom = profile.outstanding or 0.0
            basis_name = "outstanding"
        if denom <= 0:
            notes.append(f"{sid}: no {basis_name} data, cannot price participation")
            for x in participations if participations is not None else [None]:
                rows.append([sid, x, None, None, None, None])
            continue
        if participations is not None:
            quantities = [x * denom for x in participations]
            xs = participations
        else:
            quantities = [rate * holding.shares]
            xs = [quantities[0] / denom]
        for x, quantity in zip(xs, quantities):
            try:
                normal = multi_day_unit_cost(quantity, profile, bucket)
                shocked = multi_day_unit_cost(quantity, stressed, bucket)
            except (MissingFieldError, ProhibitiveTradeError) as exc:
                notes.append(f"{sid}: {exc}")
                rows.append([sid, x, None, None, None, None])
                continue
            unfilled = max(quantity - shocked.quantities[0], 0.0)
            shortfall = unfilled / holding.shares if holding.shares > 0 else None
            rows.append(
                [
                    sid,
                    x,
                    normal.average.value * 1e4,
                    shocked.average.value * 1e4,
                    shocked.days,
                    None if shortfall is None else shortfall * 100.0,
                ]
            )

    digest = _digest([portfolio_path, buckets_path, stress_path], (grid_text, rate))
    if fmt == "table":
        _print_table(
            [
                [r[0], _fmt(None if r[1] is None else r[1] * 100, 2),
                 _fmt(r[2], 1), _fmt(r[3], 1),
                 "-" if r[4] is None else str(r[4]), _fmt(r[5], 2)]
                for r in rows
            ],
            ["security", "x_pct", "normal_bps", "stress_bps", "lt_days", "ls_pct"],
        )
        for note in notes:
            click.echo(f"note: {note}")
        click.echo(f"inputs sha256/12: {digest}")
    elif fmt == "csv":
        _print_csv(
            [[r[0], r[1], _num(r[2]), _num(r[3]), r[4], _num(r[5])] for r in rows],
            ["security", "participation", "normal_bps", "stress_bps", "lt_days", "ls_pct"],
        )
    else:
        _print_json(
            {
                "inputs": {
                    "portfolio": str(portfolio_path),
                    "buckets": None if buckets_path is None else str(buckets_path),
                    "stress": None if stress_path is None else str(stress_path),
                    "digest": digest,
                },
                "scenario": _scenario_echo(scenario),
                "rows": [
                    {
                        "security": r[0],
                        "participation": r[1],
                        "normal_bps": _num(r[2]),
                        "stress_bps": _num(r[3]),
                        "lt_days": r[4],
                        "ls_pct": _num(r[5]),
                    }
                    for r in rows
                ],
                "notes": notes,
            }
        )


def _read_scenario_file(path, portfolio: Portfolio) -> RedemptionScenario:
    try:
        frame = pd.read_csv(path, sep=None, engine="python")
    except (OSError, pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read scenario file {path}: {exc}") from exc
    for column in ("security_id", "shares"):
        if column not in frame.columns:
            raise ValueError(f"scenario file {path}: missing column {column}")
    held = {h.security_id for h in portfolio.holdings}
    quantities = []
    for i in frame.index:
        sid = str(frame.at[i, "security_id"]).strip()
        if sid not in held:
            raise ValueError(f"scenario file {path}: unknown security {sid}")
        quantities.append((sid, int(frame.at[i, "shares"])))
    return RedemptionScenario(quantities=tuple(quantities))


@main.command()
@click.option("--portfolio", "portfolio_path", required=True, type=click.Path())
@click.option("--buckets", "buckets_path", type=click.Path(), default=None)
@click.option("--redemption-rate", "rate", type=float, default=None,
              help="Pro-rata redemption as a fraction of the portfolio.")
@click.option("--scenario", "scenario_path", type=click.Path(), default=None,
              help="Explicit redemption file with security_id,shares columns.")
@click.option("--limits", "limits_text", default="0.10",
              help="Comma list of daily trading limits as fractions of volume.")
@click.option("--horizon", "horizon", type=int, default=None,
              help="Pad or truncate the LR series to this many days.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table")
@guarded
def liquidate(portfolio_path, buckets_path, rate, scenario_path, limits_text, horizon, fmt) -> None:
    """Liquidation schedule, LR curve, LT, LS and cost totals per limit."""
    portfolio, records = load_portfolio(portfolio_path)
    table = _bucket_table(buckets_path)
    prices = {sid: records[sid].profile.price for sid in records}
    profiles = {sid: records[sid].profile for sid in records}
    buckets = {sid: _bucket_for(records[sid], table)[0] for sid in records}
    limits = _floats(limits_text, "--limits")
    if any(l <= 0 for l in limits):
        raise ValueError("--limits: limits must be > 0")
    if horizon is not None and horizon < 1:
        raise ValueError("--horizon must be >= 1")
    if (rate is None) == (scenario_path is None):
        raise ValueError("provide exactly one of --redemption-rate or --scenario")
    if rate is not None:
        if not 0 <= rate <= 1:
            raise ValueError("--redemption-rate must be in [0, 1]")
        scenario = pro_rata(portfolio, rate)
    else:
        scenario = _read_scenario_file(scenario_path, portfolio)
    redemption_value = scenario.value(prices)

    ids = [h.security_id for h in portfolio.holdings]
    volumes = {sid: profiles[sid].daily_volume for sid in ids}
    digest = _digest([portfolio_path, buckets_path, scenario_path],
                     (rate, limits_text, horizon))
    results = []
    if redemption_value > 0:
        for limit in limits:
            share_limits = share_limits_from_participation(limit, volumes, ids)
            schedule = build_schedule(scenario, share_limits)
            series = liquidation_ratio_series(schedule, prices)
            if horizon is not None:
                series = (series + [1.0] * horizon)[:horizon]
            entry = {
                "limit": limit,
                "lr_pct": [round(lr * 100.0, 10) for lr in series],
                "lt_days": time_to_liquidation(schedule, prices, 1.0),
                "ls_pct": liquidation_shortfall(schedule, prices) * 100.0,
            }
            try:
                costs = total_cost(schedule, profiles, buckets)
                entry["costs"] = {
                    "total": costs.total,
                    "spread": costs.spread_part,
                    "impact": costs.impact_part,
                    "fixed": costs.fixed_part,
                    "relative_bps": costs.relative * 1e4,
                }
            except (ProhibitiveTradeError, MissingFieldError) as exc:
                entry["costs"] = None
                entry["cost_note"] = str(exc)
            results.append(entry)

    if fmt == "csv":
        rows = []
        for entry in results:
            for day, lr in enumerate(entry["lr_pct"], start=1):
                rows.append([entry["limit"], day, lr])
        _print_csv(rows, ["limit", "day", "lr_pct"])
        return
    if fmt == "json":
        _print_json(
            {
                "inputs": {
                    "portfolio": str(portfolio_path),
                    "buckets": None if buckets_path is None else str(buckets_path),
                    "digest": digest,
                },
                "redemption": {
                    "rate": rate,
                    "scenario_file": None if scenario_path is None else str(scenario_path),
                    "value": redemption_value,
                    "shares": {sid: q for sid, q in scenario.quantities},
                },
                "empty": redemption_value == 0,
                "limits": results,
            }
        )
        return
    if redemption_value == 0:
        click.echo("empty redemption: LR undefined")
        click.echo(f"inputs sha256/12: {digest}")
        return
    for entry in results:
        click.echo(f"limit {entry['limit']:g} of daily volume")
        _print_table(
            [[str(day), _fmt(lr, 2)] for day, lr in enumerate(entry["lr_pct"], start=1)],
            ["day", "lr_pct"],
        )
        click.echo(f"LT {entry['lt_days']} days, LS {entry['ls_pct']:.2f}%")
        if entry.get("costs"):
            c = entry["costs"]
            click.echo(
                "cost total {0:.2f} = spread {1:.2f} + impact {2:.2f} + fixed {3:.2f}"
                " ({4:.1f} bps of redemption)".format(
                    c["total"], c["spread"], c["impact"], c["fixed"], c["relative_bps"]
                )
            )
        elif entry.get("cost_note"):
            click.echo(f"cost omitted: {entry['cost_note']}")
        click.echo("")
    click.echo(f"inputs sha256/12: {digest}")


@main.command("stress-calibrate")
@click.argument("series_files", nargs=-1, required=True, type=click.Path())
@click.option("--horizon", "horizon_text", default="1,5,21",
              help="Comma list of factor horizons in trading days.")
@click.option("--return-time", "return_text", default="1,2,5,10,25,50",
              help="Comma list of return times in years.")
@click.option("--method", "methods", multiple=True,
              type=click.Choice(["hist", "gev", "gpd"]),
              help="Restrict to these methods; default runs all three.")
@click.option("--block-len", type=int, default=DEFAULT_BLOCK_LEN, show_default=True,
              help="Block length in days for block-maxima fitting.")
@click.option("--kind", type=click.Choice(["mult", "add"]), default="mult",
              show_default=True, help="Multiplicative or additive factors.")
@click.option("--threshold", type=float, default=None,
              help="POT threshold; default is the 90th percentile per sample.")
@click.option("--gev-params", "gev_params_text", default=None,
              help="Skip fitting and use these mu,sigma,xi for the GEV rows.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table")
@guarded
def stress_calibrate(series_files, horizon_text, return_text, methods, block_len,
                     kind, threshold, gev_params_text, fmt) -> None:
    """Stress table: methods x horizons x return times from factor series.

    Cells are blank where the series is too short for the method at that
    return time. Several series files are concatenated after the per-file
    factor construction (pooled cross section).
    """
    horizons = _ints(horizon_text, "--horizon")
    return_times = _floats(return_text, "--return-time")
    if any(t <= 0 for t in return_times):
        raise ValueError("--return-time: return times must be > 0")
    wanted = tuple(methods) if methods else ("hist", "gev", "gpd")
    factor_kind = FactorKind.MULT if kind == "mult" else FactorKind.ADD
    fixed_gev = None
    if gev_params_text is not None:
        parts = _floats(gev_params_text, "--gev-params")
        if len(parts) != 3:
            raise ValueError("--gev-params: expected mu,sigma,xi")
        fixed_gev = GevParams(mu=parts[0], sigma=parts[1], xi=parts[2])
    series_list = [_read_series(path) for path in series_files]

    rows = []
    blanks = []
    for method in wanted:
        for horizon in horizons:
            samples = [make_factor_sample(s, horizon, factor_kind) for s in series_list]
            values = np.concatenate([s.values for s in samples])
            pooled = FactorSample(values=values, horizon=horizon, kind=factor_kind)
            cells: list[float | None] = []
            for years in return_times:
                days = years_to_days(years)
                cell = None
                note = None
                try:
                    if method == "hist":
                        result = historical_stress(pooled, days)
                        cell = None if result is None else result.value
                        if result is None:
                            note = "series too short"
                    elif method == "gev":
                        if fixed_gev is not None:
                            params = fixed_gev
                        else:
                            params = fit_gev(block_maxima(values, block_len))
                        cell = gev_stress(params, block_len, days).value
                    else:
                        u0 = np.quantile(values, 0.9) if threshold is None else threshold
                        params = fit_gpd(values, u0)
                        cell = gpd_stress(params, days).value
                except ValueError as exc:
                    note = str(exc)
                cells.append(cell)
                if note is not None:
                    blanks.append(f"{method} {horizon}d {years:g}y: {note}")
            rows.append((method, horizon, cells))

    if fmt == "csv":
        flat = []
        for method, horizon, cells in rows:
            for years, cell in zip(return_times, cells):
                flat.append([method, horizon, years, _num(cell)])
        _print_csv(flat, ["method", "horizon_days", "return_time_years", "stress"])
        return
    if fmt == "json":
        _print_json(
            {
                "inputs": {
                    "series": [str(p) for p in series_files],
                    "digest": _digest(series_files, (horizon_text, return_text, wanted,
                                                     block_len, kind, threshold,
                                                     gev_params_text)),
                },
                "return_times_years": return_times,
                "rows": [
                    {"method": m, "horizon_days": h,
                     "stress": [_num(c) for c in cells]}
                    for m, h, cells in rows
                ],
                "notes": blanks,
            }
        )
        return
    header = ["method", "horizon_d"] + [f"{t:g}y" for t in return_times]
    _print_table(
        [[m, str(h)] + [_fmt(c, 3) for c in cells] for m, h, cells in rows],
        header,
    )
    for note in blanks:
        click.echo(f"note: {note}")


def _read_trades(path) -> list[TradeObservation]:
    try:
        frame = pd.read_csv(path, sep=None, engine="python")
    except (OSError, pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read trade file {path}: {exc}") from exc
    required = ("cost_bps", "half_spread_bps", "participation_pct")
    for column in required:
        if column not in frame.columns:
            raise ValueError(f"trade file {path}: missing column {column}")
    if "risk" in frame.columns:
        risk = frame["risk"].to_numpy(dtype=float)
    elif "annual_vol_pct" in frame.columns:
        vol = frame["annual_vol_pct"].to_numpy(dtype=float) / 100.0
        risk = vol / math.sqrt(260.0)
    elif "dts_bps" in frame.columns:
        risk = frame["dts_bps"].to_numpy(dtype=float) * 1e-4
    else:
        raise ValueError(
            f"trade file {path}: need one of risk, annual_vol_pct, dts_bps"
        )
    ids = (
        [str(v) for v in frame["security_id"]]
        if "security_id" in frame.columns
        else [""] * len(frame)
    )
    observations = []
    for i in frame.index:
        observations.append(
            TradeObservation(
                cost=float(frame.at[i, "cost_bps"]) * 1e-4,
                spread=float(frame.at[i, "half_spread_bps"]) * 1e-4,
                participation=float(frame.at[i, "participation_pct"]) / 100.0,
                risk=float(risk[i]),
                security_id=ids[i],
            )
        )
    return observations


@main.command()
@click.argument("trades", type=click.Path())
@click.option("--model", type=click.Choice(["nls", "two-stage", "grid"]),
              default="nls", show_default=True)
@click.option("--grid", "grid_text", default="0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5",
              help="Concavity-exponent grid for --model grid.")
@click.option("--gamma1", type=float, default=None,
              help="Constrain the concavity exponent (nls only).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table")
@guarded
def calibrate(trades, model, grid_text, gamma1, fmt) -> None:
    """Fit a cost model to a trade file.

    The trade file needs cost_bps, half_spread_bps, participation_pct and one
    of risk (plain fraction), annual_vol_pct (converted to daily) or dts_bps.
    """
    observations = _read_trades(trades)
    if model == "nls":
        result = nls_fit_equity(observations, constrain_gamma=gamma1)
    elif model == "two-stage":
        result = two_stage_bond_fit(observations)
    else:
        result = grid_search_gamma(observations, _floats(grid_text, "--grid"))

    names = list(result.estimates)
    if fmt == "csv":
        _print_csv(
            [
                [n, result.estimates[n], result.stderrs[n],
                 result.t_stats[n], result.p_values[n]]
                for n in names
            ],
            ["parameter", "estimate", "stderr", "t", "p"],
        )
        return
    if fmt == "json":
        _print_json(
            {
                "model": model,
                "estimates": {n: result.estimates[n] for n in names},
                "stderrs": {n: result.stderrs[n] for n in names},
                "t_stats": {n: result.t_stats[n] for n in names},
                "p_values": {n: result.p_values[n] for n in names},
                "r2": result.r2,
                "r2_centered": result.r2_c,
                "n_obs": result.n_obs,
                "n_excluded": result.n_excluded,
                "warnings": list(result.warnings),
            }
        )
        return
    _print_table(
        [
            [n, f"{result.estimates[n]:.6g}", f"{result.stderrs[n]:.3g}",
             f"{result.t_stats[n]:.3g}", f"{result.p_values[n]:.3g}"]
            for n in names
        ],
        ["parameter", "estimate", "stderr", "t", "p"],
    )
    click.echo(
        f"R2 {result.r2 * 100:.2f}%  R2c {result.r2_c * 100:.2f}%  "
        f"n {result.n_obs}  excluded {result.n_excluded}"
    )
    for warning in result.warnings:
        click.echo(f"warning: {warning}")


def _read_covariance(path, ids: list[str]) -> np.ndarray:
    try:
        frame = pd.read_csv(path, sep=None, engine="python", header=None)
    except (OSError, pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise ValueError(f"cannot read covariance file {path}: {exc}") from exc
    try:
        float(frame.iloc[0, 0])
        has_header = False
    except (TypeError, ValueError):
        has_header = True
    if has_header:
        names = [str(v).strip() for v in frame.iloc[0]]
        if sorted(names) != sorted(ids):
            raise ValueError(
                f"covariance file {path}: header does not match portfolio securities"
            )
        body = frame.iloc[1:].to_numpy(dtype=float)
        order = [names.index(sid) for sid in ids]
        body = body[np.ix_(order, order)]
    else:
        body = frame.to_numpy(dtype=float)
    n = len(ids)
    if body.shape != (n, n):
        raise ValueError(
            f"covariance file {path}: expected a {n}x{n} matrix, got {body.shape}"
        )
    return body


@main.command()
@click.argument("covariance", type=click.Path())
@click.option("--portfolio", "portfolio_path", required=True, type=click.Path())
@click.option("--buckets", "buckets_path", type=click.Path(), default=None)
@click.option("--redemption-rate", "rate", type=float, required=True,
              help="Redemption as a fraction of portfolio value.")
@click.option("--lambda", "lambda_text", default="0,0.25,0.5,1,2,4",
              show_default=True, help="Comma list of trade-off weights.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table")
@guarded
def frontier(covariance, portfolio_path, buckets_path, rate, lambda_text, seed, fmt) -> None:
    """Cost / tracking-error frontier for one redemption.

    COVARIANCE is a CSV matrix of annualized return covariances, either raw in
    portfolio order or with a header row of security ids.
    """
    portfolio, records = load_portfolio(portfolio_path)
    table = _bucket_table(buckets_path)
    prices = {sid: records[sid].profile.price for sid in records}
    profiles = {sid: records[sid].profile for sid in records}
    buckets = {sid: _bucket_for(records[sid], table)[0] for sid in records}
    if not 0 < rate < 1:
        raise ValueError("--redemption-rate must be in (0, 1)")
    ids = [h.security_id for h in portfolio.holdings]
    cov = _read_covariance(covariance, ids)
    lambdas = _floats(lambda_text, "--lambda")
    if any(l < 0 for l in lambdas):
        raise ValueError("--lambda: weights must be >= 0")
    redemption_value = rate * portfolio.total_value(prices)

    points = sweep_frontier(
        portfolio, redemption_value, cov, profiles, buckets, lambdas, seed=seed
    )

    if fmt == "csv":
        _print_csv(
            [
                [p.lam, p.cost * 1e4, p.tracking_error * 100.0, p.objective,
                 int(p.dominated)]
                for p in points
            ],
            ["lambda", "cost_bps", "te_pct", "objective", "dominated"],
        )
        return
    if fmt == "json":
        _print_json(
            {
                "inputs": {
                    "portfolio": str(portfolio_path),
                    "covariance": str(covariance),
                    "digest": _digest([portfolio_path, covariance, buckets_path],
                                      (rate, lambda_text, seed)),
                },
                "redemption_value": redemption_value,
                "points": [
                    {
                        "lambda": p.lam,
                        "cost_bps": p.cost * 1e4,
                        "te_pct": p.tracking_error * 100.0,
                        "objective": p.objective,
                        "dominated": p.dominated,
                        "shares": {sid: q for sid, q in p.scenario.quantities},
                    }
                    for p in points
                ],
            }
        )
        return
    _print_table(
        [
            [f"{p.lam:g}", _fmt(p.cost * 1e4, 1), _fmt(p.tracking_error * 100.0, 4),
             f"{p.objective:.3e}", "yes" if p.dominated else "no"]
            for p in points
        ],
        ["lambda", "cost_bps", "te_pct", "objective", "dominated"],
    )


if __name__ == "__main__":
    main()
