"""Bucket-parameter configuration files."""

from __future__ import annotations

import configparser
from pathlib import Path

from ..costmodel import (
    BucketKind,
    BucketParams,
    ParticipationBasis,
    RiskMeasure,
    benchmark_bucket,
)


class ConfigError(ValueError):
    """Configuration file violates the schema; message carries the location."""


_RISK = {"volatility": RiskMeasure.VOLATILITY, "dts": RiskMeasure.DTS}
_BASIS = {
    "volume": ParticipationBasis.VOLUME,
    "outstanding": ParticipationBasis.OUTSTANDING,
}
_FLOAT_KEYS = ("beta_spread", "beta_impact", "gamma1", "gamma2", "x_tilde", "x_plus")


def builtin_buckets() -> dict[str, BucketParams]:
    """The five built-in benchmark parameter sets, keyed by kind value."""
    return {kind.value: benchmark_bucket(kind) for kind in BucketKind}


def load_bucket_config(path: str | Path) -> dict[str, BucketParams]:
    """Parse an INI-style bucket file into validated parameter sets.

    Each section is one bucket. A ``kind`` key picks a built-in benchmark as
    the base; the remaining keys override single fields (all values plain
    fractions / dimensionless, decimal point only):

        [my_equity]
        kind = large_cap_equity
        x_plus = 0.30

    Sections without ``kind`` must spell out every numeric field. The built-in
    benchmarks are always present under their own names unless a section
    redefines them; an empty file therefore yields exactly the built-ins.

    Raises:
        ConfigError: unreadable file, unknown key, bad number, or parameters
            that fail validation, with the section and key in the message.
    """
    parser = configparser.ConfigParser()
    read = parser.read(str(path))
    if not read:
        raise ConfigError(f"cannot read bucket config {path}")
    out = builtin_buckets()
    for section in parser.sections():
        raw = dict(parser.items(section))
        kind = raw.pop("kind", None)
        base: dict = {}
        if kind is not None:
            try:
                base_params = benchmark_bucket(kind)
            except ValueError as exc:
                raise ConfigError(f"[{section}] kind: {exc}") from exc
            base = {
                "beta_spread": base_params.beta_spread,
                "beta_impact": base_params.beta_impact,
                "gamma1": base_params.gamma1,
                "gamma2": base_params.gamma2,
                "x_tilde": base_params.x_tilde,
                "x_plus": base_params.x_plus,
                "risk_measure": base_params.risk_measure,
                "participation_basis": base_params.participation_basis,
            }
        for key, value in raw.items():
            if key in _FLOAT_KEYS:
                try:
                    base[key] = float(value)
                except ValueError as exc:
                    raise ConfigError(
                        f"[{section}] {key}: not a number: {value!r}"
                    ) from exc
            elif key == "risk_measure":
                if value.lower() not in _RISK:
                    raise ConfigError(f"[{section}] risk_measure: {value!r}")
                base[key] = _RISK[value.lower()]
            elif key == "participation_basis":
                if value.lower() not in _BASIS:
                    raise ConfigError(f"[{section}] participation_basis: {value!r}")
                base[key] = _BASIS[value.lower()]
            else:
                raise ConfigError(f"[{section}] unknown key {key!r}")
        missing = [k for k in _FLOAT_KEYS if k not in base]
        if missing:
            raise ConfigError(f"[{section}] missing fields: {', '.join(missing)}")
        base.setdefault("risk_measure", RiskMeasure.VOLATILITY)
        base.setdefault("participation_basis", ParticipationBasis.VOLUME)
        try:
            out[section] = BucketParams(**base)
        except ValueError as exc:
            raise ConfigError(f"[{section}] {exc}") from exc
    return out


def save_bucket_config(buckets: dict[str, BucketParams], path: str | Path) -> None:
    """Serialize parameter sets so load_bucket_config round-trips them."""
    parser = configparser.ConfigParser()
    for name, b in buckets.items():
        parser[name] = {
            "beta_spread": repr(b.beta_spread),
            "beta_impact": repr(b.beta_impact),
            "gamma1": repr(b.gamma1),
            "gamma2": repr(b.gamma2),
            "x_tilde": repr(b.x_tilde),
            "x_plus": repr(b.x_plus),
            "risk_measure": b.risk_measure.value,
            "participation_basis": b.participation_basis.value,
        }
    with open(path, "w", encoding="utf-8") as handle:
        parser.write(handle)
