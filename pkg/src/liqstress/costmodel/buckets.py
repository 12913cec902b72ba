"""Benchmark cost-model parameter sets for broad asset classes."""

from __future__ import annotations

from enum import Enum

from .types import BucketParams, ParticipationBasis, RiskMeasure

# Default trading limits: 10% of daily volume for volume-based participation,
# 300 bps of outstanding for outstanding-based participation. The inflection
# point defaults to two thirds of the limit and the second regime is linear.
DEFAULT_X_PLUS_VOLUME = 0.10
DEFAULT_X_PLUS_OUTSTANDING = 0.03
DEFAULT_X_TILDE_FRACTION = 2.0 / 3.0
DEFAULT_GAMMA2 = 1.0


class BucketKind(Enum):
    LARGE_CAP_EQUITY = "large_cap_equity"
    SMALL_CAP_EQUITY = "small_cap_equity"
    SOVEREIGN_BOND = "sovereign_bond"
    CORPORATE_BOND = "corporate_bond"
    SOVEREIGN_BOND_DTS = "sovereign_bond_dts"


_BENCHMARKS = {
    BucketKind.LARGE_CAP_EQUITY: dict(
        beta_spread=1.25,
        beta_impact=0.40,
        gamma1=0.5,
        risk_measure=RiskMeasure.VOLATILITY,
        participation_basis=ParticipationBasis.VOLUME,
    ),
    BucketKind.SMALL_CAP_EQUITY: dict(
        beta_spread=1.40,
        beta_impact=0.50,
        gamma1=0.5,
        risk_measure=RiskMeasure.VOLATILITY,
        participation_basis=ParticipationBasis.VOLUME,
    ),
    BucketKind.SOVEREIGN_BOND: dict(
        beta_spread=1.25,
        beta_impact=3.00,
        gamma1=0.25,
        risk_measure=RiskMeasure.VOLATILITY,
        participation_basis=ParticipationBasis.OUTSTANDING,
    ),
    BucketKind.CORPORATE_BOND: dict(
        beta_spread=1.50,
        beta_impact=0.125,
        gamma1=0.25,
        risk_measure=RiskMeasure.DTS,
        participation_basis=ParticipationBasis.OUTSTANDING,
    ),
    BucketKind.SOVEREIGN_BOND_DTS: dict(
        beta_spread=1.25,
        beta_impact=0.10,
        gamma1=0.25,
        risk_measure=RiskMeasure.DTS,
        participation_basis=ParticipationBasis.OUTSTANDING,
    ),
}


def benchmark_bucket(
    kind: BucketKind | str,
    x_plus: float | None = None,
    x_tilde: float | None = None,
    gamma2: float | None = None,
) -> BucketParams:
    """Benchmark BucketParams for an asset class, with overridable regime geometry.

    Args:
        kind: one of the BucketKind members or its string value.
        x_plus: trading limit override. Defaults to 10% of daily volume for
            equity buckets and 300 bps of outstanding for bond buckets.
        x_tilde: inflection-point override. Defaults to two thirds of x_plus.
        gamma2: second-regime exponent override. Defaults to 1 (linear).

    Returns:
        A fully populated BucketParams.
    """
    if isinstance(kind, str):
        kind = BucketKind(kind)
    base = _BENCHMARKS[kind]
    if x_plus is None:
        if base["participation_basis"] is ParticipationBasis.VOLUME:
            x_plus = DEFAULT_X_PLUS_VOLUME
        else:
            x_plus = DEFAULT_X_PLUS_OUTSTANDING
    if x_tilde is None:
        x_tilde = DEFAULT_X_TILDE_FRACTION * x_plus
    if gamma2 is None:
        gamma2 = DEFAULT_GAMMA2
    return BucketParams(
        beta_spread=base["beta_spread"],
        beta_impact=base["beta_impact"],
        gamma1=base["gamma1"],
        gamma2=gamma2,
        x_tilde=x_tilde,
        x_plus=x_plus,
        risk_measure=base["risk_measure"],
        participation_basis=base["participation_basis"],
    )
