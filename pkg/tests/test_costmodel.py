import math

import pytest

from liqstress.costmodel import (
    BucketKind,
    BucketParams,
    MissingFieldError,
    ParticipationBasis,
    ProhibitiveTradeError,
    RiskMeasure,
    SecurityLiquidityProfile,
    Shock,
    StressScenario,
    TwoRegimeImpactParams,
    UnitCost,
    apply_stress,
    benchmark_bucket,
    daily_vol,
    dts_volatility,
    historical_stress_cost,
    implied_beta,
    implied_turnover,
    participation_kernel,
    phi_for_linear_exponent,
    power_impact,
    sqrl_impact,
    toy_cost_double_prime,
    toy_cost_prime,
    two_regime_impact,
    unit_cost,
    unit_cost_at_participation,
    x_from_y,
    y_from_x,
)

SQ260 = math.sqrt(260.0)


def make_profile(**overrides):
    base = dict(
        security_id="TEST",
        price=100.0,
        half_spread=4e-4,
        annual_vol=0.20,
        daily_volume=1_000_000.0,
    )
    base.update(overrides)
    return SecurityLiquidityProfile(**base)


def test_unit_cost_sentinel_round_trip():
    finite = UnitCost(3e-4)
    assert not finite.is_prohibitive
    assert finite.value == pytest.approx(3e-4)
    blocked = UnitCost.prohibitive()
    assert blocked.is_prohibitive
    with pytest.raises(ProhibitiveTradeError):
        blocked.value
    assert blocked.value_or(math.inf) == math.inf
    assert UnitCost(3e-4) == finite
    assert UnitCost.prohibitive() == blocked
    assert hash(UnitCost(3e-4)) == hash(finite)


def test_unit_cost_rejects_negative():
    with pytest.raises(ValueError):
        UnitCost(-1e-5)


def test_daily_vol_scaling():
    assert daily_vol(0.20) == pytest.approx(0.20 / SQ260)


def test_power_impact_square_root():
    sd = 0.20 / SQ260
    assert power_impact(0.04, 0.5, 1.0, sd) == pytest.approx(sd * 0.2)
    assert power_impact(0.0, 0.5, 1.0, sd) == 0.0
    assert power_impact(0.0, 0.0, 1.0, sd) == 0.0


def test_phi_for_linear_exponent():
    assert phi_for_linear_exponent(0.01) == pytest.approx(10.0)
    assert phi_for_linear_exponent(0.04, phi_sqrt=2.0) == pytest.approx(10.0)


def test_two_regime_continuous_at_knee():
    p = TwoRegimeImpactParams(phi1=1.0, gamma1=0.5, gamma2=1.0, x_tilde=0.05, x_plus=0.10)
    sd = 0.20 / SQ260
    left = two_regime_impact(0.05, p, sd).value
    right = two_regime_impact(0.05 + 1e-13, p, sd).value
    assert left == pytest.approx(right, rel=1e-9)
    assert p.phi2 == pytest.approx(1.0 / math.sqrt(0.05))


def test_two_regime_prohibitive_beyond_limit():
    p = TwoRegimeImpactParams(phi1=1.0, gamma1=0.5, gamma2=1.0, x_tilde=0.05, x_plus=0.10)
    assert two_regime_impact(0.10, p, 0.01).is_prohibitive is False
    assert two_regime_impact(0.11, p, 0.01).is_prohibitive is True


def test_sqrl_without_limit_extends_linear_branch():
    sd = 0.20 / SQ260
    open_ended = sqrl_impact(0.30, 1.0, 0.01, None, sd)
    assert open_ended.value == pytest.approx(sd * 0.30 / math.sqrt(0.01))
    capped = sqrl_impact(0.30, 1.0, 0.01, 0.10, sd)
    assert capped.is_prohibitive


def test_participation_kernel_regimes():
    assert participation_kernel(0.04, 0.5, 1.0, 0.05, 0.10) == pytest.approx(0.2)
    knee = participation_kernel(0.05, 0.5, 1.0, 0.05, 0.10)
    above = participation_kernel(0.08, 0.5, 1.0, 0.05, 0.10)
    assert above == pytest.approx(0.08 / math.sqrt(0.05))
    assert knee == pytest.approx(math.sqrt(0.05))
    assert participation_kernel(0.11, 0.5, 1.0, 0.05, 0.10) is None


def test_toy_cost_prime_flat_then_linear():
    assert toy_cost_prime(0.01, 2e-4, 0.02, 0.02, 0.08).value == pytest.approx(2e-4)
    assert toy_cost_prime(0.08, 2e-4, 0.02, 0.02, 0.08).value == pytest.approx(14e-4)
    assert toy_cost_prime(0.081, 2e-4, 0.02, 0.02, 0.08).is_prohibitive


def test_toy_cost_double_prime_affine():
    assert toy_cost_double_prime(0.04, 1e-4, 0.015, 0.08).value == pytest.approx(7e-4)
    assert toy_cost_double_prime(0.09, 1e-4, 0.015, 0.08).is_prohibitive


def test_benchmark_bucket_large_cap_defaults():
    b = benchmark_bucket(BucketKind.LARGE_CAP_EQUITY)
    assert b.beta_spread == 1.25
    assert b.beta_impact == 0.40
    assert b.gamma1 == 0.5
    assert b.gamma2 == 1.0
    assert b.x_plus == 0.10
    assert b.x_tilde == pytest.approx(2.0 / 30.0)
    assert b.risk_measure is RiskMeasure.VOLATILITY
    assert b.participation_basis is ParticipationBasis.VOLUME


def test_benchmark_bucket_bond_kinds():
    sov = benchmark_bucket("sovereign_bond")
    assert (sov.beta_spread, sov.beta_impact, sov.gamma1) == (1.25, 3.00, 0.25)
    assert sov.risk_measure is RiskMeasure.VOLATILITY
    assert sov.participation_basis is ParticipationBasis.OUTSTANDING
    assert sov.x_plus == 0.03
    corp = benchmark_bucket("corporate_bond")
    assert (corp.beta_spread, corp.beta_impact, corp.gamma1) == (1.50, 0.125, 0.25)
    assert corp.risk_measure is RiskMeasure.DTS
    sov_dts = benchmark_bucket("sovereign_bond_dts")
    assert (sov_dts.beta_spread, sov_dts.beta_impact, sov_dts.gamma1) == (1.25, 0.10, 0.25)
    small = benchmark_bucket("small_cap_equity")
    assert (small.beta_spread, small.beta_impact) == (1.40, 0.50)


def test_benchmark_bucket_overrides():
    b = benchmark_bucket("large_cap_equity", x_plus=0.30)
    assert b.x_plus == 0.30
    assert b.x_tilde == pytest.approx(0.20)


def test_unit_cost_matches_hand_formula():
    profile = make_profile()
    bucket = benchmark_bucket("large_cap_equity")
    got = unit_cost_at_participation(0.01, profile, bucket).value
    want = 1.25 * 4e-4 + 0.40 * (0.20 / SQ260) * math.sqrt(0.01)
    assert got == pytest.approx(want, rel=1e-12)


def test_unit_cost_share_and_participation_agree():
    profile = make_profile()
    bucket = benchmark_bucket("large_cap_equity")
    by_shares = unit_cost(25_000, profile, bucket).value
    by_x = unit_cost_at_participation(0.025, profile, bucket).value
    assert by_shares == pytest.approx(by_x, rel=1e-12)


def test_unit_cost_zero_quantity_is_spread_only():
    profile = make_profile()
    bucket = benchmark_bucket("large_cap_equity")
    assert unit_cost(0, profile, bucket).value == pytest.approx(1.25 * 4e-4)


def test_unit_cost_outstanding_basis_and_dts():
    profile = make_profile(outstanding=5_000_000.0, dts=0.02)
    bucket = benchmark_bucket("corporate_bond")
    got = unit_cost(50_000, profile, bucket).value
    y = 50_000 / 5_000_000
    want = 1.50 * 4e-4 + 0.125 * 0.02 * y**0.25
    assert got == pytest.approx(want, rel=1e-12)


def test_unit_cost_missing_data_raises():
    bucket = benchmark_bucket("corporate_bond")
    with pytest.raises(MissingFieldError):
        unit_cost(1_000, make_profile(outstanding=5e6), bucket)
    with pytest.raises(MissingFieldError):
        unit_cost(1_000, make_profile(dts=0.02), bucket)
    with pytest.raises(MissingFieldError):
        unit_cost(1_000, make_profile(daily_volume=0.0), benchmark_bucket("large_cap_equity"))


def test_stress_scenario_application():
    profile = make_profile()
    scenario = StressScenario(
        spread=Shock.add(8e-4), vol=Shock.add(0.20), volume=Shock.mult(0.75)
    )
    stressed = apply_stress(profile, scenario)
    assert stressed.half_spread == pytest.approx(12e-4)
    assert stressed.annual_vol == pytest.approx(0.40)
    assert stressed.daily_volume == pytest.approx(750_000.0)
    assert apply_stress(profile, StressScenario.identity()) == profile


def test_stress_scenario_of_shortcut():
    scenario = StressScenario.of(spread_mult=1.5, vol_mult=2.0, volume_mult=0.5)
    profile = apply_stress(make_profile(), scenario)
    assert profile.half_spread == pytest.approx(6e-4)
    assert profile.annual_vol == pytest.approx(0.40)
    assert profile.daily_volume == pytest.approx(500_000.0)


def test_volume_shock_must_be_multiplicative():
    with pytest.raises(ValueError):
        StressScenario(spread=Shock.none(), vol=Shock.none(), volume=Shock.add(100.0))


def test_stress_cannot_produce_negative_spread():
    with pytest.raises(ValueError):
        apply_stress(make_profile(), StressScenario.of(spread_add=-5e-4))


def test_historical_stress_cost_orders_sup_and_worst_case():
    bucket = benchmark_bucket("large_cap_equity")
    history = [
        make_profile(half_spread=4e-4, annual_vol=0.15, daily_volume=1_500_000.0),
        make_profile(half_spread=9e-4, annual_vol=0.10, daily_volume=900_000.0),
        make_profile(half_spread=5e-4, annual_vol=0.30, daily_volume=1_200_000.0),
    ]
    sup, worst = historical_stress_cost(30_000, history, bucket)
    per_day = [unit_cost(30_000, p, bucket).value for p in history]
    assert sup.value == pytest.approx(max(per_day))
    assert worst.value >= sup.value


def test_participation_conversion_and_roundtrip():
    assert y_from_x(0.30, 0.04) == pytest.approx(0.012, rel=1e-12)
    assert x_from_y(0.012, 0.04) == pytest.approx(0.30, rel=1e-12)
    beta = implied_beta(0.05, 2.0, 0.25)
    assert implied_turnover(beta, 2.0, 0.25) == pytest.approx(0.05, rel=1e-12)


def test_implied_turnover_published_style_inputs():
    assert implied_turnover(0.80, 2.1521, 0.2037) == pytest.approx(0.0077655, abs=2e-7)


def test_dts_volatility_product():
    assert dts_volatility(0.01, 5.0, 0.02) == pytest.approx(0.001, rel=1e-12)


def test_bucket_params_validation():
    with pytest.raises(ValueError):
        BucketParams(
            beta_spread=1.0, beta_impact=1.0, gamma1=0.5, gamma2=1.0,
            x_tilde=0.2, x_plus=0.1,
        )
    with pytest.raises(ValueError):
        BucketParams(
            beta_spread=1.0, beta_impact=1.0, gamma1=-0.5, gamma2=1.0,
            x_tilde=0.05, x_plus=0.1,
        )
