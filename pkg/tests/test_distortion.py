import math

import numpy as np
import pytest

from liqstress.costmodel import SecurityLiquidityProfile, benchmark_bucket
from liqstress.distortion import (
    active_risk_bond,
    assemble_covariance,
    current_weights,
    frontier,
    optimal_liquidation,
    portfolio_value,
    shares_from_weights,
    tracking_error,
    validate_covariance,
    weight_bounds,
    weights_after,
)
from liqstress.liquidation import Portfolio

HOLDINGS = np.array([10.0, 20.0])
PRICES = np.array([2.0, 3.0])


def test_portfolio_value():
    assert portfolio_value(HOLDINGS, PRICES) == 80.0


def test_current_weights():
    w = current_weights(HOLDINGS, PRICES)
    assert w == pytest.approx([0.25, 0.75])
    assert w.sum() == pytest.approx(1.0)


def test_current_weights_rejects_worthless_portfolio():
    with pytest.raises(ValueError, match="must be > 0"):
        current_weights([0.0, 0.0], PRICES)


def test_weights_after_partial_sale():
    w = weights_after(HOLDINGS, [4.0, 0.0], PRICES)
    assert w == pytest.approx([1.0 / 6.0, 5.0 / 6.0])


def test_weights_after_pro_rata_is_neutral():
    w0 = current_weights(HOLDINGS, PRICES)
    w1 = weights_after(HOLDINGS, 0.3 * HOLDINGS, PRICES)
    assert w1 == pytest.approx(w0, abs=1e-15)


def test_weights_after_rejects_full_liquidation():
    with pytest.raises(ValueError, match="full liquidation"):
        weights_after(HOLDINGS, HOLDINGS, PRICES)


def test_shares_from_weights_inverts_weights_after():
    holdings = np.array([100.0, 50.0])
    prices = np.array([10.0, 4.0])
    q = np.array([30.0, 10.0])
    redemption = float(q @ prices)
    target = weights_after(holdings, q, prices)
    recovered = shares_from_weights(target, holdings, redemption, prices)
    assert isinstance(recovered, np.ndarray)
    assert recovered == pytest.approx(q, abs=1e-10)


def test_shares_from_weights_hits_redemption_value():
    holdings = np.array([100.0, 50.0, 25.0])
    prices = np.array([10.0, 4.0, 8.0])
    target = np.array([0.2, 0.5, 0.3])
    q = shares_from_weights(target, holdings, 200.0, prices)
    assert float(q @ prices) == pytest.approx(200.0)


def test_weight_bounds_two_asset():
    lower, upper = weight_bounds(HOLDINGS, 30.0, PRICES, epsilon=0.5)
    # remaining value 50; eps_i = 0.5 * p_i / 50
    assert lower == pytest.approx([-0.02, -0.03])
    assert upper == pytest.approx([0.42, 1.0])


def test_weight_bounds_rejects_oversized_redemption():
    with pytest.raises(ValueError, match="smaller than the portfolio value"):
        weight_bounds(HOLDINGS, 80.0, PRICES)


def test_validate_covariance_accepts_psd():
    cov = np.array([[0.04, 0.01], [0.01, 0.09]])
    out = validate_covariance(cov)
    assert np.array_equal(out, cov)


def test_validate_covariance_rejects_non_square():
    with pytest.raises(ValueError, match="square"):
        validate_covariance(np.ones((2, 3)))


def test_validate_covariance_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        validate_covariance(np.array([[1.0, 0.2], [0.3, 1.0]]))


def test_validate_covariance_rejects_indefinite():
    with pytest.raises(ValueError, match="negative eigenvalue"):
        validate_covariance(np.array([[1.0, 0.0], [0.0, -0.5]]))


def test_assemble_covariance():
    cov = assemble_covariance([0.1, 0.2], [[1.0, 0.5], [0.5, 1.0]])
    np.testing.assert_allclose(cov, [[0.01, 0.01], [0.01, 0.04]])


def test_tracking_error_two_asset():
    holdings = [100.0, 100.0]
    prices = [1.0, 1.0]
    cov = np.diag([0.04, 0.09])
    # selling 40 of the first asset moves both weights by 0.125
    te = tracking_error(holdings, [40.0, 0.0], cov, prices)
    assert te == pytest.approx(0.125 * math.sqrt(0.13))


def test_tracking_error_pro_rata_is_zero():
    holdings = np.array([120.0, 80.0, 55.0])
    prices = np.array([3.0, 7.0, 2.0])
    cov = assemble_covariance(
        [0.2, 0.3, 0.25],
        [[1.0, 0.4, 0.1], [0.4, 1.0, 0.2], [0.1, 0.2, 1.0]],
    )
    te = tracking_error(holdings, 0.25 * holdings, cov, prices)
    assert te == pytest.approx(0.0, abs=1e-12)


def test_tracking_error_shape_mismatch():
    with pytest.raises(ValueError, match="does not match"):
        tracking_error([100.0, 100.0], [10.0, 10.0], np.eye(3), [1.0, 1.0])


def test_active_risk_bond_single_sector_nets_exposure():
    holdings = [100.0, 100.0]
    prices = [1.0, 1.0]
    risk = active_risk_bond(
        holdings, [40.0, 0.0], ["IG", "IG"], [5.0, 2.0], [0.03, 0.01], prices
    )
    # delta = (+0.125, -0.125): netted duration 0.375, netted DTS 0.0025
    assert risk == pytest.approx(0.5 * 0.375**2 + 0.5 * 0.0025**2)


def test_active_risk_bond_sector_split_does_not_net():
    holdings = [100.0, 100.0]
    prices = [1.0, 1.0]
    risk = active_risk_bond(
        holdings, [40.0, 0.0], ["A", "B"], [5.0, 2.0], [0.03, 0.01], prices
    )
    assert risk == pytest.approx(0.2265703125)


def test_active_risk_bond_requires_sectors():
    with pytest.raises(ValueError, match="has no sector"):
        active_risk_bond(
            [100.0, 100.0], [40.0, 0.0], ["IG", ""], [5.0, 2.0], [0.03, 0.01],
            [1.0, 1.0],
        )
    with pytest.raises(ValueError, match="must cover every bond"):
        active_risk_bond(
            [100.0, 100.0], [40.0, 0.0], ["IG"], [5.0, 2.0], [0.03, 0.01],
            [1.0, 1.0],
        )


def _two_asset_problem():
    portfolio = Portfolio.of([("A", 1000), ("B", 1000)])
    profiles = {
        "A": SecurityLiquidityProfile("A", 10.0, 2e-4, 0.20, 1_000_000.0),
        "B": SecurityLiquidityProfile("B", 10.0, 2e-4, 0.30, 10_000.0),
    }
    cov = np.diag([0.04, 0.09])
    return portfolio, profiles, cov, benchmark_bucket("large_cap_equity")


def test_optimal_liquidation_lambda_zero_is_pro_rata():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    point = optimal_liquidation(portfolio, 2000.0, cov, profiles, bucket, lam=0.0)
    assert point.scenario.quantities == (("A", 100), ("B", 100))
    assert point.tracking_error == pytest.approx(0.0, abs=1e-12)
    # equal-notional average of 3.00 bps (liquid) and 9.94 bps (thin) legs
    assert point.cost == pytest.approx(6.46911e-4, rel=1e-4)


def test_optimal_liquidation_high_lambda_prefers_liquid_asset():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    point = optimal_liquidation(portfolio, 2000.0, cov, profiles, bucket, lam=50.0)
    q = dict(point.scenario.quantities)
    assert q["A"] >= 190
    assert q["A"] + q["B"] == 200
    assert point.tracking_error > 0.0


def test_optimal_liquidation_is_deterministic():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    a = optimal_liquidation(portfolio, 2000.0, cov, profiles, bucket, lam=0.5, seed=3)
    b = optimal_liquidation(portfolio, 2000.0, cov, profiles, bucket, lam=0.5, seed=3)
    assert a.scenario == b.scenario
    assert a.cost == b.cost
    assert a.tracking_error == b.tracking_error


def test_optimal_liquidation_validation():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    with pytest.raises(ValueError, match="lambda must be >= 0"):
        optimal_liquidation(portfolio, 2000.0, cov, profiles, bucket, lam=-1.0)
    with pytest.raises(ValueError, match="strictly between"):
        optimal_liquidation(portfolio, 0.0, cov, profiles, bucket, lam=1.0)
    with pytest.raises(ValueError, match="strictly between"):
        optimal_liquidation(portfolio, 20_000.0, cov, profiles, bucket, lam=1.0)


def test_frontier_is_monotone_in_lambda():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    points = frontier(
        portfolio, 2000.0, cov, profiles, bucket, [0.0, 0.5, 5.0, 50.0]
    )
    assert [p.lam for p in points] == [0.0, 0.5, 5.0, 50.0]
    costs = [p.cost for p in points]
    tes = [p.tracking_error for p in points]
    for lo, hi in zip(costs[1:], costs[:-1]):
        assert lo <= hi + 1e-9
    for lo, hi in zip(tes[:-1], tes[1:]):
        assert lo <= hi + 1e-9
    assert not any(p.dominated for p in points)


def test_frontier_duplicate_lambdas_reuse_solution():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    points = frontier(portfolio, 2000.0, cov, profiles, bucket, [0.5, 0.5])
    assert points[0].scenario == points[1].scenario
    assert points[0].cost == points[1].cost


def test_frontier_rejects_empty_grid():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    with pytest.raises(ValueError, match="nonempty"):
        frontier(portfolio, 2000.0, cov, profiles, bucket, [])


def test_frontier_dominated_flag_matches_definition():
    portfolio, profiles, cov, bucket = _two_asset_problem()
    points = frontier(
        portfolio, 2000.0, cov, profiles, bucket, [0.0, 0.25, 1.0, 10.0]
    )
    for p in points:
        expected = any(
            (r.cost <= p.cost and r.tracking_error <= p.tracking_error)
            and (r.cost < p.cost or r.tracking_error < p.tracking_error)
            for r in points
        )
        assert p.dominated == expected
