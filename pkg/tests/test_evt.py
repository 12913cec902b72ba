import math

import numpy as np
import pytest
from scipy import stats

from liqstress.evt import (
    AggregationMode,
    ConvergenceError,
    FactorKind,
    FactorSample,
    GevParams,
    GpdParams,
    block_maxima,
    conditional_stress,
    cross_section_aggregate,
    cross_sectional_median,
    fit_gev,
    fit_gpd,
    gev_cdf,
    gev_quantile,
    gev_stress,
    gpd_stress,
    gpd_tail_cdf,
    historical_stress,
    make_factor_sample,
    mean_residual_life,
    moving_average_filter,
    suggest_threshold,
    years_to_days,
)


def test_block_maxima_drops_partial_block():
    series = [1.0, 5.0, 3.0, 2.0, 8.0, 1.0, 9.0]
    assert block_maxima(series, 3).tolist() == [5.0, 8.0]


def test_block_maxima_requires_one_full_block():
    with pytest.raises(ValueError):
        block_maxima([1.0, 2.0], 3)


def test_fit_gev_recovers_synthetic_parameters():
    true = GevParams(mu=1.10, sigma=0.10, xi=0.25)
    rng = np.random.default_rng(42)
    sample = stats.genextreme.rvs(
        -true.xi, loc=true.mu, scale=true.sigma, size=4000, random_state=rng
    )
    fitted = fit_gev(sample)
    assert fitted.mu == pytest.approx(true.mu, abs=0.01)
    assert fitted.sigma == pytest.approx(true.sigma, abs=0.01)
    assert fitted.xi == pytest.approx(true.xi, abs=0.05)


def test_fit_gev_rejects_degenerate_sample():
    with pytest.raises(ValueError):
        fit_gev([1.0] * 50)


def test_fit_gev_minimum_sample_size():
    with pytest.raises(ValueError):
        fit_gev([1.0, 2.0, 3.0])


def test_gev_quantile_cdf_inverse():
    params = GevParams(mu=1.157, sigma=0.101, xi=0.229)
    for alpha in (0.5, 0.9, 0.99):
        assert gev_cdf(params, gev_quantile(params, alpha)) == pytest.approx(
            alpha, abs=1e-12
        )


def test_gev_stress_reference_values():
    params = GevParams(mu=1.157, sigma=0.101, xi=0.229)
    assert gev_stress(params, 21, 260.0).value == pytest.approx(1.493, abs=5e-4)
    assert gev_stress(params, 21, 520.0).value == pytest.approx(1.631, abs=5e-4)
    assert gev_stress(params, 21, 1300.0).value == pytest.approx(1.848, abs=5e-4)


def test_gev_stress_gumbel_limit_is_continuous():
    near_zero = gev_stress(GevParams(1.0, 0.1, 1e-9), 21, 260.0).value
    at_zero = gev_stress(GevParams(1.0, 0.1, 0.0), 21, 260.0).value
    assert near_zero == pytest.approx(at_zero, rel=1e-6)


def test_gev_stress_needs_return_time_beyond_block():
    with pytest.raises(ValueError):
        gev_stress(GevParams(1.0, 0.1, 0.2), 21, 21.0)


def test_fit_gpd_recovers_synthetic_parameters():
    rng = np.random.default_rng(11)
    excess = stats.genpareto.rvs(0.2, scale=0.5, size=3000, random_state=rng)
    series = np.concatenate([np.full(7000, 0.5), 1.0 + excess])
    params = fit_gpd(series, 1.0)
    assert params.n == 10_000
    assert params.n_exceed == 3000
    assert params.sigma == pytest.approx(0.5, abs=0.03)
    assert params.xi == pytest.approx(0.2, abs=0.05)


def test_fit_gpd_requires_enough_exceedances():
    with pytest.raises(ValueError):
        fit_gpd(np.linspace(0.0, 1.0, 100), 0.995)


def test_gpd_stress_inverse_identity():
    params = GpdParams(u0=1.0, sigma=0.5, xi=0.2, n=10_000, n_exceed=500)
    for t in (260.0, 1300.0, 13_000.0):
        stress = gpd_stress(params, t)
        assert gpd_tail_cdf(params, stress.value) == pytest.approx(
            1.0 - 1.0 / t, abs=1e-12
        )


def test_gpd_stress_xi_zero_branch():
    params = GpdParams(u0=1.0, sigma=0.5, xi=0.0, n=1000, n_exceed=100)
    got = gpd_stress(params, 260.0).value
    want = 1.0 + 0.5 * math.log(100 / 1000 * 260.0)
    assert got == pytest.approx(want, rel=1e-12)


def test_gpd_stress_rejects_return_time_inside_sample_body():
    params = GpdParams(u0=1.0, sigma=0.5, xi=0.2, n=1000, n_exceed=100)
    with pytest.raises(ValueError):
        gpd_stress(params, 5.0)


def test_mean_residual_life_flat_for_exponential():
    rng = np.random.default_rng(3)
    series = rng.exponential(2.0, 200_000)
    points = mean_residual_life(series, grid=[1.0, 2.0, 3.0])
    for _, mean_excess in points:
        assert mean_excess == pytest.approx(2.0, rel=0.05)


def test_suggest_threshold_on_linear_tail():
    points = [(u, 1.0 + 0.5 * u) for u in np.linspace(0.0, 3.0, 30)]
    assert suggest_threshold(points) == pytest.approx(0.0)
    noisy = [(u, math.sin(10 * u)) for u in np.linspace(0.0, 3.0, 30)]
    assert suggest_threshold(noisy, r2_min=0.9999) is None


def test_make_factor_sample_multiplicative():
    sample = make_factor_sample([100.0, 110.0, 121.0], 1, FactorKind.MULT)
    assert sample.values == pytest.approx([1.1, 1.1])
    two_day = make_factor_sample([100.0, 110.0, 121.0], 2, FactorKind.MULT)
    assert two_day.values == pytest.approx([1.21])


def test_make_factor_sample_additive_and_reductive():
    sample = make_factor_sample([10.0, 12.0, 11.0], 1, FactorKind.ADD)
    assert sample.values == pytest.approx([2.0, -1.0])
    reduced = make_factor_sample([100.0, 80.0], 1, FactorKind.MULT, reductive=True)
    assert reduced.values == pytest.approx([1.25])
    with pytest.raises(ValueError):
        make_factor_sample([10.0, 12.0], 1, FactorKind.ADD, reductive=True)


def test_make_factor_sample_rejects_nonpositive_for_ratios():
    with pytest.raises(ValueError):
        make_factor_sample([1.0, -2.0, 3.0], 1, FactorKind.MULT)


def test_cross_section_aggregate_pooling_and_averaging():
    a = make_factor_sample([1.0, 2.0, 4.0], 1, FactorKind.MULT)
    b = make_factor_sample([1.0, 3.0, 3.0], 1, FactorKind.MULT)
    pooled = cross_section_aggregate([a, b], AggregationMode.POOLING)
    assert pooled.values.size == 4
    averaged = cross_section_aggregate([a, b], AggregationMode.AVERAGING)
    assert averaged.values == pytest.approx([2.5, 1.5])


def test_cross_section_aggregate_rejects_mixed_kinds():
    a = make_factor_sample([1.0, 2.0], 1, FactorKind.MULT)
    b = make_factor_sample([1.0, 2.0], 1, FactorKind.ADD)
    with pytest.raises(ValueError):
        cross_section_aggregate([a, b], AggregationMode.POOLING)


def test_historical_stress_matches_quantile():
    rng = np.random.default_rng(9)
    sample = FactorSample(rng.uniform(1.0, 2.0, 500), 1, FactorKind.MULT)
    result = historical_stress(sample, 50.0)
    assert result is not None
    assert result.value == pytest.approx(np.quantile(sample.values, 1 - 1 / 50))
    assert result.return_time == 50.0


def test_historical_stress_blank_when_unresolvable():
    sample = FactorSample(np.linspace(1.0, 2.0, 100), 1, FactorKind.MULT)
    assert historical_stress(sample, 101.0) is None
    assert historical_stress(sample, 100.0) is not None


def test_historical_stress_rejects_return_inside_horizon():
    sample = FactorSample(np.ones(10), 5, FactorKind.MULT)
    with pytest.raises(ValueError):
        historical_stress(sample, 5.0)


def test_years_to_days():
    assert years_to_days(2.0) == 520.0


def test_conditional_stress_recovers_linear_model():
    rng = np.random.default_rng(21)
    factors = rng.normal(size=(60, 2))
    y = 0.5 + factors @ np.array([2.0, -1.0])
    fit = conditional_stress(y, factors, [1.0, 1.0])
    assert fit.coefficients == pytest.approx([0.5, 2.0, -1.0], abs=1e-10)
    assert fit.value == pytest.approx(1.5, abs=1e-10)


def test_conditional_stress_rank_check():
    factors = np.ones((30, 2))
    with pytest.raises(ValueError, match="rank"):
        conditional_stress(np.arange(30.0), factors, [1.0, 1.0])


def test_moving_average_filter_trailing_window():
    smoothed = moving_average_filter([1.0, 2.0, 3.0, 4.0], window=2)
    assert smoothed == pytest.approx([1.5, 2.5, 3.5])


def test_cross_sectional_median():
    panel = [[1.0, 5.0], [2.0, 7.0], [9.0, 6.0]]
    assert cross_sectional_median(panel) == pytest.approx([2.0, 6.0])


def test_convergence_error_is_runtime_error():
    assert issubclass(ConvergenceError, RuntimeError)
