import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chaosmaps.maps import DomainError, MapKind, MapSpec, iterate
from chaosmaps.three_state import (
    Regime,
    SlopeSet,
    ThreeStateParams,
    change_cumulative,
    estimate_period,
    growth_indicator,
    symbolize,
    three_state_test,
    window_slopes,
)

PERIODS = [1, 2, 4, 5, 10, 25, 50]


def orbit(kind, r, n=5000):
    return iterate(MapSpec(kind, r), 0.01, n).values


def periodic_series(T, seed, n=5000):
    base = np.random.default_rng(seed).random(T)
    return np.tile(base, n // T + 1)[:n]


def quasi_periodic(n=5000):
    k = np.arange(n)
    return 0.5 + 0.25 * np.sin(2 * np.pi * k / math.sqrt(2) * 0.1) + 0.25 * np.sin(
        2 * np.pi * k * (math.sqrt(5) - 1) / 2 * 0.37
    )


def longest_run(a):
    best = run = 1
    for prev, cur in zip(a, a[1:]):
        run = run + 1 if cur == prev else 1
        best = max(best, run)
    return best


class TestSymbolize:
    def test_alternating(self):
        assert list(symbolize([0.2, 0.8, 0.2, 0.8])) == [1, -1, 1]

    def test_constant(self):
        assert not symbolize(np.full(10, 0.3), 1, 1e-12).any()

    def test_tolerance_maps_small_steps_to_zero(self):
        assert list(symbolize([0.5, 0.5 + 1e-13, 0.6], 1, 1e-12)) == [0, 1]

    def test_delay(self):
        assert list(symbolize([0.1, 0.5, 0.2, 0.4], 2)) == [1, -1]

    def test_chaotic_runs_are_short(self):
        s = symbolize(orbit(MapKind.LOGISTIC, 3.95))
        assert longest_run(list(s)) <= 50

    def test_too_short(self):
        with pytest.raises(DomainError):
            symbolize([0.1], 1)


class TestChangeCumulative:
    @pytest.mark.parametrize(
        "symbols, expected",
        [([1, -1, 1, -1], [1, 2, 3]), ([0, 0, 0, 0], [0, 0, 0]), ([1, 1, -1, -1, 1], [0, 1, 1, 2])],
    )
    def test_examples(self, symbols, expected):
        assert list(change_cumulative(symbols)) == expected

    def test_nondecreasing_unit_steps(self):
        c = change_cumulative(symbolize(orbit(MapKind.LOGISTIC_SINE, 3.3)))
        assert c[0] in (0, 1)
        assert set(np.diff(c)) <= {0, 1}


class TestWindowSlopes:
    def test_period_two(self):
        c = change_cumulative(symbolize(np.tile([0.2, 0.8], 600)))
        ss = window_slopes(c, 50, 20)
        np.testing.assert_array_equal(ss.slopes, np.ones(20))
        assert ss.sigma == 0.0 and ss.mean == 1.0

    def test_constant_counter(self):
        ss = window_slopes(np.zeros(1000, dtype=np.int64), 50, 10)
        assert not ss.slopes.any() and ss.sigma == 0.0

    def test_chaotic_spread(self):
        c = change_cumulative(symbolize(orbit(MapKind.LOGISTIC, 3.95)))
        assert window_slopes(c, 50, 99).sigma > 1e-9

    def test_mean_and_population_sigma(self):
        c = change_cumulative(symbolize(orbit(MapKind.LOGISTIC, 3.8)))
        ss = window_slopes(c, 50, 40)
        assert ss.mean == pytest.approx(np.mean(ss.slopes))
        assert ss.sigma == pytest.approx(math.sqrt(np.mean((ss.slopes - ss.mean) ** 2)))

    def test_slope_is_largest_half_window_rate(self):
        rng = np.random.default_rng(3)
        c = np.cumsum(rng.integers(0, 2, 300))
        ss = window_slopes(c, 30, 10)
        for j in range(10):
            w = c[j * 30:(j + 1) * 30]
            brute = max((w[i + 15] - w[i]) / 15 for i in range(15))
            assert ss.slopes[j] == brute

    def test_phase_invariant_for_short_periods(self):
        # period 4 does not divide 50, yet every window sees the same largest slope
        c = change_cumulative(symbolize(np.tile([0.1, 0.7, 0.3, 0.9, 0.2, 0.6, 0.4], 400)))
        assert window_slopes(c, 50, 50).sigma == 0.0

    def test_tiles_trailing_entries(self):
        c = np.concatenate([[0, 5, 9], np.arange(100)])
        ss = window_slopes(c, 10, 10)
        np.testing.assert_array_equal(ss.slopes, np.ones(10))

    def test_insufficient_data(self):
        with pytest.raises(DomainError):
            window_slopes(np.zeros(99, dtype=np.int64), 50, 2)


class TestGrowthIndicator:
    def test_examples(self):
        assert growth_indicator(0.0, 5000) == 0.0
        assert growth_indicator(4999.0, 5000) == pytest.approx(1.0)
        assert growth_indicator(0.30, 5000) == pytest.approx(0.0308, abs=5e-5)

    def test_accepts_slope_set(self):
        ss = SlopeSet(slopes=np.array([1.0, 1.6]), mean=1.3, sigma=0.3)
        assert growth_indicator(ss, 5000) == growth_indicator(0.3, 5000)


class TestEstimatePeriod:
    def test_alternating(self):
        assert estimate_period(np.tile([1, -1], 100), 50) == 2

    def test_constant(self):
        assert estimate_period(np.zeros(100, dtype=np.int8), 20) == 1

    def test_chaotic(self):
        assert estimate_period(symbolize(orbit(MapKind.LOGISTIC, 3.95)), 200) is None

    def test_ignores_leading_transient(self):
        s = np.concatenate([[1, 1, 1, 0, -1], np.tile([1, -1, -1], 100)])
        assert estimate_period(s, 50) == 3

    def test_max_period_bound(self):
        with pytest.raises(DomainError):
            estimate_period(np.zeros(10), 5)


class TestThreeStateTest:
    def test_logistic_period_two_band(self):
        res = three_state_test(orbit(MapKind.LOGISTIC, 3.15))
        assert res.regime is Regime.PERIODIC and res.period == 2

    def test_logistic_chaotic_band(self):
        assert three_state_test(orbit(MapKind.LOGISTIC, 3.75)).regime is Regime.CHAOTIC

    def test_lts_chaotic(self):
        assert three_state_test(orbit(MapKind.LOGISTIC_TENT, 3.65)).regime is Regime.CHAOTIC

    def test_period_four_synthetic(self):
        res = three_state_test(np.tile([0.1, 0.2, 0.3, 0.4], 1250))
        assert res.regime is Regime.PERIODIC
        assert res.period == 4
        assert res.slope_set.sigma == 0.0

    def test_quasi_periodic_synthetic(self):
        res = three_state_test(quasi_periodic())
        assert res.regime is Regime.QUASI_PERIODIC
        assert res.period is None

    def test_mu_matches_sigma(self):
        res = three_state_test(orbit(MapKind.LOGISTIC_SINE, 3.5))
        assert res.mu == pytest.approx(math.log(1 + res.slope_set.sigma) / math.log(5000), rel=1e-14)
        assert res.K == res.mu
        assert res.mu_by_scale[0] == res.mu
        assert len(res.mu_by_scale) == len(res.params.growth_scales)

    def test_base_scale_windows(self):
        res = three_state_test(orbit(MapKind.LOGISTIC, 3.95))
        # the change counter holds N - delay - 1 = 4998 values: 99 full windows of 50
        assert res.windows_used == 99
        assert len(res.slope_set.slopes) == 99

    def test_too_short(self):
        with pytest.raises(DomainError):
            three_state_test(np.zeros(4999))

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(PERIODS), st.integers(0, 10_000))
    def test_exact_periodicity_null(self, T, seed):
        res = three_state_test(periodic_series(T, seed))
        assert res.slope_set.sigma == 0.0
        assert res.mu == 0.0 and res.K == 0.0
        assert res.regime is Regime.PERIODIC
        assert res.period == T

    @pytest.mark.parametrize("kind, r", [(MapKind.LOGISTIC, 3.95), (MapKind.TENT_SINE, 3.3), (MapKind.LOGISTIC, 3.15)])
    def test_sign_flip_invariance(self, kind, r):
        x = orbit(kind, r)
        assert three_state_test(x).mu == three_state_test(1.0 - x).mu

    @pytest.mark.parametrize("kind, r", [(MapKind.LOGISTIC, 3.95), (MapKind.LOGISTIC_SINE, 3.6)])
    def test_monotone_transform_invariance(self, kind, r):
        x = orbit(kind, r)
        assert three_state_test(x).slope_set.sigma == three_state_test(x**3).slope_set.sigma


class TestParams:
    def test_default_scales_follow_window(self):
        assert ThreeStateParams(window=25).growth_scales == (25, 50, 100)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(window=1),
            dict(subsets=0),
            dict(delay=0),
            dict(eps_equal=-1.0),
            dict(sigma_zero_tol=0.0),
            dict(growth_scales=(40, 100)),
            dict(growth_scales=(50, 50, 100)),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(DomainError):
            ThreeStateParams(**kwargs)
