import numpy as np
import pytest
from hypothesis import given, strategies as st

from chaosmaps.maps import DomainError, MapKind
from chaosmaps.reference import BAND_MIDPOINTS, compare_regimes
from chaosmaps.sweep import Grade, Region, SweepConfig, merge_regions, run_sweep, strong_weak_grading
from chaosmaps.three_state import Regime, ThreeStateParams
from chaosmaps.zero_one import ZeroOneParams


def brute_force_merge(rs, regimes):
    spans = []
    for r, g in zip(rs, regimes):
        if spans and spans[-1][2] == g:
            spans[-1][1] = r
        else:
            spans.append([r, r, g])
    return [Region(lo, hi, g) for lo, hi, g in spans]


def test_single_cell_reference():
    report = run_sweep(SweepConfig(MapKind.LOGISTIC, 3.15, 3.15, 0.1, run_lyapunov=False))
    (cell,) = report.cells
    assert abs(cell.K01 - 0.0482) <= 0.10
    assert cell.regime3st is Regime.PERIODIC
    assert report.regions == (Region(3.15, 3.15, Regime.PERIODIC),)


def test_chaotic_band_merges():
    config = SweepConfig(MapKind.LOGISTIC, 3.7, 3.79, 0.045, run_lyapunov=False)
    report = run_sweep(config)
    assert [c.r for c in report.cells] == [3.7, 3.745, 3.79]
    assert report.regions == (Region(3.7, 3.79, Regime.CHAOTIC),)


@pytest.mark.parametrize("kind", list(MapKind))
def test_single_point_grid_gives_one_region(kind):
    report = run_sweep(SweepConfig(kind, 3.5, 3.5, 0.1, run_lyapunov=False))
    assert len(report.regions) == 1
    assert report.regions[0].r_lo == report.regions[0].r_hi == 3.5


@given(st.lists(st.sampled_from(list(Regime)), min_size=1, max_size=40))
def test_merge_matches_brute_force(regimes):
    rs = [round(3.1 + 0.01 * i, 12) for i in range(len(regimes))]
    merged = merge_regions(rs, regimes)
    assert list(merged) == brute_force_merge(rs, regimes)
    assert all(a.regime != b.regime for a, b in zip(merged, merged[1:]))
    covered = [r for g in merged for r in rs if g.r_lo <= r <= g.r_hi]
    assert covered == rs


def test_merge_length_mismatch():
    with pytest.raises(DomainError):
        merge_regions([3.1, 3.2], [Regime.CHAOTIC])


def test_grid_is_index_based():
    config = SweepConfig(MapKind.LOGISTIC, 3.1, 3.9, 0.1, run_lyapunov=False)
    grid = config.grid()
    assert len(grid) == 9
    assert list(grid) == [round(3.1 + 0.1 * i, 12) for i in range(9)]


def test_default_grid_is_band_midpoints():
    assert tuple(SweepConfig(MapKind.LOGISTIC).grid()) == BAND_MIDPOINTS


@pytest.mark.parametrize("K, grade", [(0.8335, Grade.STRONG), (0.0482, Grade.REGULAR), (0.4678, Grade.WEAK)])
def test_grading(K, grade):
    assert strong_weak_grading([K]) == [grade]


def test_grading_ignores_three_state_label():
    report = run_sweep(SweepConfig(MapKind.LOGISTIC, 3.65, 3.75, 0.1, run_lyapunov=False))
    grades = strong_weak_grading(report.cells, ZeroOneParams())
    assert [g.value for g in grades] == [
        {"Regular": "Regular", "WeakChaos": "Weak", "StrongChaos": "Strong"}[c.regime01.value]
        for c in report.cells
    ]


def test_sweep_is_deterministic_across_workers():
    config = SweepConfig(MapKind.LOGISTIC_SINE, 3.3, 3.6, 0.1, lyapunov_n=5000)
    serial = run_sweep(config, workers=1)
    parallel = run_sweep(config, workers=3)
    assert serial == parallel


def test_invalid_config():
    with pytest.raises(DomainError):
        SweepConfig(MapKind.LOGISTIC, 3.9, 3.1, 0.1)
    with pytest.raises(DomainError):
        SweepConfig(MapKind.LOGISTIC, n=1000)
    with pytest.raises(DomainError):
        SweepConfig(MapKind.LOGISTIC, 3.1, 4.2, 0.1)


def test_compare_regimes_pairs_midpoints():
    report = run_sweep(SweepConfig(MapKind.LOGISTIC, 3.15, 3.35, 0.05, run_lyapunov=False))
    diffs = compare_regimes(MapKind.LOGISTIC, report.cells)
    assert [d.r for d in diffs] == [3.15, 3.25, 3.35]
    assert all(d.agrees for d in diffs)
