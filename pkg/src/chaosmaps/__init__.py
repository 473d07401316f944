"""Chaos detection for one-dimensional maps.

Four maps (logistic, logistic-tent, logistic-sine, tent-sine), the 0-1 test,
the three-state test, a Lyapunov baseline and parameter sweeps that grade
regions of the control parameter as periodic, quasi-periodic or chaotic.
"""

from chaosmaps.maps import (
    BifurcationData,
    DegenerateTrajectoryWarning,
    DomainError,
    MapKind,
    MapSpec,
    Trajectory,
    attractor_points,
    bifurcation_scan,
    iterate,
    step,
)
from chaosmaps.zero_one import (
    GrowthRegime,
    TranslationPath,
    ZeroOneParams,
    ZeroOneResult,
    growth_rate,
    mean_square_displacement,
    translate,
    zero_one_test,
)
from chaosmaps.three_state import (
    Regime,
    SlopeSet,
    ThreeStateParams,
    ThreeStateResult,
    change_cumulative,
    estimate_period,
    growth_indicator,
    symbolize,
    three_state_test,
    window_slopes,
)
from chaosmaps.lyapunov import LyapunovResult, lyapunov_exponent, map_derivative
from chaosmaps.sweep import (
    CellResult,
    Grade,
    Region,
    RegionReport,
    SweepConfig,
    merge_regions,
    run_sweep,
    strong_weak_grading,
)

__version__ = "0.1.0"

__all__ = [
    "BifurcationData",
    "CellResult",
    "DegenerateTrajectoryWarning",
    "DomainError",
    "Grade",
    "GrowthRegime",
    "LyapunovResult",
    "MapKind",
    "MapSpec",
    "Regime",
    "Region",
    "RegionReport",
    "SlopeSet",
    "SweepConfig",
    "ThreeStateParams",
    "ThreeStateResult",
    "Trajectory",
    "TranslationPath",
    "ZeroOneParams",
    "ZeroOneResult",
    "attractor_points",
    "bifurcation_scan",
    "change_cumulative",
    "estimate_period",
    "growth_indicator",
    "growth_rate",
    "iterate",
    "lyapunov_exponent",
    "map_derivative",
    "mean_square_displacement",
    "merge_regions",
    "run_sweep",
    "step",
    "strong_weak_grading",
    "symbolize",
    "three_state_test",
    "translate",
    "window_slopes",
    "zero_one_test",
]
