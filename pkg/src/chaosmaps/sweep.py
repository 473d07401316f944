"""Run the detectors over a grid of control parameters and merge regime regions."""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from chaosmaps.lyapunov import lyapunov_exponent
from chaosmaps.maps import DomainError, MapKind, MapSpec, iterate, parameter_grid
from chaosmaps.three_state import Regime, ThreeStateParams, three_state_test
from chaosmaps.zero_one import GrowthRegime, ZeroOneParams, zero_one_test


class Grade(str, enum.Enum):
    REGULAR = "Regular"
    WEAK = "Weak"
    STRONG = "Strong"


_GRADE_OF = {
    GrowthRegime.REGULAR: Grade.REGULAR,
    GrowthRegime.WEAK_CHAOS: Grade.WEAK,
    GrowthRegime.STRONG_CHAOS: Grade.STRONG,
}


@dataclass(frozen=True)
class SweepConfig:
    kind: MapKind
    r_from: float = 3.15
    r_to: float = 3.95
    r_step: float = 0.1
    x0: float = 0.01
    n: int = 5000
    zero_one: ZeroOneParams = field(default_factory=ZeroOneParams)
    three_state: ThreeStateParams = field(default_factory=ThreeStateParams)
    run_lyapunov: bool = True
    lyapunov_n: int = 100_000
    lyapunov_burn_in: int = 1000

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", MapKind(self.kind))
        self.grid()
        if self.n < self.three_state.window * self.three_state.subsets:
            raise DomainError(
                f"n={self.n} is shorter than window*subsets="
                f"{self.three_state.window * self.three_state.subsets}"
            )
        self.zero_one.resolve_n_cut(self.n)

    def grid(self):
        return parameter_grid(self.r_from, self.r_to, self.r_step)


@dataclass(frozen=True)
class CellResult:
    r: float
    K01: float
    regime01: GrowthRegime
    regime3st: Regime
    mu: float
    period: int | None = None
    lam: float | None = None


@dataclass(frozen=True)
class Region:
    r_lo: float
    r_hi: float
    regime: Regime


@dataclass(frozen=True)
class RegionReport:
    config: SweepConfig
    cells: tuple[CellResult, ...]
    regions: tuple[Region, ...]

    def grades(self) -> list[Grade]:
        return strong_weak_grading(self.cells, self.config.zero_one)


def evaluate_cell(config: SweepConfig, r: float) -> CellResult:
    spec = MapSpec(config.kind, r)
    series = iterate(spec, config.x0, config.n).values
    z = zero_one_test(series, config.zero_one)
    t = three_state_test(series, config.three_state)
    lam = None
    if config.run_lyapunov:
        lam = lyapunov_exponent(spec, config.x0, config.lyapunov_n, config.lyapunov_burn_in).lam
    return CellResult(
        r=float(r),
        K01=z.K,
        regime01=z.regime_hint,
        regime3st=t.regime,
        mu=t.mu,
        period=t.period,
        lam=lam,
    )


def _evaluate(args: tuple[SweepConfig, float]) -> CellResult:
    config, r = args
    try:
        return evaluate_cell(config, r)
    except DomainError as exc:
        raise DomainError(f"sweep aborted at r={r}: {exc}") from exc


def merge_regions(rs, regimes) -> tuple[Region, ...]:
    """Collapse runs of equal regime into (r_lo, r_hi, regime) spans."""
    rs = list(rs)
    regimes = list(regimes)
    if len(rs) != len(regimes):
        raise DomainError("rs and regimes differ in length")
    regions = []
    for regime, run in itertools.groupby(range(len(rs)), key=lambda k: regimes[k]):
        idx = list(run)
        regions.append(Region(r_lo=rs[idx[0]], r_hi=rs[idx[-1]], regime=regime))
    return tuple(regions)


def run_sweep(config: SweepConfig, workers: int = 1) -> RegionReport:
    """One cell per grid point; cells are independent and reported in grid order."""
    jobs = [(config, float(r)) for r in config.grid()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = tuple(pool.map(_evaluate, jobs))
    else:
        cells = tuple(map(_evaluate, jobs))
    regions = merge_regions([c.r for c in cells], [c.regime3st for c in cells])
    return RegionReport(config=config, cells=cells, regions=regions)


def strong_weak_grading(cells, params: ZeroOneParams | None = None) -> list[Grade]:
    """Grade each cell's 0-1 growth rate; the three-state label plays no part."""
    params = params or ZeroOneParams()
    out = []
    for cell in cells:
        K = cell.K01 if isinstance(cell, CellResult) else float(cell)
        out.append(_GRADE_OF[params.classify(K)])
    return out
