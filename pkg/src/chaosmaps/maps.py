"""The four one-dimensional maps and their trajectories.

All maps act on the unit interval and share a control parameter r in (0, 4].
The combined maps fold their output back into [0, 1) with a mod-1 reduction:

    logistic  x -> r x (1 - x)
    lts       x -> r x (1 - x) + (4 - r) x / 2          mod 1   (x < 0.5)
                   r x (1 - x) + (4 - r) (1 - x) / 2    mod 1   (x >= 0.5)
    lss       x -> r x (1 - x) + (4 - r) sin(pi x) / 4  mod 1
    tss       x -> r x / 2 + (4 - r) sin(pi x) / 4       mod 1   (x < 0.5)
                   r (1 - x) / 2 + (4 - r) sin(pi x) / 4 mod 1   (x >= 0.5)
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class DegenerateTrajectoryWarning(UserWarning):
    """Every recorded iterate is identical (the orbit sits on a fixed point)."""


class MapKind(str, enum.Enum):
    LOGISTIC = "logistic"
    LOGISTIC_TENT = "lts"
    LOGISTIC_SINE = "lss"
    TENT_SINE = "tss"

    @classmethod
    def parse(cls, name: str) -> "MapKind":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "logistic-tent": cls.LOGISTIC_TENT,
            "logistic-sine": cls.LOGISTIC_SINE,
            "tent-sine": cls.TENT_SINE,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise DomainError(f"unknown map {name!r}; choose one of {choices}") from None


def check_r(r: float) -> float:
    r = float(r)
    if not (0.0 < r <= 4.0) or math.isnan(r):
        raise DomainError(f"control parameter r={r!r} must lie in (0, 4]")
    return r


def _fold(v: float) -> float:
    v %= 1.0
    # float modulo can round up to exactly 1.0 for tiny negative inputs
    return 0.0 if v >= 1.0 else v


@dataclass(frozen=True)
class MapSpec:
    kind: MapKind
    r: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", MapKind(self.kind))
        object.__setattr__(self, "r", check_r(self.r))


def _make_stepper(spec: MapSpec) -> Callable[[float], float]:
    r = spec.r
    s = 4.0 - r
    sin, pi = math.sin, math.pi
    kind = spec.kind

    if kind is MapKind.LOGISTIC:
        def f(x: float) -> float:
            return _fold(r * x * (1.0 - x))
    elif kind is MapKind.LOGISTIC_TENT:
        def f(x: float) -> float:
            if x < 0.5:
                return _fold(r * x * (1.0 - x) + s * x / 2.0)
            return _fold(r * x * (1.0 - x) + s * (1.0 - x) / 2.0)
    elif kind is MapKind.LOGISTIC_SINE:
        def f(x: float) -> float:
            return _fold(r * x * (1.0 - x) + s * sin(pi * x) / 4.0)
    else:
        def f(x: float) -> float:
            if x < 0.5:
                return _fold(r * x / 2.0 + s * sin(pi * x) / 4.0)
            return _fold(r * (1.0 - x) / 2.0 + s * sin(pi * x) / 4.0)
    return f


def _check_x(x: float) -> float:
    x = float(x)
    if not (0.0 <= x < 1.0):
        raise DomainError(f"state x={x!r} must lie in [0, 1)")
    return x


def step(spec: MapSpec, x: float) -> float:
    """Apply the map once. The result is always in [0, 1)."""
    return _make_stepper(spec)(_check_x(x))


@dataclass(frozen=True)
class Trajectory:
    spec: MapSpec
    x0: float
    burn_in: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)


def _orbit(f: Callable[[float], float], x: float, n: int, burn_in: int) -> np.ndarray:
    for _ in range(burn_in):
        x = f(x)
    out = np.empty(n)
    for i in range(n):
        x = f(x)
        out[i] = x
    return out


def _initial_state(x0: float) -> float:
    x0 = float(x0)
    if x0 == 1.0:
        return 0.0
    return _check_x(x0)


def iterate(spec: MapSpec, x0: float, n: int, burn_in: int = 0) -> Trajectory:
    """Iterate `spec` from `x0`, discard `burn_in` iterates, record the next `n`.

    The initial value itself is not recorded: ``values[0] == step(spec, x0)``
    when ``burn_in == 0``.
    """
    if n < 1:
        raise DomainError(f"trajectory length must be >= 1, got {n}")
    if burn_in < 0:
        raise DomainError(f"burn_in must be >= 0, got {burn_in}")
    x = _initial_state(x0)
    values = _orbit(_make_stepper(spec), x, int(n), int(burn_in))
    if np.all(values == values[0]):
        warnings.warn(
            f"degenerate trajectory for {spec.kind.value} r={spec.r}: "
            f"all {n} values equal {values[0]!r}",
            DegenerateTrajectoryWarning,
            stacklevel=2,
        )
    return Trajectory(spec=spec, x0=x, burn_in=int(burn_in), values=values)


def parameter_grid(r_from: float, r_to: float, r_step: float) -> np.ndarray:
    """Grid r_from + i * r_step up to r_to inclusive, built from integer indices."""
    if r_step <= 0:
        raise DomainError(f"r_step must be positive, got {r_step}")
    if r_to < r_from:
        raise DomainError(f"empty grid: r_to={r_to} < r_from={r_from}")
    count = int(math.floor((r_to - r_from) / r_step + 1e-9)) + 1
    # rounding keeps 3.1 + 2 * 0.1 from printing as 3.3000000000000003
    grid = np.array([round(r_from + i * r_step, 12) for i in range(count)])
    for r in grid:
        check_r(r)
    return grid


@dataclass(frozen=True)
class BifurcationData:
    kind: MapKind
    r_grid: np.ndarray
    points_per_r: tuple[np.ndarray, ...]

    def rows(self):
        for r, pts in zip(self.r_grid, self.points_per_r):
            for v in pts:
                yield float(r), float(v)


def bifurcation_scan(
    kind: MapKind,
    r_from: float,
    r_to: float,
    r_step: float = 0.01,
    x0: float = 0.01,
    burn_in: int = 1000,
    samples: int = 200,
) -> BifurcationData:
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    kind = MapKind(kind)
    grid = parameter_grid(r_from, r_to, r_step)
    x = _initial_state(x0)
    points = tuple(
        _orbit(_make_stepper(MapSpec(kind, r)), x, samples, burn_in) for r in grid
    )
    return BifurcationData(kind=kind, r_grid=grid, points_per_r=points)


def attractor_points(values: Trajectory | Sequence[float] | np.ndarray, tol: float) -> list[float]:
    """Cluster values that sit within `tol` of a cluster representative.

    Representatives are the smallest member of each cluster, in increasing order.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if isinstance(values, Trajectory):
        values = values.values
    reps: list[float] = []
    for v in np.sort(np.asarray(values, dtype=float)):
        if not reps or v - reps[-1] > tol:
            reps.append(float(v))
    return reps
