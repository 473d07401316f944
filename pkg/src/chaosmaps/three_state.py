"""Three-state test: periodic, quasi-periodic or chaotic.

The series is reduced to ordinal symbols comparing x(i + p) with x(i). A
counter C accumulates how often consecutive symbols differ. In each of Q
consecutive windows of n samples, S_j is the largest rate at which C climbs
over half a window. The spread sigma_S of the S_j gives the growth indicator

    mu = log(1 + sigma_S) / log N.

Periodic series repeat their symbol pattern. For the other two states the
spread of the change count accumulated per window is tracked across window
lengths: bounded (it levels off) for quasi-periodic motion, diffusive growth
for chaos.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from chaosmaps.maps import DomainError

TAIL_FRACTION = 0.8


class Regime(str, enum.Enum):
    PERIODIC = "Periodic"
    QUASI_PERIODIC = "QuasiPeriodic"
    CHAOTIC = "Chaotic"


@dataclass(frozen=True)
class ThreeStateParams:
    window: int = 50
    subsets: int = 100
    delay: int = 1
    eps_equal: float = 0.0
    sigma_zero_tol: float = 1e-9
    growth_scales: tuple[int, ...] | None = None  # None: (window, 2 window, 4 window)
    growth_threshold: float = 0.25
    max_period: int = 200
    period_tol: float = 1e-9  # value-level recurrence used to refine the reported period

    def __post_init__(self) -> None:
        if self.window < 2:
            raise DomainError(f"window must be >= 2, got {self.window}")
        if self.subsets < 1:
            raise DomainError(f"subsets must be >= 1, got {self.subsets}")
        if self.delay < 1:
            raise DomainError(f"delay must be >= 1, got {self.delay}")
        if self.eps_equal < 0:
            raise DomainError(f"eps_equal must be >= 0, got {self.eps_equal}")
        if self.sigma_zero_tol <= 0:
            raise DomainError(f"sigma_zero_tol must be positive, got {self.sigma_zero_tol}")
        if self.period_tol < 0:
            raise DomainError(f"period_tol must be >= 0, got {self.period_tol}")
        if self.max_period < 1:
            raise DomainError(f"max_period must be >= 1, got {self.max_period}")
        scales = self.growth_scales
        if scales is None:
            scales = (self.window, 2 * self.window, 4 * self.window)
        scales = tuple(int(s) for s in scales)
        if scales[0] != self.window or any(b <= a for a, b in zip(scales, scales[1:])):
            raise DomainError(
                f"growth_scales {scales} must increase strictly and start at window={self.window}"
            )
        object.__setattr__(self, "growth_scales", scales)


@dataclass(frozen=True)
class SlopeSet:
    slopes: np.ndarray = field(repr=False)
    mean: float
    sigma: float


@dataclass(frozen=True)
class ThreeStateResult:
    slope_set: SlopeSet
    mu: float
    K: float
    regime: Regime
    period: int | None
    mu_by_scale: tuple[float, ...]
    spread_by_scale: tuple[float, ...]
    spread_exponent: float | None
    windows_used: int
    length: int
    params: ThreeStateParams


def symbolize(series, delay: int = 1, eps_equal: float = 0.0) -> np.ndarray:
    """+1 where x(i + delay) rises above x(i), -1 where it falls, 0 within eps_equal."""
    x = np.asarray(series, dtype=float)
    if delay < 1:
        raise DomainError(f"delay must be >= 1, got {delay}")
    if len(x) <= delay:
        raise DomainError(f"series of length {len(x)} is too short for delay {delay}")
    d = x[delay:] - x[:-delay]
    out = np.zeros(len(d), dtype=np.int8)
    out[d > eps_equal] = 1
    out[d < -eps_equal] = -1
    return out


def change_cumulative(symbols) -> np.ndarray:
    """C(k) = number of i <= k with symbols(i) != symbols(i - 1), for k = 1..L-1."""
    s = np.asarray(symbols)
    if len(s) < 2:
        raise DomainError("need at least two symbols")
    return np.cumsum(s[1:] != s[:-1], dtype=np.int64)


def window_slopes(C, n: int, Q: int) -> SlopeSet:
    """Largest slope of C inside each of Q consecutive windows of length n.

    Within a window the slope is taken over every span of n // 2 steps,
    (C(i + n // 2) - C(i)) / (n // 2), and S_j is the largest of these. A
    periodic series whose period fits in n // 2 + 1 steps therefore gives the
    same S_j in every window whatever the window's phase.

    Windows tile the trailing Q * n entries of C, so leading entries (the
    transient) are the ones dropped when C is longer than needed.
    """
    c = np.asarray(C)
    if n < 2 or Q < 1:
        raise DomainError(f"need n >= 2 and Q >= 1, got n={n}, Q={Q}")
    if Q * n > len(c):
        raise DomainError(f"{Q} windows of length {n} do not fit in {len(c)} counter values")
    span = n // 2
    blocks = c[len(c) - Q * n:].reshape(Q, n)
    slopes = (blocks[:, span:] - blocks[:, :-span]).max(axis=1) / span
    if np.all(slopes == slopes[0]):
        return SlopeSet(slopes=slopes, mean=float(slopes[0]), sigma=0.0)
    return SlopeSet(slopes=slopes, mean=float(slopes.mean()), sigma=float(slopes.std()))


def growth_indicator(slope_set: SlopeSet | float, N: int) -> float:
    """mu = log(1 + sigma_S) / log N."""
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    sigma = slope_set.sigma if isinstance(slope_set, SlopeSet) else float(slope_set)
    return math.log1p(sigma) / math.log(N)


def _tail(a: np.ndarray) -> np.ndarray:
    return a[int(math.floor((1.0 - TAIL_FRACTION) * len(a))):]


def estimate_period(symbols, max_period: int) -> int | None:
    """Smallest T <= max_period with symbols(i) == symbols(i + T) over the trailing 80%."""
    s = np.asarray(symbols)
    if max_period < 1 or max_period >= len(s) / 2:
        raise DomainError(f"max_period={max_period} must lie in [1, {len(s) / 2})")
    tail = _tail(s)
    for T in range(1, min(max_period, len(tail) - 1) + 1):
        if np.array_equal(tail[T:], tail[:-T]):
            return T
    return None


def _value_period(x: np.ndarray, base: int, max_period: int, tol: float) -> int:
    tail = _tail(x)
    for T in range(base, min(max_period, len(tail) - 1) + 1, base):
        if np.all(np.abs(tail[T:] - tail[:-T]) <= tol):
            return T
    return base


def _spread_exponent(scales, spreads, sigma_zero_tol: float) -> float | None:
    s = np.asarray(scales, dtype=float)
    v = np.asarray(spreads, dtype=float)
    keep = v > sigma_zero_tol * s
    if np.count_nonzero(keep) < 2:
        return None
    return float(np.polyfit(np.log(s[keep]), np.log(v[keep]), 1)[0])


def three_state_test(series, params: ThreeStateParams | None = None) -> ThreeStateResult:
    params = params or ThreeStateParams()
    x = np.asarray(series, dtype=float)
    N = len(x)
    n, Q = params.window, params.subsets
    if N < n * Q:
        raise DomainError(f"series of length {N} is shorter than window*subsets = {n * Q}")
    if n >= N:
        raise DomainError(f"window {n} must be shorter than the series ({N})")

    symbols = symbolize(x, params.delay, params.eps_equal)
    C = change_cumulative(symbols)

    # C is shorter than the series by delay + 1, so the last window may not fit
    q_base = min(Q, len(C) // n)
    base = window_slopes(C, n, q_base)
    mu = growth_indicator(base, N)

    mu_by_scale, spread_by_scale = [], []
    for s in params.growth_scales:
        q_s = min(N // s, len(C) // s)
        if q_s < 2:
            raise DomainError(f"growth scale {s} leaves fewer than two windows")
        ss = base if s == n else window_slopes(C, s, q_s)
        mu_by_scale.append(growth_indicator(ss, N))
        spread_by_scale.append(s * ss.sigma)
    exponent = _spread_exponent(params.growth_scales, spread_by_scale, params.sigma_zero_tol)

    max_period = min(params.max_period, (len(symbols) - 1) // 2)
    symbol_period = estimate_period(symbols, max_period)
    period = None
    if symbol_period is not None:
        regime = Regime.PERIODIC
        period = _value_period(x, symbol_period, max_period, params.period_tol)
    elif exponent is not None and exponent > params.growth_threshold:
        regime = Regime.CHAOTIC
    else:
        regime = Regime.QUASI_PERIODIC

    return ThreeStateResult(
        slope_set=base,
        mu=mu,
        K=mu,
        regime=regime,
        period=period,
        mu_by_scale=tuple(mu_by_scale),
        spread_by_scale=tuple(spread_by_scale),
        spread_exponent=exponent,
        windows_used=q_base,
        length=N,
        params=params,
    )
