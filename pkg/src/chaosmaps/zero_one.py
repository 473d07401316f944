"""The 0-1 test for chaos.

A scalar series phi is projected onto a plane by accumulating it against a
rotating phase,

    p(n+1) = p(n) + phi(n+1) cos(c n),   q(n+1) = q(n) + phi(n+1) sin(c n),

starting from p(0) = q(0) = 0 with the phase index n starting at 0. Regular
series keep (p, q) bounded; chaotic series make it diffuse. The growth rate K
is the log-log slope of the mean square displacement M(n) of the path.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from chaosmaps.maps import DomainError

K_CLAMP = (0.0, 1.2)


class GrowthRegime(str, enum.Enum):
    REGULAR = "Regular"
    WEAK_CHAOS = "WeakChaos"
    STRONG_CHAOS = "StrongChaos"


@dataclass(frozen=True)
class ZeroOneParams:
    c: float = 0.8
    n_cut: int | None = None  # None: a tenth of the series length
    regular_max: float = 0.25
    strong_min: float = 0.60

    def __post_init__(self) -> None:
        if not (0.0 < self.c < 2.0 * math.pi):
            raise DomainError(f"c={self.c} must lie in (0, 2*pi)")
        if self.n_cut is not None and self.n_cut < 1:
            raise DomainError(f"n_cut must be positive, got {self.n_cut}")
        if not (0.0 <= self.regular_max < self.strong_min <= 1.0):
            raise DomainError(
                "thresholds must satisfy 0 <= regular_max < strong_min <= 1, "
                f"got {self.regular_max}, {self.strong_min}"
            )

    def resolve_n_cut(self, length: int) -> int:
        n_cut = self.n_cut if self.n_cut is not None else max(1, length // 10)
        if n_cut >= length:
            raise DomainError(f"n_cut={n_cut} must be smaller than the series length {length}")
        return n_cut

    def classify(self, K: float) -> GrowthRegime:
        if K < self.regular_max:
            return GrowthRegime.REGULAR
        if K >= self.strong_min:
            return GrowthRegime.STRONG_CHAOS
        return GrowthRegime.WEAK_CHAOS


@dataclass(frozen=True)
class TranslationPath:
    p: np.ndarray
    q: np.ndarray

    def __post_init__(self) -> None:
        if len(self.p) != len(self.q):
            raise DomainError("p and q must have equal length")

    def __len__(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class ZeroOneResult:
    K: float
    msd: np.ndarray = field(repr=False)
    path: TranslationPath = field(repr=False)
    regime_hint: GrowthRegime
    fit_points_used: int
    params: ZeroOneParams
    n_cut: int

    def growth_curve(self) -> tuple[np.ndarray, np.ndarray]:
        """(log n, log M(n)) over the points that entered the fit."""
        n = np.arange(1, len(self.msd) + 1)
        keep = self.msd > 0
        return np.log(n[keep]), np.log(self.msd[keep])


def translate(series, c: float) -> TranslationPath:
    phi = np.asarray(series, dtype=float)
    if phi.ndim != 1 or len(phi) < 2:
        raise DomainError("the 0-1 test needs a one-dimensional series of length >= 2")
    if not (0.0 < c < 2.0 * math.pi):
        raise DomainError(f"c={c} must lie in (0, 2*pi)")
    phase = c * np.arange(len(phi))
    return TranslationPath(p=np.cumsum(phi * np.cos(phase)), q=np.cumsum(phi * np.sin(phase)))


def mean_square_displacement(path: TranslationPath, n_cut: int) -> np.ndarray:
    """M(n) for n = 1..n_cut; entry k holds M(k + 1).

    Each lag averages over every available start j = 1..N-n.
    """
    length = len(path)
    if not (1 <= n_cut < length):
        raise DomainError(f"n_cut={n_cut} must lie in [1, {length})")
    p, q = path.p, path.q
    m = np.empty(n_cut)
    for n in range(1, n_cut + 1):
        dp = p[n:] - p[:-n]
        dq = q[n:] - q[:-n]
        m[n - 1] = np.mean(dp * dp + dq * dq)
    return m


def _fit(msd: np.ndarray) -> tuple[float, int]:
    msd = np.asarray(msd, dtype=float)
    n = np.arange(1, len(msd) + 1)
    keep = msd > 0
    used = int(np.count_nonzero(keep))
    if used < 2:
        return 0.0, used
    slope = np.polyfit(np.log(n[keep]), np.log(msd[keep]), 1)[0]
    return float(np.clip(slope, *K_CLAMP)), used


def growth_rate(msd) -> float:
    """Least-squares slope of log M(n) against log n, clamped to [0, 1.2].

    Lags with M(n) = 0 are skipped; fewer than two usable lags give K = 0.
    """
    return _fit(msd)[0]


def zero_one_test(series, params: ZeroOneParams | None = None) -> ZeroOneResult:
    params = params or ZeroOneParams()
    phi = np.asarray(series, dtype=float)
    n_cut = params.resolve_n_cut(len(phi))
    if len(phi) < 10 * n_cut:
        warnings.warn(
            f"series of length {len(phi)} is short for n_cut={n_cut}; "
            "M(n) estimates at large lags average few terms",
            stacklevel=2,
        )
    path = translate(phi, params.c)
    msd = mean_square_displacement(path, n_cut)
    K, used = _fit(msd)
    return ZeroOneResult(
        K=K,
        msd=msd,
        path=path,
        regime_hint=params.classify(K),
        fit_points_used=used,
        params=params,
        n_cut=n_cut,
    )
