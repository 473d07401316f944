"""Largest Lyapunov exponent of the four maps from analytic derivatives."""

from __future__ import annotations

import math
from dataclasses import dataclass

from chaosmaps.maps import DomainError, MapKind, MapSpec, _initial_state, _make_stepper

UNRELIABLE_FRACTION = 0.01


def _make_derivative(spec: MapSpec):
    r = spec.r
    half = (4.0 - r) / 2.0
    amp = (4.0 - r) * math.pi / 4.0
    cos, pi = math.cos, math.pi
    kind = spec.kind
    if kind is MapKind.LOGISTIC:
        return lambda x: r * (1.0 - 2.0 * x)
    if kind is MapKind.LOGISTIC_TENT:
        return lambda x: r * (1.0 - 2.0 * x) + (half if x < 0.5 else -half)
    if kind is MapKind.LOGISTIC_SINE:
        return lambda x: r * (1.0 - 2.0 * x) + amp * cos(pi * x)
    return lambda x: (r / 2.0 if x < 0.5 else -r / 2.0) + amp * cos(pi * x)


def map_derivative(spec: MapSpec, x: float) -> float:
    """Derivative of the map's inner expression at x.

    The mod-1 fold has unit slope almost everywhere, so it drops out. At the
    branch point x = 0.5 of lts and tss the right-hand branch is used.
    """
    return _make_derivative(spec)(float(x))


@dataclass(frozen=True)
class LyapunovResult:
    lam: float
    n_used: int
    burn_in: int
    excluded: int = 0
    unreliable: bool = False


def lyapunov_exponent(
    spec: MapSpec, x0: float = 0.01, n: int = 100_000, burn_in: int = 1000
) -> LyapunovResult:
    """Average of ln|f'(x_k)| along the orbit after `burn_in` iterates.

    Iterates where the derivative is exactly zero are left out and counted;
    the estimate is flagged unreliable when more than 1% are left out. If every
    iterate is left out the exponent is -inf.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if burn_in < 0:
        raise DomainError(f"burn_in must be >= 0, got {burn_in}")
    f = _make_stepper(spec)
    x = _initial_state(x0)
    for _ in range(burn_in):
        x = f(x)
    total = 0.0
    excluded = 0
    log = math.log
    df = _make_derivative(spec)
    for _ in range(n):
        d = abs(df(x))
        if d == 0.0:
            excluded += 1
        else:
            total += log(d)
        x = f(x)
    used = n - excluded
    lam = total / used if used else -math.inf
    return LyapunovResult(
        lam=lam,
        n_used=used,
        burn_in=burn_in,
        excluded=excluded,
        unreliable=excluded > UNRELIABLE_FRACTION * n,
    )
