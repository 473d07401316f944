"""Published 0-1 growth rates and three-state labels at band midpoints.

Band k covers r in [3.1 + 0.1 k, 3.19 + 0.1 k]; its midpoint is 3.15 + 0.1 k.
Used to diff a sweep against the published classification of the four maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from chaosmaps.maps import MapKind
from chaosmaps.three_state import Regime

BAND_MIDPOINTS = (3.15, 3.25, 3.35, 3.45, 3.55, 3.65, 3.75, 3.85, 3.95)

_P, _Q, _C = Regime.PERIODIC, Regime.QUASI_PERIODIC, Regime.CHAOTIC

K01 = {
    MapKind.LOGISTIC: (0.0482, 0.0468, 0.0455, 0.0444, 0.0579, 0.1921, 0.4119, 0.0094, 0.6098),
    MapKind.LOGISTIC_TENT: (0.6054, 0.5686, 0.6758, 0.6992, 0.6570, 0.7513, 0.7004, 0.5172, 0.4678),
    MapKind.LOGISTIC_SINE: (0.8335, 0.7394, 0.7692, 0.6158, 0.6739, 0.7112, 0.6438, 0.5503, 0.5137),
    MapKind.TENT_SINE: (0.7709, 0.6857, 0.7700, 0.7641, 0.6516, 0.6306, 0.7121, 0.4176, 0.0847),
}

REGIMES = {
    MapKind.LOGISTIC: (_P, _P, _P, _P, _Q, _Q, _C, _P, _C),
    MapKind.LOGISTIC_TENT: (_Q, _Q, _C, _C, _C, _C, _C, _Q, _Q),
    MapKind.LOGISTIC_SINE: (_C, _C, _C, _Q, _Q, _C, _Q, _Q, _Q),
    MapKind.TENT_SINE: (_C, _Q, _C, _C, _Q, _Q, _C, _Q, _Q),
}


@dataclass(frozen=True)
class RegimeDiff:
    r: float
    computed: Regime
    published: Regime

    @property
    def agrees(self) -> bool:
        return self.computed is self.published


def band_index(r: float) -> int | None:
    for i, mid in enumerate(BAND_MIDPOINTS):
        if abs(r - mid) < 1e-9:
            return i
    return None


def compare_regimes(kind: MapKind, cells) -> list[RegimeDiff]:
    """Pair every cell that sits on a band midpoint with the published label."""
    out = []
    for cell in cells:
        i = band_index(cell.r)
        if i is not None:
            out.append(RegimeDiff(cell.r, cell.regime3st, REGIMES[MapKind(kind)][i]))
    return out
