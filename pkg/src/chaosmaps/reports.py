"""CSV and JSON records for every result type.

Schemas are listed in FORMATS.md. CSV output uses a comma separator, a header
row and LF line endings; JSON output is a single object carrying
``schema_version``. Files are written atomically.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import asdict
from typing import Iterable, Sequence

import numpy as np

from chaosmaps.lyapunov import LyapunovResult
from chaosmaps.maps import BifurcationData, MapKind, MapSpec, Trajectory
from chaosmaps.sweep import CellResult, Region, RegionReport, SweepConfig, strong_weak_grading
from chaosmaps.three_state import Regime, ThreeStateParams, ThreeStateResult
from chaosmaps.zero_one import GrowthRegime, ZeroOneParams, ZeroOneResult

SCHEMA_VERSION = 1

Table = tuple[Sequence[str], Iterable[Sequence]]


def _num(v):
    if v is None or isinstance(v, (bool, str, int)):
        return v
    if isinstance(v, np.integer):
        return int(v)
    return float(v)


# -- JSON records -------------------------------------------------------------


def trajectory_record(t: Trajectory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "map": t.spec.kind.value,
        "r": t.spec.r,
        "x0": t.x0,
        "burn_in": t.burn_in,
        "n": len(t),
        "values": [float(v) for v in t.values],
    }


def bifurcation_record(b: BifurcationData) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "map": b.kind.value,
        "r_grid": [float(r) for r in b.r_grid],
        "points": [[float(v) for v in pts] for pts in b.points_per_r],
    }


def zero_one_record(z: ZeroOneResult, **context) -> dict:
    params = asdict(z.params)
    params["n_cut"] = z.n_cut
    params.update(context)
    return {
        "schema_version": SCHEMA_VERSION,
        "K": z.K,
        "regime_hint": z.regime_hint.value,
        "fit_points_used": z.fit_points_used,
        "params": params,
    }


def three_state_record(t: ThreeStateResult, **context) -> dict:
    params = asdict(t.params)
    params["growth_scales"] = list(t.params.growth_scales)
    params.update(context)
    return {
        "schema_version": SCHEMA_VERSION,
        "mu": t.mu,
        "K": t.K,
        "sigma": t.slope_set.sigma,
        "mean_slope": t.slope_set.mean,
        "regime": t.regime.value,
        "period": t.period,
        "mu_by_scale": list(t.mu_by_scale),
        "spread_by_scale": list(t.spread_by_scale),
        "spread_exponent": t.spread_exponent,
        "windows_used": t.windows_used,
        "params": params,
    }


def lyapunov_record(result: LyapunovResult, spec: MapSpec, x0: float) -> dict:
    lam = result.lam
    return {
        "schema_version": SCHEMA_VERSION,
        "map": spec.kind.value,
        "r": spec.r,
        "x0": x0,
        "lambda": None if math.isinf(lam) else lam,
        "n_used": result.n_used,
        "burn_in": result.burn_in,
        "excluded": result.excluded,
        "unreliable": result.unreliable,
    }


def _config_record(c: SweepConfig) -> dict:
    ts = asdict(c.three_state)
    ts["growth_scales"] = list(c.three_state.growth_scales)
    return {
        "map": c.kind.value,
        "r_from": c.r_from,
        "r_to": c.r_to,
        "r_step": c.r_step,
        "x0": c.x0,
        "n": c.n,
        "zero_one": asdict(c.zero_one),
        "three_state": ts,
        "run_lyapunov": c.run_lyapunov,
        "lyapunov_n": c.lyapunov_n,
        "lyapunov_burn_in": c.lyapunov_burn_in,
    }


def region_report_record(report: RegionReport) -> dict:
    grades = report.grades()
    return {
        "schema_version": SCHEMA_VERSION,
        "config": _config_record(report.config),
        "cells": [
            {
                "r": c.r,
                "K01": c.K01,
                "grade01": g.value,
                "regime01": c.regime01.value,
                "regime3st": c.regime3st.value,
                "mu": c.mu,
                "period": c.period,
                "lambda": c.lam,
            }
            for c, g in zip(report.cells, grades)
        ],
        "regions": [
            {"r_lo": g.r_lo, "r_hi": g.r_hi, "regime": g.regime.value} for g in report.regions
        ],
    }


def region_report_from_record(record: dict) -> RegionReport:
    cfg = record["config"]
    ts = dict(cfg["three_state"])
    ts["growth_scales"] = tuple(ts["growth_scales"])
    config = SweepConfig(
        kind=MapKind(cfg["map"]),
        r_from=cfg["r_from"],
        r_to=cfg["r_to"],
        r_step=cfg["r_step"],
        x0=cfg["x0"],
        n=cfg["n"],
        zero_one=ZeroOneParams(**cfg["zero_one"]),
        three_state=ThreeStateParams(**ts),
        run_lyapunov=cfg["run_lyapunov"],
        lyapunov_n=cfg["lyapunov_n"],
        lyapunov_burn_in=cfg["lyapunov_burn_in"],
    )
    cells = tuple(
        CellResult(
            r=c["r"],
            K01=c["K01"],
            regime01=GrowthRegime(c["regime01"]),
            regime3st=Regime(c["regime3st"]),
            mu=c["mu"],
            period=c["period"],
            lam=c["lambda"],
        )
        for c in record["cells"]
    )
    regions = tuple(Region(g["r_lo"], g["r_hi"], Regime(g["regime"])) for g in record["regions"])
    return RegionReport(config=config, cells=cells, regions=regions)


# -- CSV tables ---------------------------------------------------------------


def trajectory_table(t: Trajectory) -> Table:
    return ("index", "value"), ((i, v) for i, v in enumerate(t.values))


def bifurcation_table(b: BifurcationData) -> Table:
    return ("r", "value"), b.rows()


def pq_table(z: ZeroOneResult) -> Table:
    p, q = z.path.p, z.path.q
    return ("n", "p", "q"), ((i + 1, p[i], q[i]) for i in range(len(p)))


def growth_table(z: ZeroOneResult) -> Table:
    log_n, log_m = z.growth_curve()
    return ("log_n", "log_m"), zip(log_n, log_m)


def slopes_table(t: ThreeStateResult) -> Table:
    return ("j", "S_j"), enumerate(t.slope_set.slopes)


def lyapunov_table(rows: Iterable[tuple[float, float]]) -> Table:
    return ("r", "lambda"), rows


def sweep_table(report: RegionReport) -> Table:
    grades = strong_weak_grading(report.cells, report.config.zero_one)
    return ("r", "K01", "grade01", "regime3st", "mu", "lambda"), (
        (c.r, c.K01, g.value, c.regime3st.value, c.mu, c.lam)
        for c, g in zip(report.cells, grades)
    )


# -- rendering and writing ----------------------------------------------------


def _fmt(v, precision: int | None) -> str:
    v = _num(v)
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v) if precision is None else format(v, f".{precision}g")
    return str(v)


def _round(obj, precision: int | None):
    if isinstance(obj, dict):
        return {k: _round(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, precision) for v in obj]
    obj = _num(obj) if isinstance(obj, (float, np.floating, np.integer)) else obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        if precision is not None:
            return float(format(obj, f".{precision}g"))
    return obj


def render_csv(table: Table, precision: int | None = None) -> str:
    header, rows = table
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v, precision) for v in row])
    return buf.getvalue()


def render_json(record: dict, precision: int | None = None) -> str:
    return json.dumps(_round(record, precision), indent=2, allow_nan=False) + "\n"


def write_text(text: str, target: str | os.PathLike | None) -> int:
    """Write to `target` atomically, or to stdout when target is None or '-'."""
    data = text.encode("utf-8")
    if target is None or str(target) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return len(data)
    target = os.fspath(target)
    directory = os.path.dirname(os.path.abspath(target))
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except OSError as exc:
        if tmp and os.path.exists(tmp):
            os.unlink(tmp)
        raise OSError(exc.errno, exc.strerror, target) from exc
    return len(data)


def emit_report(obj, fmt: str, target=None, precision: int | None = 6) -> int:
    """Render a table (csv) or a record (json) and write it; returns bytes written."""
    if fmt == "csv":
        return write_text(render_csv(obj, precision), target)
    if fmt == "json":
        return write_text(render_json(obj, precision), target)
    raise ValueError(f"unknown format {fmt!r}")
