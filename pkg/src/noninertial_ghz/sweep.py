"""Parameter sweeps over (r, p) grids, death/rebirth detection and CSV output."""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .analytic import AnalyticPoint, NoOracleCoverage, closed_form
from .channels import ChannelKind, CouplingSpec, apply_channel
from .constants import GRID_TOL, ORACLE_TOL, R_MAX, ZERO_THRESHOLD
from .measures import TangleReport, pi_tangle
from .rindler import cached_rindler_ghz

CSV_HEADER = (
    "channel,coupling,r,p0,p1,p2,N_A_BC,N_B_AC,N_C_AB,N_AB,N_AC,N_BC,pi,ckw_slack,analytic_delta"
)
QUANTITIES = ("N_A_BC", "N_B_AC", "N_C_AB", "pi")
DEFAULT_R_GRID = (0.0, math.pi / 12, math.pi / 6, math.pi / 4)
SWEEP = "p"


class ConfigError(ValueError):
    """Invalid sweep configuration; ``field`` names the offending setting."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


class SweepIOError(OSError):
    pass


def default_p_grid(step: float = 0.01) -> tuple:
    n = int(round(1.0 / step))
    return tuple(round(i * step, 12) for i in range(n + 1))


@dataclass(frozen=True)
class CouplingMode:
    """How the swept ``p`` maps onto the three qubits.

    Each slot is ``None`` (uncoupled), ``SWEEP`` (follows the p grid) or a
    fixed parameter.
    """

    label: str
    slots: tuple

    @classmethod
    def single(cls, qubit: int) -> "CouplingMode":
        slots = [None, None, None]
        slots[qubit] = SWEEP
        return cls("ABC"[qubit], tuple(slots))

    @classmethod
    def collective(cls) -> "CouplingMode":
        return cls("collective", (SWEEP, SWEEP, SWEEP))

    @classmethod
    def explicit(cls, slots) -> "CouplingMode":
        return cls("explicit", tuple(slots))

    @classmethod
    def parse(cls, text: str) -> "CouplingMode":
        t = text.strip()
        low = t.lower()
        if low in ("a", "b", "c"):
            return cls.single("abc".index(low))
        if low == "collective":
            return cls.collective()
        if low.startswith("explicit:"):
            toks = [s.strip().lower() for s in t.split(":", 1)[1].split(",")]
            if len(toks) != 3:
                raise ConfigError("coupling", f"explicit needs three entries, got {len(toks)}")
            slots = []
            for tok in toks:
                if tok in ("-", "none"):
                    slots.append(None)
                elif tok == SWEEP:
                    slots.append(SWEEP)
                else:
                    try:
                        slots.append(float(tok))
                    except ValueError:
                        raise ConfigError("coupling", f"bad explicit entry {tok!r}") from None
            return cls.explicit(slots)
        raise ConfigError("coupling", f"unknown coupling {text!r}")

    def at(self, kind: ChannelKind, p: float) -> CouplingSpec:
        return CouplingSpec(kind, tuple(p if s == SWEEP else s for s in self.slots))


@dataclass(frozen=True)
class SweepConfig:
    kind: ChannelKind
    coupling: CouplingMode
    r_grid: tuple = DEFAULT_R_GRID
    p_grid: tuple = field(default_factory=default_p_grid)
    output_path: Optional[str] = None
    check_analytic: bool = False
    zero_threshold: float = ZERO_THRESHOLD
    workers: int = 1

    def validate(self) -> "SweepConfig":
        if not isinstance(self.kind, ChannelKind):
            raise ConfigError("kind", f"not a channel kind: {self.kind!r}")
        _check_grid("r_grid", self.r_grid, 0.0, R_MAX)
        _check_grid("p_grid", self.p_grid, 0.0, 1.0)
        for i, s in enumerate(self.coupling.slots):
            if s not in (None, SWEEP) and not 0.0 <= s <= 1.0:
                raise ConfigError("coupling", f"slot {i} parameter {s} outside [0, 1]")
        if all(s is None for s in self.coupling.slots):
            raise ConfigError("coupling", "no qubit is coupled")
        if not (math.isfinite(self.zero_threshold) and self.zero_threshold >= 0):
            raise ConfigError("zero_threshold", f"must be >= 0, got {self.zero_threshold}")
        if self.workers < 1:
            raise ConfigError("workers", f"must be >= 1, got {self.workers}")
        return self


def _check_grid(name: str, grid: Sequence[float], lo: float, hi: float) -> None:
    if len(grid) == 0:
        raise ConfigError(name, "empty grid")
    for v in grid:
        if not math.isfinite(v) or v < lo - GRID_TOL or v > hi + GRID_TOL:
            raise ConfigError(name, f"value {v} outside [{lo}, {hi}]")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError(name, "grid must be strictly ascending")


@dataclass(frozen=True)
class SweepRow:
    kind: ChannelKind
    coupling: str
    r: float
    p: float
    ps: tuple
    report: TangleReport
    analytic_delta: Optional[float] = None

    def value(self, quantity: str) -> float:
        return self.report.as_dict()[quantity]


def evaluate_point(kind: ChannelKind, coupling: CouplingSpec, r: float) -> TangleReport:
    """Rindler GHZ state at ``r`` (both observers), noise, then tangles."""
    rho = apply_channel(cached_rindler_ghz(float(r), float(r)), coupling)
    return pi_tangle(rho)


def analytic_delta(kind: ChannelKind, r: float, ps: tuple, report: TangleReport) -> Optional[float]:
    """Largest |numeric - closed form| over the one-tangles and pi-tangle."""
    try:
        ones, pi = closed_form(AnalyticPoint(r, *ps, kind))
    except NoOracleCoverage:
        return None
    devs = [abs(a - b) for a, b in zip(report.one_tangles, ones)]
    devs.append(abs(report.pi_tangle - pi))
    return max(devs)


def _row_task(args) -> SweepRow:
    kind, mode, r, p, check = args
    spec = mode.at(kind, p)
    report = evaluate_point(kind, spec, r)
    ps = spec.effective_p()
    delta = analytic_delta(kind, r, ps, report) if check else None
    return SweepRow(kind, mode.label, r, p, ps, report, delta)


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """One row per (r, p) point, ordered by r then p.

    With ``cfg.workers > 1`` points are evaluated in a process pool; results
    are collected in grid order, so output does not depend on the worker
    count.
    """
    cfg.validate()
    tasks = [
        (cfg.kind, cfg.coupling, float(r), float(p), cfg.check_analytic)
        for r in cfg.r_grid
        for p in cfg.p_grid
    ]
    if cfg.workers == 1 or len(tasks) < 2:
        return [_row_task(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * cfg.workers))
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(_row_task, tasks, chunksize=chunk))


def _first_death(series, threshold: float) -> Optional[int]:
    if not series or series[0][1] <= threshold:
        return None
    for k, (_, v) in enumerate(series):
        if v <= threshold:
            return k
    return None


def detect_sudden_death(series, threshold: float = ZERO_THRESHOLD) -> Optional[float]:
    """First ``p`` where a series that started alive drops to ``threshold``.

    ``series`` is a p-sorted sequence of ``(p, value)``. The crossing is
    placed by linear interpolation between the bracketing grid points.
    """
    series = list(series)
    k = _first_death(series, threshold)
    if k is None:
        return None
    (pa, va), (pb, vb) = series[k - 1], series[k]
    if va == vb:
        return pb
    return pa + (va - threshold) / (va - vb) * (pb - pa)


def detect_rebirth(series, threshold: float = ZERO_THRESHOLD) -> Optional[float]:
    """First grid ``p`` after a detected death where the value revives."""
    series = list(series)
    k = _first_death(series, threshold)
    if k is None:
        return None
    for p, v in series[k + 1 :]:
        if v > threshold:
            return p
    return None


def series_of(rows: Sequence[SweepRow], quantity: str, r: Optional[float] = None) -> list:
    """``(p, value)`` pairs for ``quantity``, optionally restricted to one r."""
    return [(row.p, row.value(quantity)) for row in rows if r is None or row.r == r]


def format_number(x: float) -> str:
    """Positional decimal with 12 significant digits."""
    return np.format_float_positional(
        float(x), precision=12, unique=False, fractional=False, trim="-"
    )


def csv_fields(row: SweepRow) -> list[str]:
    rep = row.report
    nums = [row.r, *row.ps, *rep.one_tangles, *rep.two_tangles, rep.pi_tangle, rep.ckw_slack]
    delta = "" if row.analytic_delta is None else format_number(row.analytic_delta)
    return [row.kind.value, row.coupling, *map(format_number, nums), delta]


def emit_csv(rows: Sequence[SweepRow], path) -> None:
    """Write rows in sweep order under the fixed header."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER.split(","))
            for row in rows:
                w.writerow(csv_fields(row))
    except OSError as e:
        raise SweepIOError(f"cannot write CSV to {path}: {e.strerror or e}") from e


@dataclass
class Deviation:
    quantity: str
    max_abs: float = 0.0
    argmax: Optional[tuple] = None


@dataclass
class OracleReport:
    """Max |numeric - closed form| per quantity, plus points without a closed form."""

    deviations: dict
    skipped: list
    checked: int
    tol: float = ORACLE_TOL

    @property
    def ok(self) -> bool:
        return all(d.max_abs <= self.tol for d in self.deviations.values())

    def worst(self) -> Deviation:
        return max(self.deviations.values(), key=lambda d: d.max_abs)

    def format(self) -> str:
        lines = [f"oracle comparison: {self.checked} points checked, {len(self.skipped)} skipped"]
        for d in self.deviations.values():
            flag = "ok" if d.max_abs <= self.tol else "EXCEEDS"
            where = ""
            if d.argmax is not None:
                r, ps = d.argmax
                where = f" at r={r:.6g}, p=({', '.join(f'{p:g}' for p in ps)})"
            lines.append(f"  {d.quantity:7s} max|dev| = {d.max_abs:.3e}{where} [{flag}]")
        if self.skipped:
            pts = ", ".join(f"(r={r:.6g}, p={p:g})" for r, p in self.skipped[:5])
            more = " ..." if len(self.skipped) > 5 else ""
            lines.append(f"  no oracle coverage: {pts}{more}")
        return "\n".join(lines)


def compare_rows(rows: Sequence[SweepRow]) -> OracleReport:
    devs = {q: Deviation(q) for q in QUANTITIES}
    skipped = []
    checked = 0
    for row in rows:
        try:
            ones, pi = closed_form(AnalyticPoint(row.r, *row.ps, row.kind))
        except NoOracleCoverage:
            skipped.append((row.r, row.p))
            continue
        checked += 1
        for q, ref in zip(QUANTITIES, (*ones, pi)):
            dev = abs(row.value(q) - ref)
            if dev > devs[q].max_abs or devs[q].argmax is None:
                devs[q].max_abs = max(dev, devs[q].max_abs)
                devs[q].argmax = (row.r, row.ps)
    return OracleReport(devs, skipped, checked)


def compare_numeric_analytic(cfg: SweepConfig) -> OracleReport:
    """Cross-check the numeric pipeline against the closed forms over ``cfg``'s grid."""
    return compare_rows(run_sweep(cfg))


# figure name -> (channel, coupling modes, r values)
FIGURES = {
    "fig1a": (ChannelKind.PHASE_DAMPING, ("A",), (math.pi / 6,)),
    "fig1b": (ChannelKind.PHASE_DAMPING, ("collective",), (math.pi / 6,)),
    "fig2": (ChannelKind.PHASE_DAMPING, ("A", "collective"), (math.pi / 6, math.pi / 4)),
    "fig3a": (ChannelKind.PHASE_FLIP, ("A",), (math.pi / 6,)),
    "fig3b": (ChannelKind.PHASE_FLIP, ("collective",), (math.pi / 6, math.pi / 4)),
    "fig4": (ChannelKind.PHASE_FLIP, ("A", "collective"), (math.pi / 6, math.pi / 4)),
    "fig5a": (ChannelKind.BIT_FLIP, ("A",), (0.0, math.pi / 4)),
    "fig5b": (ChannelKind.BIT_FLIP, ("collective",), (0.0, math.pi / 4)),
    "fig6": (ChannelKind.BIT_FLIP, ("A",), (math.pi / 6,)),
    "fig7": (ChannelKind.BIT_FLIP, ("A", "collective"), (math.pi / 6, math.pi / 4)),
}


def figure_rows(name: str, p_grid=None, workers: int = 1) -> list[SweepRow]:
    kind, modes, rs = FIGURES[name]
    rows = []
    for mode in modes:
        cfg = SweepConfig(
            kind,
            CouplingMode.parse(mode),
            r_grid=rs,
            p_grid=tuple(p_grid) if p_grid is not None else default_p_grid(),
            workers=workers,
        )
        rows.extend(run_sweep(cfg))
    return rows


def write_figures(directory, p_grid=None, workers: int = 1) -> list[str]:
    """Write one CSV per figure into ``directory``; returns the paths."""
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        raise SweepIOError(f"cannot create {directory}: {e.strerror or e}") from e
    paths = []
    for name in FIGURES:
        path = os.path.join(directory, f"{name}.csv")
        emit_csv(figure_rows(name, p_grid, workers), path)
        paths.append(path)
    return paths


def summarize(rows: Sequence[SweepRow], threshold: float = ZERO_THRESHOLD) -> str:
    """Plain-text report: death/rebirth per r, CKW and two-tangle extremes."""
    if not rows:
        return "no rows"
    lines = [f"{rows[0].kind.value}, coupling {rows[0].coupling}, {len(rows)} points"]
    for r in dict.fromkeys(row.r for row in rows):
        parts = []
        for q in QUANTITIES:
            s = series_of(rows, q, r)
            death = detect_sudden_death(s, threshold)
            reb = detect_rebirth(s, threshold)
            d = "none" if death is None else f"{death:.4f}"
            b = "" if reb is None else f", rebirth {reb:.4f}"
            parts.append(f"{q} death {d}{b}")
        lines.append(f"  r={r:.6f}: " + "; ".join(parts))
    min_ckw = min(row.report.ckw_slack for row in rows)
    max_two = max(max(row.report.two_tangles) for row in rows)
    lines.append(f"  min ckw_slack = {min_ckw:.3e}, max two-tangle = {max_two:.3e}")
    return "\n".join(lines)
