"""``sweep`` command-line entry point.

Exit codes: 0 success, 2 configuration error, 3 closed-form deviation above
tolerance (only with ``--check-analytic``), 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

from .channels import ChannelKind
from .constants import ZERO_THRESHOLD
from .sweep import (
    DEFAULT_R_GRID,
    ConfigError,
    CouplingMode,
    SweepConfig,
    SweepIOError,
    compare_rows,
    emit_csv,
    run_sweep,
    summarize,
    write_figures,
)

EXIT_OK, EXIT_CONFIG, EXIT_ORACLE, EXIT_IO = 0, 2, 3, 4

_PI_TERM = re.compile(r"^(?:(?P<num>[0-9.eE+-]+)\s*\*?\s*)?pi(?:\s*/\s*(?P<den>[0-9.eE+]+))?$")


def parse_value(tok: str) -> float:
    """A float, or a multiple of pi such as ``pi/6`` or ``3*pi/4``."""
    t = tok.strip().lower()
    m = _PI_TERM.match(t)
    if m:
        num = float(m.group("num")) if m.group("num") else 1.0
        den = float(m.group("den")) if m.group("den") else 1.0
        return num * math.pi / den
    return float(t)


def parse_r_grid(text: str) -> tuple:
    if text.strip().lower() == "default":
        return DEFAULT_R_GRID
    try:
        return tuple(parse_value(t) for t in text.split(",") if t.strip())
    except ValueError as e:
        raise ConfigError("r_grid", f"cannot parse {text!r}: {e}") from None


def parse_p_grid(text: str) -> tuple:
    """``start:stop:step`` (stop included) or a comma list."""
    try:
        if ":" in text:
            start, stop, step = (float(x) for x in text.split(":"))
            if step <= 0:
                raise ConfigError("p_grid", f"step must be positive, got {step}")
            n = int(math.floor((stop - start) / step + 1e-9))
            return tuple(round(start + i * step, 12) for i in range(n + 1))
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError("p_grid", f"cannot parse {text!r}: {e}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sweep",
        description="Tangles of a Rindler GHZ state under local Kraus noise over an (r, p) grid.",
    )
    ap.add_argument("--channel", required=True, choices=[k.value for k in ChannelKind])
    ap.add_argument(
        "--coupling",
        required=True,
        help="a | b | c | collective | explicit:p0,p1,p2 (entries: number, 'p' to sweep, '-' uncoupled)",
    )
    ap.add_argument("--r-grid", default="default", help="comma list (pi/6 allowed) or 'default'")
    ap.add_argument("--p-grid", default="0:1:0.01", help="start:stop:step or comma list")
    ap.add_argument("--out", required=True, help="CSV output path")
    ap.add_argument("--check-analytic", action="store_true")
    ap.add_argument("--figures", metavar="DIR", help="also write fig1a.csv ... fig7.csv here")
    ap.add_argument("--zero-threshold", type=float, default=ZERO_THRESHOLD)
    ap.add_argument("--workers", type=int, default=1)
    return ap


def config_from_args(ns: argparse.Namespace) -> SweepConfig:
    cfg = SweepConfig(
        kind=ChannelKind.parse(ns.channel),
        coupling=CouplingMode.parse(ns.coupling),
        r_grid=parse_r_grid(ns.r_grid),
        p_grid=parse_p_grid(ns.p_grid),
        output_path=ns.out,
        check_analytic=ns.check_analytic,
        zero_threshold=ns.zero_threshold,
        workers=ns.workers,
    )
    return cfg.validate()


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ConfigError as e:
        print(f"sweep: config error in {e.field}: {e}", file=sys.stderr)
        return EXIT_CONFIG

    rows = run_sweep(cfg)
    try:
        emit_csv(rows, cfg.output_path)
        if ns.figures:
            write_figures(ns.figures, cfg.p_grid, cfg.workers)
    except SweepIOError as e:
        print(f"sweep: {e}", file=sys.stderr)
        return EXIT_IO

    print(summarize(rows, cfg.zero_threshold))
    if cfg.check_analytic:
        report = compare_rows(rows)
        print(report.format())
        if not report.ok:
            return EXIT_ORACLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
