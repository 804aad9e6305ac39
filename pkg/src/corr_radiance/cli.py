"""Command-line front end: figure-data sweeps, the transition solver, and the
verification harness.

Every command renders a deterministic table (CSV or JSON) so downstream
plotting never needs this package.  Exit codes: 0 success, 1 bad arguments,
2 verification failure, 3 output I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import verify as verify_mod
from .correlations import discord_to_c
from .emission import (
    DetectionGeometry,
    classify,
    find_statistics_transition,
    g2_closed_werner,
    intensity_closed_x,
)
from .qstate import XStateParams

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

COMMANDS = ("fig2", "fig3", "fig4", "fig5", "transition", "verify")

# band around g2 = 1 treated as an exact crossing in the fig5 marker
_CROSSING_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    command: str
    kl: float = math.pi
    grid_d: int = 101
    grid_b: int = 101
    sin_beta: float = 0.2
    format: str = "csv"
    out: str | None = None
    tol_scale: float = 1.0

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if not (math.isfinite(self.kl) and self.kl > 1.0):
            raise ValueError(f"--kl must be finite and exceed 1, got {self.kl}")
        if self.grid_d < 2:
            raise ValueError(f"--grid-d needs at least 2 samples, got {self.grid_d}")
        if self.grid_b < 2:
            raise ValueError(f"--grid-b needs at least 2 samples, got {self.grid_b}")
        if not -1.0 <= self.sin_beta <= 1.0:
            raise ValueError(f"--sin-beta must lie in [-1, 1], got {self.sin_beta}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"--format must be csv or json, got {self.format!r}")
        if self.tol_scale < 0.0:
            raise ValueError(f"--tol-scale must be nonnegative, got {self.tol_scale}")


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple]


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _fmt(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, float):
        return f"{cell:.12g}"
    return str(cell)


def render_csv(table: Table) -> str:
    lines = [",".join(table.columns)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def render_json(table: Table, cfg: RunConfig) -> str:
    rows = []
    for row in table.rows:
        record = {}
        for name, cell in zip(table.columns, row):
            # round through the CSV formatting so both formats agree digit for digit
            record[name] = float(f"{cell:.12g}") if isinstance(cell, float) else cell
        rows.append(record)
    payload = {
        "config": {
            "command": cfg.command,
            "kl": cfg.kl,
            "grid_d": cfg.grid_d,
            "grid_b": cfg.grid_b,
            "sin_beta": cfg.sin_beta,
            "format": cfg.format,
        },
        "rows": rows,
    }
    return json.dumps(payload, indent=2) + "\n"


def render(table: Table, cfg: RunConfig) -> str:
    if cfg.format == "json":
        return render_json(table, cfg)
    return render_csv(table)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _discord_axis(cfg: RunConfig) -> list[tuple[float, float]]:
    return [(float(d), discord_to_c(float(d))) for d in np.linspace(0.0, 1.0, cfg.grid_d)]


def cmd_fig2(cfg: RunConfig) -> Table:
    """Intensity over the (discord, sin beta) plane for Werner states."""
    sin_betas = np.linspace(-1.0, 1.0, cfg.grid_b)
    geoms = [DetectionGeometry.from_sin_beta(cfg.kl, float(s)) for s in sin_betas]
    rows = []
    for d, c in _discord_axis(cfg):
        p = XStateParams(-c, -c, -c)
        for s, geom in zip(sin_betas, geoms):
            rows.append((d, c, float(s), intensity_closed_x(p, geom)))
    return Table(("D", "c", "sin_beta", "I"), rows)


def cmd_fig3(cfg: RunConfig) -> Table:
    """Intensity against discord along the two extreme observation angles."""
    geom_fwd = DetectionGeometry.from_sin_beta(cfg.kl, 1.0)
    geom_bwd = DetectionGeometry.from_sin_beta(cfg.kl, 0.0)
    rows = []
    for d, c in _discord_axis(cfg):
        p = XStateParams(-c, -c, -c)
        rows.append((d, c, intensity_closed_x(p, geom_fwd), intensity_closed_x(p, geom_bwd)))
    return Table(("D", "c", "I_sinb1", "I_sinb0"), rows)


def cmd_fig4(cfg: RunConfig) -> Table:
    """g2 over the (discord, sin beta) plane, flagging undefined points."""
    sin_betas = np.linspace(-1.0, 1.0, cfg.grid_b)
    geoms = [DetectionGeometry.from_sin_beta(cfg.kl, float(s)) for s in sin_betas]
    rows = []
    for d, c in _discord_axis(cfg):
        p = XStateParams(-c, -c, -c)
        for s, geom in zip(sin_betas, geoms):
            g2 = g2_closed_werner(c, geom)
            report = classify(intensity_closed_x(p, geom), g2)
            flag = "undefined" if g2 is None else ""
            rows.append((d, c, float(s), g2, report.statistics.value, flag))
    return Table(("D", "c", "sin_beta", "g2", "statistics", "flag"), rows)


def cmd_fig5(cfg: RunConfig) -> Table:
    """g2 against discord at a fixed angle, marking where it crosses 1."""
    geom = DetectionGeometry.from_sin_beta(cfg.kl, cfg.sin_beta)
    entries = []
    for d, c in _discord_axis(cfg):
        p = XStateParams(-c, -c, -c)
        g2 = g2_closed_werner(c, geom)
        report = classify(intensity_closed_x(p, geom), g2)
        entries.append((d, c, g2, report.statistics.value))

    marks = [""] * len(entries)
    previous_sign = None
    for i, (_, _, g2, _) in enumerate(entries):
        if g2 is None:
            continue
        if abs(g2 - 1.0) <= _CROSSING_TOL:
            sign = 0
            if i > 0:
                marks[i] = "crossing"
        else:
            sign = 1 if g2 > 1.0 else -1
            if previous_sign in (1, -1) and sign != previous_sign:
                marks[i] = "crossing"
        previous_sign = sign

    rows = []
    for (d, c, g2, statistics), mark in zip(entries, marks):
        flag = "undefined" if g2 is None else ""
        rows.append((d, c, g2, statistics, flag, mark))
    return Table(("D", "c", "g2", "statistics", "flag", "transition"), rows)


def cmd_transition(cfg: RunConfig) -> tuple[Table, str]:
    """Locate the statistics transition; reports status none when absent."""
    geom = DetectionGeometry.from_sin_beta(cfg.kl, cfg.sin_beta)
    point = find_statistics_transition(geom)
    if point is None:
        row = (cfg.kl, cfg.sin_beta, None, None, "none")
        summary = f"transition: none (kl={cfg.kl:.12g}, sin_beta={cfg.sin_beta:.12g})"
    else:
        row = (cfg.kl, cfg.sin_beta, point.c_star, point.discord, "ok")
        summary = (
            f"transition: c_star={point.c_star:.12g}, D_t={point.discord:.12g} "
            f"(kl={cfg.kl:.12g}, sin_beta={cfg.sin_beta:.12g})"
        )
    return Table(("kl", "sin_beta", "c_star", "D_t", "status"), [row]), summary


def cmd_verify(cfg: RunConfig) -> tuple[Table, list[str], bool]:
    """Run every cross-validation suite and tabulate the margins."""
    results = verify_mod.run_all(tol_scale=cfg.tol_scale)
    lines = []
    rows = []
    for r in results:
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{verdict} {r.name}: max deviation {r.max_deviation:.3g}"
            f" (tolerance {r.tolerance:.3g})"
        )
        rows.append((r.name, r.max_deviation, r.tolerance, verdict))
    table = Table(("suite", "max_deviation", "tolerance", "status"), rows)
    return table, lines, all(r.passed for r in results)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this front end reserves 2 for
    # verification failures, so route usage errors to exit code 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="corr-radiance",
        description="Sweep tables and verification for correlation-driven two-atom emission.",
    )
    parser.add_argument("command", choices=COMMANDS, help="which table or action to run")
    parser.add_argument("--kl", type=float, default=math.pi,
                        help="wave number times atom separation (default: pi)")
    parser.add_argument("--grid-d", type=int, default=101,
                        help="samples along the discord axis (default: 101)")
    parser.add_argument("--grid-b", type=int, default=101,
                        help="samples along the sin(beta) axis (default: 101)")
    parser.add_argument("--sin-beta", type=float, default=0.2,
                        help="fixed observation angle for fig5/transition (default: 0.2)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--tol-scale", type=float, default=1.0,
                        help="rescale verification tolerances; 0 is a harness self-test")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE

    cfg = RunConfig(
        command=args.command,
        kl=args.kl,
        grid_d=args.grid_d,
        grid_b=args.grid_b,
        sin_beta=args.sin_beta,
        format=args.format,
        out=args.out,
        tol_scale=args.tol_scale,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"corr-radiance: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    status = EXIT_OK
    if cfg.command == "fig2":
        table = cmd_fig2(cfg)
    elif cfg.command == "fig3":
        table = cmd_fig3(cfg)
    elif cfg.command == "fig4":
        table = cmd_fig4(cfg)
    elif cfg.command == "fig5":
        table = cmd_fig5(cfg)
    elif cfg.command == "transition":
        table, summary = cmd_transition(cfg)
        if cfg.out is not None:
            print(summary)
    else:
        table, lines, passed = cmd_verify(cfg)
        for line in lines:
            print(line)
        if not passed:
            status = EXIT_VERIFY
        if cfg.out is None:
            # the printed lines already carry the whole report
            return status

    try:
        _emit(render(table, cfg), cfg.out)
    except OSError as exc:
        print(f"corr-radiance: error: cannot write {cfg.out!r}: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
