"""Command-line interface.

Exit codes: 0 success, 1 invalid input or solver error, 2 comparison failure.
"""
from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import analytic, golden, numeric, report
from .errors import YukawaError
from .model import PARAM_KEYS, PhysicalParams, read_params_file, yukawa_potential

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2

METHODS = ("ss-analytic", "ss-numeric", "nr-analytic", "nr-numeric", "coulomb")


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 for comparison failures only
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".9g")


def _csv_writer(stream):
    return csv.writer(stream, lineterminator="\n")


def _add_param_flags(p, a_default=None):
    g = p.add_argument_group("physical parameters (override --params)")
    g.add_argument("--m1", type=float)
    g.add_argument("--m2", type=float)
    g.add_argument("--V0", type=float)
    g.add_argument("--a", type=float, default=a_default)
    g.add_argument("--hbar", type=float)
    g.add_argument("--params", metavar="FILE", help="key=value file; '#' starts a comment")


def _add_grid_flags(p):
    g = p.add_argument_group("finite-difference grid")
    g.add_argument("--mesh", choices=("log", "uniform"), default="log",
                   help="log: r = exp(x) with a power-law inner boundary (default); uniform: r_i = i h")
    g.add_argument("--rmax", type=float, help="outer wall in fm (default max(200, 60 N^2 hbar^2/(mu V0)))")
    g.add_argument("--points", type=int, help="interior points (default 8000 log, 20000 uniform)")
    g.add_argument("--rmin", type=float, help="innermost log-grid radius (default 1e-6 hbar^2/(mu V0))")


def _add_state_flags(p):
    p.add_argument("--n", type=int, default=1, help="radial quantum number (node count)")
    p.add_argument("--l", type=int, default=0, help="orbital angular momentum")


def _params(args) -> PhysicalParams:
    values = read_params_file(args.params) if args.params else {}
    for key in PARAM_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return PhysicalParams.from_mapping(values)


def _grid(args, n, l, params):
    return numeric.default_grid(n, l, params, kind=args.mesh, r_max=args.rmax, m_points=args.points, r_min=args.rmin)


def _solve(args, params):
    n, l = args.n, args.l
    if args.method == "ss-analytic":
        return analytic.solve_ss_energy(n, l, params, tol=args.tol, v0_energy_radical=args.v0_energy_radical), None
    if args.method == "nr-analytic":
        return analytic.schrodinger_energy(n, l, params), None
    if args.method == "coulomb":
        return analytic.schrodinger_energy(n, l, params.replace(a=0.0)), None
    grid = _grid(args, n, l, params)
    if args.method == "ss-numeric":
        return numeric.solve_ss_numeric(n, l, params, grid), grid
    return numeric.solve_schrodinger_numeric(n, l, params, grid), grid


def cmd_solve(args, out) -> int:
    params = _params(args)
    state, grid = _solve(args, params)
    lines = [
        ("method", args.method),
        ("provenance", str(state.provenance)),
        ("n", state.n),
        ("l", state.l),
        ("energy", _fmt(state.energy)),
        ("binding_energy", _fmt(state.binding_energy)),
    ]
    for key, value in (("nu", state.nu), ("epsilon", state.epsilon), ("lambda", state.lam),
                       ("norm_constant", state.norm_constant)):
        if value is not None:
            lines.append((key, _fmt(value)))
    if grid is not None:
        lines += [("mesh", grid.kind), ("rmax", _fmt(grid.r_max)), ("points", grid.m_points)]
    for key, value in lines:
        out.write(f"{key}={value}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    base = _params(args)
    rep = report.build_report(args.which, base, with_numeric=not args.no_numeric, grid_kind=args.mesh)
    records = list(report.report_records(rep))
    if args.format == "csv":
        w = _csv_writer(out)
        w.writerow(report.REPORT_COLUMNS)
        w.writerows(records)
        for line in report.summary_lines(rep):
            sys.stderr.write(line + "\n")
    else:
        widths = [max(len(c), *(len(r[i]) for r in records)) for i, c in enumerate(report.REPORT_COLUMNS)]
        rows = [report.REPORT_COLUMNS] + records
        for r in rows:
            out.write("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() + "\n")
        for line in report.summary_lines(rep):
            out.write(line + "\n")
    return rep.exit_code()


def _first_lobe_positive(psi):
    psi = np.asarray(psi, dtype=float)
    big = np.abs(psi) > 1e-6 * np.max(np.abs(psi))
    if big.any() and psi[np.argmax(big)] < 0:
        return -psi
    return psi


def cmd_wavefunction(args, out) -> int:
    params = _params(args)
    n, l = args.n, args.l
    grid = _grid(args, n, l, params)
    if args.method == "ss":
        exact = analytic.solve_ss_energy(n, l, params, tol=args.tol)
        wave = analytic.ss_wavefunction
        fd = numeric.solve_ss_numeric(n, l, params, grid)
    else:
        exact = analytic.schrodinger_energy(n, l, params)
        wave = analytic.schrodinger_wavefunction
        fd = numeric.solve_schrodinger_numeric(n, l, params, grid)
    r_end = args.rmax if args.rmax is not None else min(grid.r_max, analytic.decay_radius(exact, params, digits=25.0))
    r = np.linspace(0.0, r_end, args.samples)
    psi_a = _first_lobe_positive(wave(r, exact, params))
    psi_n = _first_lobe_positive(np.interp(r, np.r_[0.0, fd.grid_r], np.r_[0.0, fd.grid_psi], right=0.0))
    w = _csv_writer(out)
    w.writerow(("r", "psi_analytic", "psi_numeric"))
    for row in zip(r, psi_a, psi_n):
        w.writerow([_fmt(v) for v in row])
    return EXIT_OK


def cmd_potential(args, out) -> int:
    params = _params(args)
    if not 0 < args.r_from < args.r_to:
        raise YukawaError(f"need 0 < --from < --to, got {args.r_from!r}, {args.r_to!r}")
    r = np.geomspace(args.r_from, args.r_to, args.samples)
    v = np.atleast_1d(yukawa_potential(r, params))
    ga = np.atleast_1d(analytic.greene_aldrich_potential(r, params))
    w = _csv_writer(out)
    w.writerow(("r", "V_yukawa", "V_greene_aldrich", "ratio"))
    for row in zip(r, v, ga, ga / v):
        w.writerow([_fmt(x) for x in row])
    return EXIT_OK


def cmd_dump_golden(args, out) -> int:
    w = _csv_writer(out)
    if args.which == "percent":
        w.writerow(("a", "n", "l", "quoted_percent", "recomputed_percent"))
        for a, quoted in golden.QUOTED_PERCENT_ERRORS.items():
            for (n, l), q in quoted.items():
                row = golden.golden_row(1, n, l, a)
                w.writerow((_fmt(a), n, l, _fmt(q), _fmt(golden.percent_error(row.approx, row.numeric))))
        return EXIT_OK
    w.writerow(("table", "n", "l", "a", "approx", "numeric"))
    tables = (1, 2) if args.which == "all" else (int(args.which),)
    for t in tables:
        for row in golden.TABLES[t]:
            w.writerow((t, row.n, row.l, _fmt(row.a), _fmt(row.approx), _fmt(row.numeric)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="yukawa-ss", description="Bound states of the Yukawa potential: SS and Schrodinger.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one state and print key=value lines")
    _add_state_flags(p)
    p.add_argument("--method", choices=METHODS, default="ss-analytic")
    p.add_argument("--tol", type=float, default=1e-12, help="residual tolerance of the analytic root")
    p.add_argument("--v0-energy-radical", action="store_true",
                   help="use (V0 + E/2 m_tilde) in the second radical of the SS condition")
    _add_param_flags(p)
    _add_grid_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="regenerate a binding-energy table and compare with the embedded values")
    p.add_argument("which", type=int, choices=(1, 2), help="1: SS table, 2: Schrodinger table")
    p.add_argument("--no-numeric", action="store_true", help="skip the finite-difference column")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    _add_param_flags(p)
    p.add_argument("--mesh", choices=("log", "uniform"), default="log")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("wavefunction", help="CSV of analytic and finite-difference wavefunctions")
    _add_state_flags(p)
    p.add_argument("--method", choices=("ss", "nr"), default="ss")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--samples", type=int, default=2001)
    _add_param_flags(p)
    _add_grid_flags(p)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("potential", help="CSV of the Yukawa potential and its Greene-Aldrich form")
    p.add_argument("--from", dest="r_from", type=float, default=0.01)
    p.add_argument("--to", dest="r_to", type=float, default=500.0)
    p.add_argument("--samples", type=int, default=400)
    _add_param_flags(p)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("dump-golden", help="CSV of the embedded reference tables")
    p.add_argument("--which", choices=("1", "2", "all", "percent"), default="all")
    p.set_defaults(func=cmd_dump_golden)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except YukawaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
