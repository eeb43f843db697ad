"""Regenerate the binding-energy tables and compare them with the embedded values."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

from . import analytic, golden, numeric
from .errors import YukawaError
from .model import PhysicalParams

APPROX_TOL = 5e-4  # one unit in the fourth printed decimal
NUMERIC_REL_TOL = 0.05


@dataclass
class ComparisonRow:
    n: int
    l: int
    a: float
    approx: Optional[float] = None
    approx_golden: float = math.nan
    numeric: Optional[float] = None
    numeric_golden: float = math.nan
    # change of the FD binding energy when the grid spacing is halved
    numeric_grid_delta: Optional[float] = None
    # rigorous bounds on the binding energy of the exact problem
    binding_lower: Optional[float] = None
    binding_upper: Optional[float] = None
    error: Optional[str] = None

    @property
    def approx_dev(self) -> Optional[float]:
        return None if self.approx is None else abs(self.approx - self.approx_golden)

    @property
    def approx_ok(self) -> bool:
        return self.approx_dev is not None and self.approx_dev <= APPROX_TOL

    @property
    def numeric_rel_dev(self) -> Optional[float]:
        return None if self.numeric is None else abs(self.numeric - self.numeric_golden) / self.numeric_golden

    @property
    def numeric_ok(self) -> bool:
        return self.numeric_rel_dev is not None and self.numeric_rel_dev <= NUMERIC_REL_TOL

    @property
    def golden_outside_bounds(self) -> bool:
        below = self.binding_lower is not None and self.numeric_golden < self.binding_lower
        above = self.binding_upper is not None and self.numeric_golden > self.binding_upper
        return below or above

    @property
    def percent_error(self) -> Optional[float]:
        if self.approx is None or self.numeric is None:
            return None
        return golden.percent_error(self.approx, self.numeric)

    @property
    def percent_error_golden(self) -> float:
        return golden.percent_error(self.approx_golden, self.numeric_golden)


@dataclass
class ComparisonReport:
    table: int
    rows: List[ComparisonRow] = field(default_factory=list)
    with_numeric: bool = True

    @property
    def solver_failures(self) -> int:
        return sum(r.error is not None for r in self.rows)

    @property
    def approx_failures(self) -> int:
        return sum(not r.approx_ok for r in self.rows)

    @property
    def numeric_failures(self) -> int:
        return sum(not r.numeric_ok for r in self.rows) if self.with_numeric else 0

    def exit_code(self) -> int:
        if self.solver_failures:
            return 1
        return 2 if self.approx_failures or self.numeric_failures else 0


def schrodinger_binding_bounds(n: int, l: int, params: PhysicalParams) -> tuple:
    """(lower, upper) bounds on the Yukawa Schrodinger binding energy.

    1 - a r <= exp(-a r) <= 1 puts the Yukawa well between the Coulomb well
    and the Coulomb well shifted up by a V0, so each level's binding lies in
    [B_C - a V0, B_C] with B_C = mu V0^2 / (2 hbar^2 N^2).
    """
    coulomb = -analytic.coulomb_energy(n, l, params)
    return coulomb - params.a * params.V0, coulomb


def ss_binding_upper_bound(n: int, l: int, params: PhysicalParams) -> float:
    """Binding of the unscreened SS problem.

    For fixed E every screened term of the SS operator is less attractive
    than its unscreened counterpart, so screening can only lower the binding.
    """
    return -analytic.ss_coulomb_energy(n, l, params)


def _solve_row(table: int, row: golden.GoldenRow, base: PhysicalParams, with_numeric: bool, grid_kind: str):
    params = base.replace(a=row.a)
    out = ComparisonRow(row.n, row.l, row.a, approx_golden=row.approx, numeric_golden=row.numeric)
    try:
        if table == 1:
            out.approx = -analytic.solve_ss_energy(row.n, row.l, params).energy
            out.binding_upper = ss_binding_upper_bound(row.n, row.l, params)
            solver = numeric.solve_ss_numeric
        else:
            out.approx = -analytic.schrodinger_energy(row.n, row.l, params).energy
            out.binding_lower, out.binding_upper = schrodinger_binding_bounds(row.n, row.l, params)
            solver = numeric.solve_schrodinger_numeric
        if with_numeric:
            grid = numeric.default_grid(row.n, row.l, params, kind=grid_kind)
            out.numeric = -solver(row.n, row.l, params, grid).energy
            out.numeric_grid_delta = abs(-solver(row.n, row.l, params, grid.refined()).energy - out.numeric)
    except YukawaError as exc:
        out.error = f"{type(exc).__name__}: {exc}"
    return out


def build_report(table: int, base: Optional[PhysicalParams] = None, with_numeric: bool = True,
                 grid_kind: str = "log") -> ComparisonReport:
    """Recompute every row of ``table`` (1 = SS, 2 = Schrodinger) with ``base`` masses and V0.

    Row failures are recorded on the row and do not stop the table.
    """
    if table not in golden.TABLES:
        raise ValueError(f"table must be 1 or 2, got {table!r}")
    base = base or PhysicalParams()
    rows = [_solve_row(table, r, base, with_numeric, grid_kind) for r in golden.TABLES[table]]
    return ComparisonReport(table, rows, with_numeric)


def _fmt(x, spec=".9g"):
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    if isinstance(x, bool):
        return "yes" if x else "no"
    return format(x, spec)


REPORT_COLUMNS = (
    "n", "l", "a", "approx", "approx_golden", "approx_dev", "approx_ok",
    "numeric", "numeric_golden", "numeric_rel_dev", "numeric_ok", "numeric_grid_delta",
    "binding_lower", "binding_upper", "golden_outside_bounds", "percent_error", "percent_error_golden", "error",
)


def report_records(report: ComparisonReport):
    for r in report.rows:
        yield (
            str(r.n), str(r.l), _fmt(r.a), _fmt(r.approx), _fmt(r.approx_golden), _fmt(r.approx_dev),
            _fmt(r.approx_ok), _fmt(r.numeric), _fmt(r.numeric_golden), _fmt(r.numeric_rel_dev),
            _fmt(r.numeric_ok) if report.with_numeric else "", _fmt(r.numeric_grid_delta),
            _fmt(r.binding_lower), _fmt(r.binding_upper), _fmt(r.golden_outside_bounds),
            _fmt(r.percent_error), _fmt(r.percent_error_golden), r.error or "",
        )


def summary_lines(report: ComparisonReport) -> List[str]:
    total = len(report.rows)
    lines = [
        f"table={report.table}",
        f"rows={total}",
        f"solver_failures={report.solver_failures}",
        f"approx_within_tol={total - report.approx_failures}/{total}",
    ]
    if report.with_numeric:
        lines.append(f"numeric_within_5pct={total - report.numeric_failures}/{total}")
        outside = sum(r.golden_outside_bounds for r in report.rows)
        lines.append(f"golden_numeric_outside_bounds={outside}/{total}")
    return lines
