"""Bracketing scan and bisection for scalar equations, plus node counting."""
from __future__ import annotations

import math
from typing import Callable, List, NamedTuple, Sequence

import numpy as np

from .errors import YukawaError


class Bracket(NamedTuple):
    lo: float
    hi: float
    f_lo: float
    f_hi: float


def scan_brackets(f: Callable[[float], float], xs: Sequence[float], skip=(YukawaError,)) -> List[Bracket]:
    """Evaluate ``f`` on the ordered points ``xs`` and return every sign change.

    Points where ``f`` raises one of ``skip`` (or returns a non-finite value)
    break the scan: no bracket spans them.
    """
    out = []
    prev_x = prev_f = None
    for x in xs:
        try:
            fx = float(f(x))
        except skip:
            fx = math.nan
        if not math.isfinite(fx):
            prev_x = prev_f = None
            continue
        if prev_f is not None and (fx == 0.0 or (prev_f < 0) != (fx < 0)):
            out.append(Bracket(prev_x, x, prev_f, fx))
        prev_x, prev_f = x, fx
    return out


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float = None,
    rtol: float = 1e-12,
    ftol: float = 0.0,
    max_iter: int = 400,
) -> float:
    """Root of ``f`` in [lo, hi] by bisection.

    Stops when the bracket is narrower than ``rtol * max(|lo|, |hi|)``, when
    ``|f| <= ftol``, or when the bracket can no longer be split in floating
    point.
    """
    if f_lo is None:
        f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0 or abs(f_mid) <= ftol:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if abs(hi - lo) <= rtol * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def count_sign_changes(values, floor: float = 1e-9) -> int:
    """Number of sign changes in ``values``.

    Entries smaller than ``floor * max|values|`` are ignored, so roundoff in
    exponentially small tails does not register as nodes.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return 0
    scale = np.max(np.abs(v))
    if scale == 0:
        return 0
    signs = np.sign(v[np.abs(v) > floor * scale])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
