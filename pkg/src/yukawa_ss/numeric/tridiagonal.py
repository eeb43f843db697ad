"""Symmetric tridiagonal eigensolver: Sturm counts, bisection, inverse iteration.

Operators may carry a positive diagonal weight ``W``, in which case the
eigenproblem is the pencil ``T v = lam W v``. The inertia of ``T - sigma W``
still counts the eigenvalues below ``sigma``, so the Sturm machinery is the
same as for the standard problem.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from ..errors import DomainError, NumericalError

_TINY = np.finfo(float).tiny


class TridiagonalOperator:
    """Symmetric tridiagonal ``T`` with optional diagonal weight ``W`` (default identity)."""

    def __init__(self, diag, offdiag, weight=None):
        self.diag = np.ascontiguousarray(diag, dtype=float)
        self.offdiag = np.ascontiguousarray(offdiag, dtype=float)
        m = self.diag.size
        if m < 1 or self.offdiag.size != m - 1:
            raise DomainError(f"need m >= 1 diagonal and m - 1 off-diagonal entries, got {m} and {self.offdiag.size}")
        if weight is None:
            weight = np.ones(m)
        self.weight = np.ascontiguousarray(weight, dtype=float)
        if self.weight.shape != self.diag.shape or np.any(self.weight <= 0):
            raise DomainError("weight must be positive with one entry per row")
        if not (np.all(np.isfinite(self.diag)) and np.all(np.isfinite(self.offdiag))):
            raise DomainError("operator entries must be finite")

    @property
    def size(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        """Dense T (small operators and tests only)."""
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def matvec(self, v):
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def gershgorin(self):
        """Interval containing every eigenvalue of the pencil."""
        e = np.abs(self.offdiag)
        s = np.sqrt(self.weight)
        radius = np.zeros_like(self.diag)
        radius[:-1] += e / (s[:-1] * s[1:])
        radius[1:] += e / (s[:-1] * s[1:])
        centre = self.diag / self.weight
        return float(np.min(centre - radius)), float(np.max(centre + radius))

    def sturm_count(self, sigma: float) -> int:
        """Number of eigenvalues strictly below ``sigma``."""
        return int(_sturm_count(self.diag, self.offdiag, self.weight, float(sigma), self._pivmin()))

    def _pivmin(self) -> float:
        e2 = float(np.max(self.offdiag**2)) if self.offdiag.size else 0.0
        return _TINY * max(1.0, e2)


@njit(cache=True)
def _sturm_count(d, e, w, sigma, pivmin):
    count = 0
    p = d[0] - sigma * w[0]
    if abs(p) < pivmin:
        p = -pivmin
    if p < 0:
        count += 1
    for i in range(1, d.size):
        p = d[i] - sigma * w[i] - e[i - 1] * e[i - 1] / p
        if abs(p) < pivmin:
            p = -pivmin
        if p < 0:
            count += 1
    return count


@njit(cache=True)
def _bisect_kth(d, e, w, k, lo, hi, rtol, pivmin):
    # invariant: count(lo) < k <= count(hi)
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if hi - lo <= rtol * max(abs(lo), abs(hi)):
            break
        if _sturm_count(d, e, w, mid, pivmin) >= k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def kth_eigenvalue(op: TridiagonalOperator, k: int, rtol: float = 1e-12, bracket=None) -> float:
    """k-th smallest eigenvalue (k = 1 is the lowest) by Sturm bisection.

    ``bracket=(lo, hi)`` narrows the search if it is known to contain the
    eigenvalue; otherwise the Gershgorin interval is used.
    """
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= op.size:
        raise DomainError(f"k must be in 1..{op.size}, got {k!r}")
    g_lo, g_hi = op.gershgorin()
    span = max(abs(g_lo), abs(g_hi), 1.0)
    lo, hi = g_lo - 1e-12 * span, g_hi + 1e-12 * span
    if bracket is not None:
        b_lo, b_hi = bracket
        if op.sturm_count(b_lo) < k <= op.sturm_count(b_hi):
            lo, hi = b_lo, b_hi
    return float(_bisect_kth(op.diag, op.offdiag, op.weight, int(k), lo, hi, rtol, op._pivmin()))


@njit(cache=True)
def _shifted_solve(d, e, w, sigma, rhs, guard):
    # Thomas algorithm for (T - sigma W) x = rhs; zero pivots are nudged to ``guard``
    m = d.size
    c = np.empty(m)
    x = np.empty(m)
    piv = d[0] - sigma * w[0]
    if piv == 0.0:
        piv = guard
    c[0] = e[0] / piv if m > 1 else 0.0
    x[0] = rhs[0] / piv
    for i in range(1, m):
        piv = d[i] - sigma * w[i] - e[i - 1] * c[i - 1]
        if piv == 0.0:
            piv = guard
        if i < m - 1:
            c[i] = e[i] / piv
        x[i] = (rhs[i] - e[i - 1] * x[i - 1]) / piv
    for i in range(m - 2, -1, -1):
        x[i] -= c[i] * x[i + 1]
    return x


def eigenvector(op: TridiagonalOperator, lam: float, seed: int = 12345, max_iter: int = 20, tol: float = 1e-10):
    """Eigenvector for the eigenvalue ``lam`` by inverse iteration.

    Normalized so that sum(W v^2) = 1, with the sign chosen to make the
    largest-magnitude entry positive. The start vector comes from a fixed
    seed, so results are reproducible.
    """
    lam = float(lam)
    guard = 1e-12 * max(abs(lam), 1.0)
    w = op.weight
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(op.size)
    v /= np.sqrt(np.sum(w * v * v))
    for _ in range(max_iter):
        x = _shifted_solve(op.diag, op.offdiag, w, lam, w * v, guard)
        norm = np.sqrt(np.sum(w * x * x))
        if not (np.isfinite(norm) and norm > 0):
            # exactly singular shift: nudge and retry
            lam += guard
            continue
        x /= norm
        if np.dot(w * x, v) < 0:
            x = -x
        change = np.sqrt(np.sum(w * (x - v) ** 2))
        v = x
        if change <= tol:
            break
    else:
        raise NumericalError(f"inverse iteration did not converge at lambda={lam!r}")
    if v[np.argmax(np.abs(v))] < 0:
        v = -v
    return v
