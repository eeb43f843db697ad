"""Special functions for the analytic wavefunctions.

Everything here is real-valued and terminating: log-gamma for positive
arguments, the Euler beta function, Jacobi polynomials by their three-term
recurrence and the Gauss series 2F1(-n, b; c; x), which is a polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidJacobiParametersError, PoleError

# B_2k / (2k (2k - 1)) for k = 1..10
_STIRLING_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_MIN = 10.0


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``.

    Arguments below 10 are shifted upward with the functional equation; the
    Stirling series is then truncated after ten terms, whose remainder is
    below double precision at ``x >= 10``.
    """
    x = float(x)
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"ln_gamma requires a finite x > 0, got {x!r}")
    if x == int(x) and x <= 30:
        return math.log(math.factorial(int(x) - 1))
    shift = 1.0
    while x < _STIRLING_MIN:
        shift *= x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    for coeff in reversed(_STIRLING_COEFFS):
        series = series * inv2 + coeff
    series *= inv
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + series - math.log(shift)


def ln_beta(p: float, q: float) -> float:
    if p <= 0 or q <= 0:
        raise DomainError(f"beta function requires p, q > 0, got ({p!r}, {q!r})")
    return ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)


def beta_function(p: float, q: float) -> float:
    """Gamma(p) Gamma(q) / Gamma(p + q), assembled in log space."""
    return math.exp(ln_beta(p, q))


def ln_pochhammer(x: float, n: int) -> float:
    """log of the rising factorial (x)_n for x > 0."""
    return ln_gamma(x + n) - ln_gamma(x)


@dataclass(frozen=True)
class JacobiParams:
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise InvalidJacobiParametersError(f"degree must be a non-negative integer, got {self.n!r}")
        if not (self.alpha > -1 and self.beta > -1):
            raise InvalidJacobiParametersError(
                f"Jacobi parameters must exceed -1, got alpha={self.alpha!r}, beta={self.beta!r}"
            )

    def __call__(self, x):
        return jacobi_poly(self.n, self.alpha, self.beta, x)


def jacobi_poly(n: int, alpha: float, beta: float, x):
    """P_n^(alpha, beta)(x) by upward recurrence in the degree.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    JacobiParams(n, alpha, beta)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    ab = alpha + beta
    p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0
    a2b2 = alpha * alpha - beta * beta
    for k in range(2, n + 1):
        s = 2 * k + ab
        lead = 2.0 * k * (k + ab) * (s - 2.0)
        mid = (s - 1.0) * (s * (s - 2.0) * x + a2b2)
        tail = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s
        p_prev, p = p, (mid * p - tail * p_prev) / lead
    return p if p.ndim else float(p)


def hyp2f1_terminating(n: int, b: float, c: float, x):
    """2F1(-n, b; c; x) as the finite sum of its n + 1 nonzero terms."""
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if c <= 0 and c == int(c) and c >= -n:
        raise PoleError(f"c = {c!r} is a pole of 2F1(-{n}, b; c; x)")
    x = np.asarray(x, dtype=float)
    term = np.ones_like(x)
    total = term.copy()
    for k in range(n):
        term = term * ((k - n) * (b + k) / ((c + k) * (k + 1.0))) * x
        total = total + term
    return total if total.ndim else float(total)
