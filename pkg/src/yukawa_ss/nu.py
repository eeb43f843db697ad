"""Parametric Nikiforov-Uvarov engine.

Solves equations of the form

    psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi'
          + (-A s^2 + B s - C) / (s^2 (1 - c3 s)^2) psi = 0

for any coefficient set, independent of the potential that produced it.
The derived constants c4..c13 give the quantization condition and the
wavefunction ``s^c12 (1 - c3 s)^c13 P_n^(c10, c11)(1 - 2 c3 s)``.

Template coefficients may be floats or ``mpmath.mpf``; the constants and the
quantization residual are computed in whichever arithmetic they arrive in.
c9 is a difference of large terms that is often zero analytically, and its
square root amplifies the cancellation error, so ill-conditioned templates
should be built in extended precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import (
    InvalidJacobiParametersError,
    NonNormalizableError,
    UnphysicalTemplateError,
)
from .specfun import hyp2f1_terminating, jacobi_poly, ln_gamma, ln_pochhammer


@dataclass(frozen=True)
class NuTemplate:
    c1: float
    c2: float
    c3: float
    A: float
    B: float
    C: float

    def __post_init__(self):
        if self.c3 == 0:
            raise UnphysicalTemplateError("templates with c3 = 0 are not supported")


@dataclass(frozen=True)
class NuConstants:
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float


def derive_constants(t: NuTemplate) -> NuConstants:
    """Constants c4..c13 of the template.

    Raises if the square-root arguments c8, c9 are negative or the Jacobi
    parameters c10, c11 fall to -1 or below. Positivity of c12 and c13 is
    checked later, by :func:`wavefunction_factors`.
    """
    c4 = 0.5 * (1.0 - t.c1)
    c5 = 0.5 * (t.c2 - 2.0 * t.c3)
    c6 = c5 * c5 + t.A
    c7 = 2.0 * c4 * c5 - t.B
    c8 = c4 * c4 + t.C
    c9 = t.c3 * (c7 + t.c3 * c8) + c6
    # a radicand that is zero analytically may come out slightly negative
    c8 = _clamp_roundoff(c8, abs(c4 * c4) + abs(t.C))
    c9 = _clamp_roundoff(c9, abs(t.c3 * c7) + abs(t.c3 * t.c3 * c8) + abs(c5 * c5) + abs(t.A))
    if c8 < 0 or c9 < 0:
        raise UnphysicalTemplateError(f"negative radicand: c8={c8!r}, c9={c9!r}")
    r8, r9 = _sqrt(c8), _sqrt(c9)
    c10 = t.c1 + 2.0 * c4 + 2.0 * r8 - 1.0
    c11 = 1.0 - t.c1 - 2.0 * c4 + (2.0 / t.c3) * r9
    c12 = c4 + r8
    c13 = -c4 + (r9 - c5) / t.c3
    if c10 <= -1 or c11 <= -1:
        raise InvalidJacobiParametersError(f"c10={c10!r}, c11={c11!r} must both exceed -1")
    if _tau_prime(t, c8, c9) >= 0:
        raise UnphysicalTemplateError("tau'(s) must be negative for a bound-state solution")
    return NuConstants(c4, c5, c6, c7, c8, c9, c10, c11, c12, c13)


def _sqrt(x):
    return mpmath.sqrt(x) if isinstance(x, mpmath.mpf) else math.sqrt(x)


def _clamp_roundoff(value, magnitude):
    eps = mpmath.mp.eps if isinstance(value, mpmath.mpf) else np.finfo(float).eps
    if value < 0 and -value <= 64 * eps * magnitude:
        return 0 * value
    return value


def _pi_polynomial(t: NuTemplate, k: NuConstants, s):
    return k.c4 + k.c5 * s - ((_sqrt(k.c9) + t.c3 * _sqrt(k.c8)) * s - _sqrt(k.c8))


def _k_constant(t: NuTemplate, k: NuConstants) -> float:
    return -(k.c7 + 2.0 * t.c3 * k.c8) - 2.0 * _sqrt(k.c8 * k.c9)


def _tau_polynomial(t: NuTemplate, k: NuConstants, s):
    slope = _sqrt(k.c9) + t.c3 * _sqrt(k.c8)
    return t.c1 + 2.0 * k.c4 - (t.c2 - 2.0 * k.c5) * s - 2.0 * (slope * s - _sqrt(k.c8))


def _tau_prime(t: NuTemplate, c8: float, c9: float) -> float:
    return -2.0 * t.c3 - 2.0 * (_sqrt(c9) + t.c3 * _sqrt(c8))


def quantization_residual(t: NuTemplate, k: NuConstants, n: int) -> float:
    """Left-hand side of the energy equation; zero for a bound state with ``n`` nodes."""
    r8, r9 = _sqrt(k.c8), _sqrt(k.c9)
    return (
        t.c2 * n
        - (2 * n + 1) * k.c5
        + (2 * n + 1) * (r9 + t.c3 * r8)
        + n * (n - 1) * t.c3
        + k.c7
        + 2.0 * t.c3 * k.c8
        + 2.0 * _sqrt(k.c8 * k.c9)
    )


@dataclass(frozen=True)
class WavefunctionFactors:
    """Exponents of rho(s) and phi(s) and the Jacobi parameters of y_n(s)."""

    c3: float
    rho_exponents: tuple
    phi_exponents: tuple
    jacobi: tuple

    def hypergeometric_params(self, n: int) -> tuple:
        """(a, b, c) of the equivalent 2F1(-n, 1 + c10 + c11 + n; c10 + 1; c3 s)."""
        c10, c11 = self.jacobi
        return (-n, 1.0 + c10 + c11 + n, c10 + 1.0)

    def weight(self, s):
        """rho(s) = s^c10 (1 - c3 s)^c11."""
        s = np.asarray(s, dtype=float)
        p, q = self.rho_exponents
        return s**p * (1.0 - self.c3 * s) ** q

    def evaluate(self, s, n: int, norm: float = 1.0, form: str = "jacobi"):
        """Wavefunction at ``s`` in [0, 1/c3], scaled by ``norm``.

        ``form="jacobi"`` uses P_n^(c10,c11)(1 - 2 c3 s). ``form="hypergeometric"``
        uses the 2F1 series, which differs from the Jacobi form by the constant
        factor (c10 + 1)_n / n!.
        """
        s_in = np.asarray(s, dtype=float)
        s = np.atleast_1d(s_in)
        p, q = self.phi_exponents
        envelope = np.zeros_like(s)
        inside = (s > 0) & (self.c3 * s < 1)
        log_env = p * np.log(s[inside]) + q * np.log1p(-self.c3 * s[inside])
        envelope[inside] = np.exp(log_env)
        if form == "jacobi":
            poly = jacobi_poly(n, *self.jacobi, 1.0 - 2.0 * self.c3 * s)
        elif form == "hypergeometric":
            poly = hyp2f1_terminating(n, *self.hypergeometric_params(n)[1:], self.c3 * s)
        else:
            raise ValueError(f"unknown form {form!r}")
        out = norm * envelope * poly
        return out.reshape(s_in.shape) if s_in.ndim else float(out[0])

    def jacobi_to_hypergeometric_ratio(self, n: int) -> float:
        """(c10 + 1)_n / n!, the factor relating the two polynomial forms."""
        return math.exp(ln_pochhammer(self.jacobi[0] + 1.0, n) - ln_gamma(n + 1.0))


def wavefunction_factors(t: NuTemplate, k: NuConstants) -> WavefunctionFactors:
    if not (k.c12 > 0 and k.c13 > 0):
        raise NonNormalizableError(f"c12={k.c12!r}, c13={k.c13!r} must both be positive")
    return WavefunctionFactors(
        c3=float(t.c3),
        rho_exponents=(float(k.c10), float(k.c11)),
        phi_exponents=(float(k.c12), float(k.c13)),
        jacobi=(float(k.c10), float(k.c11)),
    )
