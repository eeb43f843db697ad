"""Closed-form and transcendental spectra under the Greene-Aldrich approximation.

With s = exp(-2 a r) the approximated spinless Salpeter radial equation takes
the Nikiforov-Uvarov form with c1 = c2 = c3 = 1. The energy follows from

    sqrt(A(E)) - sqrt(C(E)) = n + nu + 1/2,

and the wavefunction is s^eps (1 - s)^(1/2 + nu) P_n^(2 eps, 2 nu)(1 - 2 s)
with eps = sqrt(C). Dropping the W^2 / (2 m_tilde) term gives the
nonrelativistic (Hulthen-like) closed forms.
"""
from __future__ import annotations

import logging
import math
from dataclasses import replace
from typing import NamedTuple

import mpmath
import numpy as np

from . import nu as nu_core
from .errors import BranchError, DomainError, NoBoundStateError, NumericalError, ParameterError
from .model import BoundState, PhysicalParams, Provenance, QuantumNumbers, nu_parameter
from .roots import bisect, count_sign_changes, scan_brackets
from .specfun import jacobi_poly, ln_beta, ln_gamma

log = logging.getLogger(__name__)

# exp() of anything below this underflows to zero in double precision
_LOG_UNDERFLOW = -745.0


class AbcCoefficients(NamedTuple):
    A: float
    B: float
    C: float


def _require_screening(params: PhysicalParams):
    if params.a <= 0:
        raise ParameterError("a = 0 makes the transformed equation singular; use coulomb_energy instead")


def abc_coefficients(E: float, l: int, params: PhysicalParams) -> AbcCoefficients:
    """A, B, C of -A s^2 + B s - C at trial energy ``E``."""
    _require_screening(params)
    if not E < 0:
        raise DomainError(f"trial energy must be negative, got {E!r}")
    return _abc(E, l, params.mu, params.a, params.m_tilde, params.V0, params.hbar)


def _abc(E, l, mu, a, mt, V0, hbar) -> AbcCoefficients:
    # plain arithmetic only, so mpmath numbers pass through unchanged
    k = mu / hbar**2
    shifted = V0 - E / (2 * a)
    A = k * shifted * (1 / a - shifted / mt)
    B = -l * (l + 1) + (k / a) * ((V0 - E / a) + (E / mt) * shifted)
    C = -k * E / (2 * a * a) * (1 + E / (2 * mt))
    return AbcCoefficients(A, B, C)


def yukawa_template(E: float, l: int, params: PhysicalParams, precise: bool = False) -> nu_core.NuTemplate:
    """NU template (c1 = c2 = c3 = 1) at trial energy ``E``.

    With ``precise=True`` the coefficients are mpmath numbers at the working
    precision of the caller's mpmath context.
    """
    if not precise:
        A, B, C = abc_coefficients(E, l, params)
        return nu_core.NuTemplate(1.0, 1.0, 1.0, A, B, C)
    _require_screening(params)
    if not E < 0:
        raise DomainError(f"trial energy must be negative, got {E!r}")
    mpf = mpmath.mpf
    # m_tilde and mu are rebuilt from the masses so they carry full precision
    m1, m2 = mpf(params.m1), mpf(params.m2)
    mu = m1 * m2 / (m1 + m2)
    mt = mpf(params.m_tilde_scale) * m1 * m2 * mu / (m1 * m2 - 3 * mu**2)
    A, B, C = _abc(mpf(E), l, mu, mpf(params.a), mt, mpf(params.V0), mpf(params.hbar))
    one = mpf(1)
    return nu_core.NuTemplate(one, one, one, A, B, C)


def epsilon(E: float, params: PhysicalParams) -> float:
    """Decay exponent in s of the SS wavefunction; equals sqrt(C(E))."""
    _require_screening(params)
    radicand = -(params.mu / (2.0 * params.hbar**2)) * (E / params.a**2) * (1.0 + E / (2.0 * params.m_tilde))
    if not (E < 0 and radicand > 0):
        raise BranchError(f"E={E!r} is outside the physical branch (epsilon would not be real and positive)")
    return math.sqrt(radicand)


def ss_energy_residual(E: float, n: int, l: int, params: PhysicalParams, v0_energy_radical: bool = False) -> float:
    """sqrt(A) - sqrt(C) - (n + nu + 1/2).

    The default second radical uses the factor (1 + E/2 m_tilde), consistent
    with C(E) and with epsilon. ``v0_energy_radical=True`` substitutes
    (V0 + E/2 m_tilde); the two agree only for V0 = 1.
    """
    A, _, C = abc_coefficients(E, l, params)
    if v0_energy_radical:
        C = -(params.mu / params.hbar**2) * E / (2.0 * params.a**2) * (params.V0 + E / (2.0 * params.m_tilde))
    if A < 0 or C < 0:
        raise BranchError(f"E={E!r} is outside the physical branch (A={A:.6g}, C={C:.6g})")
    return math.sqrt(A) - math.sqrt(C) - (n + nu_parameter(l, params) + 0.5)


def nu_energy_residual(E: float, n: int, l: int, params: PhysicalParams, precise: bool = True) -> float:
    """The same quantization condition, routed through the generic NU engine.

    For l = 0 the radicand c9 vanishes analytically and its square root turns
    double-precision cancellation into an O(1e-2) error, so by default the
    template is evaluated with 40 significant digits.
    """
    if not precise:
        t = yukawa_template(E, l, params)
        return float(nu_core.quantization_residual(t, nu_core.derive_constants(t), n))
    with mpmath.workdps(40):
        t = yukawa_template(E, l, params, precise=True)
        return float(nu_core.quantization_residual(t, nu_core.derive_constants(t), n))


def _ss_scan_window(params: PhysicalParams, points: int = 2000):
    lower = min(2.0 * params.m_tilde * 0.99, 2.0 * params.mu * params.V0**2 / params.hbar**2)
    return -np.logspace(math.log10(lower), -10.0, points)


def solve_ss_energy(
    n: int, l: int, params: PhysicalParams, tol: float = 1e-12, v0_energy_radical: bool = False
) -> BoundState:
    """Negative-energy root of the SS quantization condition for ``n`` radial nodes."""
    QuantumNumbers(n, l)
    _require_screening(params)
    nu = nu_parameter(l, params)

    def f(E):
        return ss_energy_residual(E, n, l, params, v0_energy_radical)

    brackets = scan_brackets(f, _ss_scan_window(params))
    if not brackets:
        raise NoBoundStateError(f"no sign change of the SS energy residual for n={n}, l={l}")
    if len(brackets) > 1:
        log.warning("SS residual for n=%d, l=%d changes sign %d times; taking the shallowest root", n, l, len(brackets))
    lo, hi, f_lo, _ = brackets[-1]
    E = bisect(f, lo, hi, f_lo, rtol=1e-15, ftol=tol * (n + nu + 0.5))

    eps = epsilon(E, params)
    t = yukawa_template(E, l, params)
    k = nu_core.derive_constants(t)
    if not math.isclose(k.c10, 2.0 * eps, rel_tol=1e-9, abs_tol=1e-9):
        raise NumericalError(f"c10={k.c10!r} differs from 2*epsilon={2 * eps!r}")
    state = BoundState(n, l, E, Provenance.ANALYTIC_SS, nu=nu, epsilon=eps)
    state = _with_norm(state, ss_norm_constant(state, params))
    nodes = count_nodes(ss_wavefunction, state, params)
    if nodes != n:
        raise NumericalError(f"SS root for n={n}, l={l} has {nodes} nodes")
    return state


def _with_norm(state: BoundState, norm: float) -> BoundState:
    return replace(state, norm_constant=norm)


def ss_log_norm_constant(state: BoundState, params: PhysicalParams) -> float:
    n, nu, eps = state.n, state.nu, state.epsilon
    if not (eps > 0 and nu >= 0):
        raise DomainError(f"normalization needs epsilon > 0 and nu >= 0, got {eps!r}, {nu!r}")
    log_sq = (
        math.log(2.0 * params.a * eps)
        + ln_gamma(n + 1.0)
        + math.log(2 * n + 2 * nu + 2 * eps + 1)
        + ln_gamma(n + 2 * nu + 2 * eps + 1)
        - math.log(n + nu + 0.5)
        - ln_gamma(n + 2 * nu + 1)
        - ln_gamma(n + 2 * eps + 1)
    )
    return 0.5 * log_sq


def ss_norm_constant(state: BoundState, params: PhysicalParams) -> float:
    return math.exp(ss_log_norm_constant(state, params))


def ss_ground_norm_constant(state: BoundState, params: PhysicalParams) -> float:
    """Ground-state (n = 0) normalization through the beta function B(2 eps, 2 nu + 1)."""
    nu, eps = state.nu, state.epsilon
    log_sq = math.log(params.a * (2 * nu + 2 * eps + 1) / (nu + 0.5)) - ln_beta(2 * eps, 2 * nu + 1)
    return math.exp(0.5 * log_sq)


def _jacobi_wavefunction(r, a, log_norm, n, decay, edge, alpha, beta):
    """log-space evaluation of N s^decay (1 - s)^edge P_n^(alpha, beta)(1 - 2 s), s = exp(-2 a r)."""
    r_in = np.asarray(r, dtype=float)
    r = np.atleast_1d(r_in)
    if np.any(r < 0):
        raise DomainError("wavefunctions are defined for r >= 0")
    out = np.zeros_like(r)
    pos = r > 0
    rp = r[pos]
    s = np.exp(-2.0 * a * rp)
    poly = np.atleast_1d(jacobi_poly(n, alpha, beta, 1.0 - 2.0 * s))
    with np.errstate(divide="ignore"):
        log_mag = log_norm - 2.0 * a * decay * rp + edge * np.log(-np.expm1(-2.0 * a * rp)) + np.log(np.abs(poly))
    vals = np.where(log_mag < _LOG_UNDERFLOW, 0.0, np.sign(poly) * np.exp(np.minimum(log_mag, 700.0)))
    out[pos] = vals
    return out.reshape(r_in.shape) if r_in.ndim else float(out[0])


def ss_wavefunction(r, state: BoundState, params: PhysicalParams):
    """Normalized SS radial function psi(r) (integral of psi^2 dr equals one)."""
    log_norm = ss_log_norm_constant(state, params)
    nu, eps = state.nu, state.epsilon
    return _jacobi_wavefunction(r, params.a, log_norm, state.n, eps, 0.5 + nu, 2 * eps, 2 * nu)


def decay_radius(state: BoundState, params: PhysicalParams, digits: float = 40.0) -> float:
    """Radius beyond which psi^2 has fallen by roughly exp(-digits) from its outer lobe."""
    exponent = state.epsilon if state.epsilon is not None else state.lam
    kappa = 2.0 * params.a * exponent
    edge = state.nu if state.nu is not None else state.l + 0.5
    return (3.0 * (state.n + edge + 1.0) + digits) / kappa


def count_nodes(wavefunction, state: BoundState, params: PhysicalParams, points: int = 20001) -> int:
    r = np.linspace(0.0, decay_radius(state, params), points)[1:]
    return count_sign_changes(wavefunction(r, state, params))


def schrodinger_energy(n: int, l: int, params: PhysicalParams) -> BoundState:
    """Nonrelativistic energy in the form tabulated alongside the SS spectrum.

    E = -a [ (hbar^2 a / 2 mu) N^2 + (mu / 2 hbar^2 a) V0^2 / N^2 - 2 V0 ],
    N = n + l + 1. Note the constant term is 2 a V0; the strict m_tilde -> inf
    limit of the SS condition gives a V0 instead (see
    :func:`schrodinger_energy_consistent`). At a = 0 the Coulomb energy is
    returned without wavefunction data.
    """
    QuantumNumbers(n, l)
    if params.a == 0:
        return BoundState(n, l, coulomb_energy(n, l, params), Provenance.ANALYTIC_NR)
    N = n + l + 1
    mu, a, hb2, V0 = params.mu, params.a, params.hbar**2, params.V0
    E = -a * (hb2 * a / (2.0 * mu) * N**2 + mu / (2.0 * hb2 * a) * V0**2 / N**2 - 2.0 * V0)
    return _nr_state(n, l, E, params)


def schrodinger_energy_consistent(n: int, l: int, params: PhysicalParams) -> BoundState:
    """m_tilde -> inf limit of the SS condition: the Hulthen-type spectrum.

    E = -(hbar^2 a^2 / 2 mu N^2) (mu V0 / (hbar^2 a) - N^2)^2, bound only while
    mu V0 / (hbar^2 a) > N^2.
    """
    QuantumNumbers(n, l)
    if params.a == 0:
        return BoundState(n, l, coulomb_energy(n, l, params), Provenance.ANALYTIC_NR)
    N = n + l + 1
    hb2 = params.hbar**2
    strength = params.mu * params.V0 / (hb2 * params.a)
    if strength <= N * N:
        raise NoBoundStateError(f"no bound state with N={N}: mu V0/(hbar^2 a) = {strength:.6g} <= N^2")
    E = -(hb2 * params.a**2 / (2.0 * params.mu * N * N)) * (strength - N * N) ** 2
    return _nr_state(n, l, E, params)


def _nr_state(n, l, E, params):
    if not E < 0:
        raise NoBoundStateError(f"nonrelativistic energy {E!r} is not negative for n={n}, l={l}")
    lam = math.sqrt(-params.mu * E / (2.0 * params.hbar**2)) / params.a
    state = BoundState(n, l, E, Provenance.ANALYTIC_NR, lam=lam)
    return _with_norm(state, schrodinger_norm_constant(state, params))


def schrodinger_log_norm_constant(state: BoundState, params: PhysicalParams) -> float:
    n, l, lam = state.n, state.l, state.lam
    if lam is None or not lam > 0:
        raise NoBoundStateError("normalization requires a bound nonrelativistic state with lambda > 0")
    log_sq = (
        math.log(4.0 * params.a * lam)
        + ln_gamma(n + 1.0)
        + math.log(n + l + lam + 1)
        + ln_gamma(n + 2 * l + 2 * lam + 2)
        - math.log(n + l + 1)
        - ln_gamma(n + 2 * l + 2.0)
        - ln_gamma(n + 2 * lam + 1)
    )
    return 0.5 * log_sq


def schrodinger_norm_constant(state: BoundState, params: PhysicalParams) -> float:
    return math.exp(schrodinger_log_norm_constant(state, params))


def schrodinger_wavefunction(r, state: BoundState, params: PhysicalParams):
    log_norm = schrodinger_log_norm_constant(state, params)
    lam, l = state.lam, state.l
    return _jacobi_wavefunction(r, params.a, log_norm, state.n, lam, l + 1.0, 2 * lam, 2 * l + 1.0)


def coulomb_energy(n: int, l: int, params: PhysicalParams) -> float:
    """-mu V0^2 / (2 hbar^2 N^2), N = n + l + 1."""
    QuantumNumbers(n, l)
    N = n + l + 1
    return -params.mu * params.V0**2 / (2.0 * params.hbar**2 * N * N)


def ss_coulomb_energy(n: int, l: int, params: PhysicalParams) -> float:
    """Exact SS energy of the unscreened (a = 0) problem, screening ignored.

    Without screening the SS radial equation is Coulombic with charge
    V0 (1 + E/m_tilde), energy E + E^2/(2 m_tilde) and principal number
    n + nu + 1/2, so E solves a quadratic; the root on the physical branch is
    taken in its cancellation-free form.
    """
    QuantumNumbers(n, l)
    big_n = n + nu_parameter(l, params) + 0.5
    mt = params.m_tilde
    c = (params.mu * params.V0) ** 2
    d = params.mu * params.hbar**2 * big_n**2
    A = c / mt**2 + d / mt
    B = 2.0 * c / mt + 2.0 * d
    return -2.0 * c / (B + math.sqrt(B * B - 4.0 * A * c))


def greene_aldrich_inverse(r, a: float):
    """2a exp(-ar) / (1 - exp(-2ar)), the short-range stand-in for 1/r."""
    r = np.asarray(r, dtype=float)
    return a / np.sinh(a * r)


def greene_aldrich_inverse_square(r, a: float):
    """4a^2 exp(-2ar) / (1 - exp(-2ar))^2, the short-range stand-in for 1/r^2."""
    return greene_aldrich_inverse(r, a) ** 2


def greene_aldrich_potential(r, params: PhysicalParams):
    """-2 a V0 exp(-2ar) / (1 - exp(-2ar)): the Yukawa potential as the approximation sees it."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("greene_aldrich_potential requires r > 0")
    if params.a == 0:
        value = -params.V0 / r_arr
    else:
        value = -2.0 * params.a * params.V0 / np.expm1(2.0 * params.a * r_arr)
    return float(value) if value.ndim == 0 else value
