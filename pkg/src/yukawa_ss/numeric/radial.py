"""Finite-difference bound states of the unapproximated radial equations.

The Schrodinger case is a linear eigenproblem. In the SS case the operator
depends on E, so the energy is the root of the secular function

    g(E) = lam_{n+1}(T(E)) - (2 mu / hbar^2) (E + E^2 / 2 m_tilde),

which decreases strictly in E on the physical branch E > -m_tilde.
Eigenvalue k = n + 1 is the state with n radial nodes.
"""
from __future__ import annotations

import logging
import math

import numpy as np

from .. import analytic
from ..errors import NoBoundStateError, NumericalError, YukawaError
from ..model import BoundState, PhysicalParams, Provenance, QuantumNumbers, nu_parameter
from ..roots import bisect, count_sign_changes, scan_brackets
from .grids import LogGrid, UniformGrid
from .tridiagonal import TridiagonalOperator, eigenvector, kth_eigenvalue

log = logging.getLogger(__name__)

DEFAULT_LOG_POINTS = 8000
DEFAULT_UNIFORM_POINTS = 20000


def default_r_max(n: int, l: int, params: PhysicalParams) -> float:
    """max(200, 60 N^2 a_B), with N = n + l + 1 and a_B the Coulomb length."""
    N = n + l + 1
    return max(200.0, 60.0 * N * N * params.bohr_radius)


def default_grid(n: int, l: int, params: PhysicalParams, kind: str = "log", r_max=None, m_points=None, r_min=None):
    r_max = default_r_max(n, l, params) if r_max is None else r_max
    if kind == "log":
        r_min = 1e-6 * params.bohr_radius if r_min is None else r_min
        return LogGrid(r_max, m_points or DEFAULT_LOG_POINTS, r_min)
    if kind == "uniform":
        return UniformGrid(r_max, m_points or DEFAULT_UNIFORM_POINTS)
    raise ValueError(f"unknown grid kind {kind!r}")


def _coupling(params: PhysicalParams) -> float:
    return 2.0 * params.mu / params.hbar**2


def _yukawa_well(params: PhysicalParams):
    V0, a = params.V0, params.a
    return lambda r: V0 * np.exp(-a * r) / r


def _ss_well(E: float, params: PhysicalParams):
    V0, a, mt = params.V0, params.a, params.m_tilde

    def q(r):
        screened = np.exp(-a * r)
        return V0 * screened / r * (1.0 + E / mt) + V0**2 * screened**2 / (2.0 * mt * r * r)

    return q


def build_schrodinger_operator(l: int, params: PhysicalParams, grid) -> TridiagonalOperator:
    """Operator whose eigenvalues are 2 mu E / hbar^2 for the Yukawa problem."""
    return grid.assemble(l, _coupling(params), _yukawa_well(params), l + 0.5)


def build_ss_operator(E: float, l: int, params: PhysicalParams, grid) -> TridiagonalOperator:
    """T(E) for the SS radial equation at trial energy ``E``."""
    return grid.assemble(l, _coupling(params), _ss_well(E, params), nu_parameter(l, params))


def _checked_state(n, l, E, op, lam, grid, provenance):
    psi = grid.wavefunction(eigenvector(op, lam))
    # the oscillation theorem fixes the sign of psi near the origin to that of the first lobe
    first = psi[np.argmax(np.abs(psi) > 1e-6 * np.max(np.abs(psi)))]
    if first < 0:
        psi = -psi
    nodes = count_sign_changes(psi)
    if nodes != n:
        raise NumericalError(f"eigenvector {n + 1} on {grid!r} has {nodes} sign changes, expected {n}")
    return BoundState(n, l, E, provenance, grid_r=grid.r.copy(), grid_psi=psi)


def solve_schrodinger_numeric(n: int, l: int, params: PhysicalParams, grid=None, rtol: float = 1e-12) -> BoundState:
    """Energy and wavefunction of the (n + 1)-th level of the Yukawa Schrodinger problem."""
    QuantumNumbers(n, l)
    grid = grid or default_grid(n, l, params)
    op = build_schrodinger_operator(l, params, grid)
    if n + 1 > op.size:
        raise NoBoundStateError(f"grid has only {op.size} levels")
    lam = kth_eigenvalue(op, n + 1, rtol=rtol)
    if lam >= 0:
        raise NoBoundStateError(
            f"state n={n}, l={l} is not bound on this grid (eigenvalue {lam:.3g} >= 0); try a larger r_max"
        )
    E = params.hbar**2 * lam / (2.0 * params.mu)
    return _checked_state(n, l, E, op, lam, grid, Provenance.NUMERIC_FD)


def _ss_target(E: float, params: PhysicalParams) -> float:
    return _coupling(params) * (E + E * E / (2.0 * params.m_tilde))


def ss_secular_value(E: float, n: int, l: int, params: PhysicalParams, grid, rtol: float = 1e-13) -> float:
    """g(E); a self-consistent SS bound state is a root."""
    if not E < 0:
        raise ValueError(f"trial energy must be negative, got {E!r}")
    op = build_ss_operator(E, l, params, grid)
    return kth_eigenvalue(op, n + 1, rtol=rtol) - _ss_target(E, params)


def ss_secular_sign(E: float, n: int, l: int, params: PhysicalParams, grid) -> float:
    """Sign of g(E) from a single Sturm count: +1 when fewer than n + 1 levels lie below the target."""
    if not E < 0:
        raise ValueError(f"trial energy must be negative, got {E!r}")
    op = build_ss_operator(E, l, params, grid)
    return 1.0 if op.sturm_count(_ss_target(E, params)) <= n else -1.0


def _energy_estimate(n: int, l: int, params: PhysicalParams) -> float:
    try:
        return analytic.solve_ss_energy(n, l, params).energy
    except YukawaError:
        return analytic.coulomb_energy(n, l, params)


def solve_ss_numeric(
    n: int, l: int, params: PhysicalParams, grid=None, tol: float = 1e-12, estimate: float = None
) -> BoundState:
    """Self-consistent FD energy of the SS equation with the exact centrifugal term.

    Brackets the root of g on 40 log-spaced energies spanning a factor of 10
    either side of ``estimate`` (by default the analytic energy), then bisects
    to relative tolerance ``tol``. Only the sign of g is needed, and that
    costs one Sturm count per trial energy.
    """
    QuantumNumbers(n, l)
    nu_parameter(l, params)
    grid = grid or default_grid(n, l, params)
    E0 = abs(estimate if estimate is not None else _energy_estimate(n, l, params))
    deepest = min(10.0 * E0, 0.99 * params.m_tilde)
    trial = -np.logspace(math.log10(deepest), math.log10(E0 / 10.0), 40)

    def g(E):
        return ss_secular_sign(E, n, l, params, grid)

    brackets = scan_brackets(g, trial)
    if not brackets:
        raise NoBoundStateError(f"no self-consistent SS state for n={n}, l={l} near E={-E0:.6g}")
    if len(brackets) > 1:
        log.warning("secular function for n=%d, l=%d has %d sign changes", n, l, len(brackets))
    lo, hi, g_lo, _ = brackets[0]
    E = bisect(g, lo, hi, g_lo, rtol=tol)
    op = build_ss_operator(E, l, params, grid)
    target = _ss_target(E, params)
    span = 1e-6 * abs(target) + 1e-12
    lam = kth_eigenvalue(op, n + 1, bracket=(target - span, target + span))
    return _checked_state(n, l, E, op, lam, grid, Provenance.NUMERIC_FD)


def convergence_ratio(solver, n: int, l: int, params: PhysicalParams, grid) -> tuple:
    """Energies on ``grid`` and two successive halvings, and the ratio of their differences.

    A ratio near 4 indicates second-order convergence.
    """
    grids = [grid, grid.refined(), grid.refined().refined()]
    energies = [solver(n, l, params, g).energy for g in grids]
    d1, d2 = energies[0] - energies[1], energies[1] - energies[2]
    return energies, (d1 / d2 if d2 != 0 else math.inf)
