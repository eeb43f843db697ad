import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import simpson
from scipy.optimize import brentq

from yukawa_ss import analytic
from yukawa_ss.errors import BranchError, DomainError, NoBoundStateError, ParameterError
from yukawa_ss.golden import SCHRODINGER_TABLE, SS_TABLE
from yukawa_ss.model import PhysicalParams, nu_parameter
from yukawa_ss.roots import bisect, scan_brackets

P = PhysicalParams()


def _norm(wave, state, params, points=40001):
    r = np.linspace(0.0, analytic.decay_radius(state, params), points)
    return simpson(wave(r, state, params) ** 2, x=r)


@pytest.mark.parametrize("row", SS_TABLE[:9], ids=lambda r: f"{r.n}{r.l}-a{r.a}")
def test_ss_energy_matches_table(row):
    s = analytic.solve_ss_energy(row.n, row.l, P.replace(a=row.a))
    assert -s.energy == pytest.approx(row.approx, abs=5e-4)


def test_ss_energy_unrounded_value():
    s = analytic.solve_ss_energy(2, 1, P.replace(a=0.005))
    # printed to five decimals in the table
    assert -s.energy == pytest.approx(0.07568, abs=5e-6)


def _exact_unscreened(n, l, params):
    # a = 0: Coulomb problem with charge V0 (1 + E/m~), solved directly
    mu, mt, V0 = params.mu, params.m_tilde, params.V0
    target = n + nu_parameter(l, params) + 0.5

    def f(E):
        kappa = math.sqrt(-2 * mu * E * (1 + E / (2 * mt)))
        return mu * V0 * (1 + E / mt) / kappa - target

    return brentq(f, -0.99 * mt, -1e-9, xtol=1e-15, rtol=1e-15)


@pytest.mark.parametrize("n, l", [(0, 0), (1, 0), (2, 1), (4, 3), (7, 0)])
def test_unscreened_closed_form(n, l):
    assert analytic.ss_coulomb_energy(n, l, P) == pytest.approx(_exact_unscreened(n, l, P), rel=1e-12)


@pytest.mark.parametrize("n, l", [(1, 0), (2, 1), (3, 2)])
def test_weak_screening_approaches_unscreened(n, l):
    E = analytic.solve_ss_energy(n, l, P.replace(a=1e-6)).energy
    assert E == pytest.approx(analytic.ss_coulomb_energy(n, l, P), rel=1e-4)


def test_residual_forms_agree_for_unit_strength():
    E = -0.3
    for l in (0, 2):
        assert analytic.ss_energy_residual(E, 1, l, P) == analytic.ss_energy_residual(E, 1, l, P, v0_energy_radical=True)
    p = P.replace(V0=1.3)
    assert analytic.ss_energy_residual(E, 1, 1, p) != analytic.ss_energy_residual(E, 1, 1, p, v0_energy_radical=True)


@pytest.mark.parametrize("n, l, a", [(1, 0, 0.01), (2, 1, 0.005), (3, 2, 0.001), (7, 0, 0.01)])
def test_generic_engine_root_matches_direct_root(n, l, a):
    params = P.replace(a=a)
    direct = analytic.solve_ss_energy(n, l, params).energy

    def f(E):
        return analytic.nu_energy_residual(E, n, l, params)

    window = np.linspace(1.5 * direct, 0.5 * direct, 41)
    (lo, hi, f_lo, _), = scan_brackets(f, window)
    generic = bisect(f, lo, hi, f_lo, rtol=1e-15)
    assert abs(generic - direct) <= 1e-10


def test_generic_residual_needs_extended_precision_at_nu_zero():
    params = P.replace(a=0.001)
    E = analytic.solve_ss_energy(1, 0, params).energy
    precise = analytic.nu_energy_residual(E, 1, 0, params)
    rough = analytic.nu_energy_residual(E, 1, 0, params, precise=False)
    assert abs(precise) < 1e-6 < abs(rough)


def test_epsilon_is_sqrt_C():
    params = P.replace(a=0.005)
    E = -0.2
    assert analytic.epsilon(E, params) == pytest.approx(math.sqrt(analytic.abc_coefficients(E, 0, params).C))
    with pytest.raises(BranchError):
        analytic.epsilon(0.1, params)


def test_domain_errors():
    with pytest.raises(ParameterError):
        analytic.solve_ss_energy(1, 0, P.replace(a=0.0))
    with pytest.raises(DomainError):
        analytic.abc_coefficients(0.0, 0, P)
    with pytest.raises(NoBoundStateError):
        analytic.solve_ss_energy(3, 0, P.replace(a=0.5))


@pytest.mark.parametrize("row", SCHRODINGER_TABLE, ids=lambda r: f"{r.n}{r.l}-a{r.a}")
def test_schrodinger_energy_matches_table(row):
    s = analytic.schrodinger_energy(row.n, row.l, P.replace(a=row.a))
    assert -s.energy == pytest.approx(row.approx, abs=5e-4)


def test_schrodinger_energy_expanded_form():
    for a in (0.01, 0.003):
        p = P.replace(a=a)
        for n, l in [(0, 0), (2, 1), (3, 3)]:
            N = n + l + 1
            ref = -(p.mu * p.V0**2 / (2 * N * N) - 2 * a * p.V0 + a * a * N * N / (2 * p.mu))
            assert analytic.schrodinger_energy(n, l, p).energy == pytest.approx(ref, rel=1e-13)


def test_schrodinger_depends_on_principal_number_only():
    p = P.replace(a=0.005)
    assert analytic.schrodinger_energy(3, 0, p).energy == analytic.schrodinger_energy(1, 2, p).energy


def test_consistent_limit_matches_scaled_ss():
    for a in (0.01, 0.001):
        p = P.replace(a=a)
        big = p.replace(m_tilde_scale=1e9)
        for n, l in [(1, 0), (3, 2), (7, 0)]:
            ss = analytic.solve_ss_energy(n, l, big).energy
            assert ss == pytest.approx(analytic.schrodinger_energy_consistent(n, l, p).energy, rel=1e-6)


def test_consistent_limit_unbound():
    with pytest.raises(NoBoundStateError):
        analytic.schrodinger_energy_consistent(3, 0, P.replace(a=0.2))


def test_coulomb():
    assert analytic.coulomb_energy(1, 0, P) == -0.3125
    s = analytic.schrodinger_energy(1, 0, P.replace(a=0.0))
    assert s.energy == -0.3125 and s.lam is None


@pytest.mark.parametrize("n, l, a", [(0, 0, 0.01), (1, 0, 0.001), (2, 1, 0.005), (4, 3, 0.01), (7, 0, 0.001)])
def test_ss_wavefunction_normalized_with_n_nodes(n, l, a):
    p = P.replace(a=a)
    s = analytic.solve_ss_energy(n, l, p)
    assert _norm(analytic.ss_wavefunction, s, p) == pytest.approx(1.0, abs=1e-8)
    assert analytic.count_nodes(analytic.ss_wavefunction, s, p) == n
    assert analytic.ss_wavefunction(0.0, s, p) == 0.0


@pytest.mark.parametrize("n, l, a", [(1, 0, 0.01), (3, 2, 0.005), (6, 0, 0.001)])
def test_schrodinger_wavefunction_normalized(n, l, a):
    p = P.replace(a=a)
    s = analytic.schrodinger_energy(n, l, p)
    assert _norm(analytic.schrodinger_wavefunction, s, p) == pytest.approx(1.0, abs=1e-8)
    assert analytic.count_nodes(analytic.schrodinger_wavefunction, s, p) == n


def test_norm_constant_against_quadrature():
    # integral over s of s^(2 eps - 1) (1 - s)^(2 nu + 1) P_n^2 ds = 2a / N^2
    p = P.replace(a=0.01)
    s = analytic.solve_ss_energy(2, 1, p)
    eps, nuv = s.epsilon, s.nu
    with mpmath.workdps(30):
        f = lambda x: x ** (2 * eps - 1) * (1 - x) ** (2 * nuv + 1) * mpmath.jacobi(2, 2 * eps, 2 * nuv, 1 - 2 * x) ** 2
        integral = mpmath.quad(f, [0, 0.01, 0.1, 0.5, 1])
    assert float(2 * p.a / integral) == pytest.approx(analytic.ss_norm_constant(s, p) ** 2, rel=1e-12)


@pytest.mark.parametrize("l, a", [(0, 0.01), (1, 0.005), (3, 0.001)])
def test_ground_state_beta_form(l, a):
    p = P.replace(a=a)
    s = analytic.solve_ss_energy(0, l, p)
    assert analytic.ss_ground_norm_constant(s, p) == pytest.approx(analytic.ss_norm_constant(s, p), rel=1e-10)


def test_wavefunction_rejects_negative_r():
    s = analytic.solve_ss_energy(0, 0, P)
    with pytest.raises(DomainError):
        analytic.ss_wavefunction(-1.0, s, P)


def test_greene_aldrich_forms():
    a = 0.01
    r = np.array([1e-3, 0.1, 1.0])
    assert np.allclose(analytic.greene_aldrich_inverse(r, a) * r, 1.0, rtol=2e-5)
    assert np.allclose(analytic.greene_aldrich_inverse_square(r, a) * r * r, 1.0, rtol=4e-5)
    v = analytic.greene_aldrich_potential(r, P)
    assert np.all(v < 0)
    assert np.allclose(v / (-np.exp(-a * r) / r), 1.0, rtol=1e-4)
    assert analytic.greene_aldrich_potential(2.0, P.replace(a=0.0)) == -0.5
