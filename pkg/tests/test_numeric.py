import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from yukawa_ss import analytic
from yukawa_ss.errors import DomainError, NoBoundStateError, ParameterError
from yukawa_ss.model import PhysicalParams
from yukawa_ss.numeric import (
    LogGrid,
    TridiagonalOperator,
    UniformGrid,
    build_schrodinger_operator,
    convergence_ratio,
    default_grid,
    eigenvector,
    kth_eigenvalue,
    solve_schrodinger_numeric,
    solve_ss_numeric,
    ss_secular_sign,
    ss_secular_value,
)

P = PhysicalParams()
COULOMB = P.replace(a=0.0)


def test_two_by_two():
    op = TridiagonalOperator([2.0, 2.0], [-1.0])
    assert kth_eigenvalue(op, 1) == pytest.approx(1.0, rel=1e-12)
    assert kth_eigenvalue(op, 2) == pytest.approx(3.0, rel=1e-12)
    with pytest.raises(DomainError):
        kth_eigenvalue(op, 3)
    with pytest.raises(DomainError):
        kth_eigenvalue(op, 0)


def test_discrete_laplacian_closed_form():
    m, h = 200, 0.05
    op = TridiagonalOperator(np.full(m, 2 / h**2), np.full(m - 1, -1 / h**2))
    for k in (1, 2, 50, 200):
        exact = (2 / h**2) * (1 - math.cos(k * math.pi / (m + 1)))
        assert kth_eigenvalue(op, k) == pytest.approx(exact, rel=1e-10)


def _random_operator(seed, m, weighted):
    rng = np.random.default_rng(seed)
    d = rng.normal(size=m) * 5
    e = rng.normal(size=m - 1)
    w = rng.uniform(0.1, 3.0, size=m) if weighted else None
    return TridiagonalOperator(d, e, w)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 50), st.booleans(), st.floats(-12, 12))
def test_sturm_count_matches_full_spectrum(seed, m, weighted, sigma):
    op = _random_operator(seed, m, weighted)
    full = scipy.linalg.eigh(op.dense(), np.diag(op.weight), eigvals_only=True)
    assume_gap = np.min(np.abs(full - sigma)) > 1e-9
    if assume_gap:
        assert op.sturm_count(sigma) == int(np.sum(full < sigma))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 40), st.booleans())
def test_kth_eigenvalue_matches_lapack(seed, m, weighted):
    op = _random_operator(seed, m, weighted)
    full = scipy.linalg.eigh(op.dense(), np.diag(op.weight), eigvals_only=True)
    for k in (1, m // 2 + 1, m):
        assert kth_eigenvalue(op, k) == pytest.approx(full[k - 1], rel=1e-11, abs=1e-11)


@settings(max_examples=30, deadline=None)
@given(arrays(float, 30, elements=st.floats(-5, 5)), arrays(float, 29, elements=st.floats(0.1, 3)))
def test_interlacing(d, e):
    big = TridiagonalOperator(d, -e)
    small = TridiagonalOperator(d[:-1], -e[:-1])
    for k in range(1, 30):
        assert kth_eigenvalue(big, k) <= kth_eigenvalue(small, k) + 1e-10
        assert kth_eigenvalue(small, k) <= kth_eigenvalue(big, k + 1) + 1e-10


def test_eigenvector_residual_and_nodes():
    m, h = 300, 0.1
    op = TridiagonalOperator(np.full(m, 2 / h**2), np.full(m - 1, -1 / h**2))
    for k in (1, 2, 5):
        lam = kth_eigenvalue(op, k)
        v = eigenvector(op, lam)
        assert np.linalg.norm(op.matvec(v) - lam * v) <= 1e-8 * np.linalg.norm(v) * np.max(np.abs(op.diag))
        assert np.count_nonzero(np.diff(np.sign(v[np.abs(v) > 1e-12])) != 0) == k - 1
        assert np.sum(v * v) == pytest.approx(1.0)


def test_eigenvector_is_deterministic():
    op = _random_operator(7, 40, True)
    lam = kth_eigenvalue(op, 3)
    assert np.array_equal(eigenvector(op, lam), eigenvector(op, lam))


def test_operator_validation():
    with pytest.raises(DomainError):
        TridiagonalOperator([1.0, 2.0], [1.0, 2.0])
    with pytest.raises(DomainError):
        TridiagonalOperator([1.0, 2.0], [1.0], weight=[1.0, 0.0])


def test_grid_validation():
    with pytest.raises(ParameterError):
        UniformGrid(100.0, 50)
    with pytest.raises(ParameterError):
        LogGrid(100.0, 1000, r_min=200.0)
    g = UniformGrid(100.0, 999)
    assert g.h == pytest.approx(0.1) and g.r[0] == pytest.approx(0.1)
    assert g.refined().h == pytest.approx(0.05)
    lg = LogGrid(100.0, 999, 1e-4)
    assert lg.refined().h == pytest.approx(lg.h / 2)


def test_schrodinger_operator_structure():
    g = UniformGrid(200.0, 1000)
    op = build_schrodinger_operator(1, P, g)
    assert np.all(op.offdiag == -1 / g.h**2)
    assert op.diag[-1] == pytest.approx(2 / g.h**2, rel=1e-3)
    assert np.all(np.isfinite(op.diag))


@pytest.mark.parametrize("n, l", [(0, 0), (1, 0), (0, 1), (2, 1), (3, 0), (0, 3)])
def test_coulomb_levels(n, l):
    N = n + l + 1
    s = solve_schrodinger_numeric(n, l, COULOMB)
    assert s.energy == pytest.approx(-2.5 / (2 * N * N), rel=1e-4)
    assert np.sum(s.grid_psi**2 * np.gradient(s.grid_r)) == pytest.approx(1.0, rel=1e-3)


@pytest.mark.parametrize("kind", ["log", "uniform"])
def test_second_order_convergence(kind):
    grid = default_grid(1, 0, COULOMB, kind=kind, m_points=2000 if kind == "log" else 5000)
    energies, ratio = convergence_ratio(solve_schrodinger_numeric, 1, 0, COULOMB, grid)
    assert 3.5 < ratio < 4.5
    assert abs(energies[-1] + 0.3125) < abs(energies[0] + 0.3125)


def test_first_order_screening_shift():
    # Coulomb N = 2 level raised by a V0 to first order
    s = solve_schrodinger_numeric(1, 0, P.replace(a=0.001))
    assert s.energy == pytest.approx(-0.3125 + 0.001, rel=1e-3)


def test_unbound_state_on_small_box():
    with pytest.raises(NoBoundStateError):
        solve_schrodinger_numeric(5, 0, COULOMB, UniformGrid(5.0, 500))


@pytest.mark.parametrize("n, l", [(0, 0), (1, 0), (2, 1), (4, 0)])
def test_ss_unscreened_exact(n, l):
    s = solve_ss_numeric(n, l, COULOMB)
    assert s.energy == pytest.approx(analytic.ss_coulomb_energy(n, l, COULOMB), rel=2e-5)


def test_secular_function_decreasing_with_sign_change():
    p = P.replace(a=0.01)
    grid = default_grid(1, 0, p, m_points=2000)
    E = analytic.solve_ss_energy(1, 0, p).energy
    trial = np.linspace(1.3 * E, 0.7 * E, 9)
    g = [ss_secular_value(x, 1, 0, p, grid) for x in trial]
    assert np.all(np.diff(g) < 0)
    assert g[0] > 0 > g[-1]
    assert [ss_secular_sign(x, 1, 0, p, grid) for x in trial] == list(np.sign(g))


def test_ss_root_is_self_consistent():
    p = P.replace(a=0.005)
    grid = default_grid(2, 1, p)
    s = solve_ss_numeric(2, 1, p, grid)
    assert abs(ss_secular_value(s.energy, 2, 1, p, grid)) < 1e-8


@pytest.mark.parametrize("n, l, a", [(1, 0, 0.01), (3, 2, 0.001), (7, 0, 0.005)])
def test_ss_limit_equals_schrodinger(n, l, a):
    p = P.replace(a=a, m_tilde_scale=1e9)
    assert solve_ss_numeric(n, l, p).energy == pytest.approx(solve_schrodinger_numeric(n, l, p).energy, rel=1e-8)


def test_ss_close_to_analytic_at_weak_screening():
    p = P.replace(a=0.001)
    fd = solve_ss_numeric(1, 0, p).energy
    exact = analytic.solve_ss_energy(1, 0, p).energy
    assert abs(fd - exact) / abs(fd) < 5e-4


def test_node_count_of_numeric_states():
    p = P.replace(a=0.01)
    for n in range(4):
        s = solve_ss_numeric(n, 1, p)
        v = s.grid_psi[np.abs(s.grid_psi) > 1e-9 * np.max(np.abs(s.grid_psi))]
        assert np.count_nonzero(np.diff(np.sign(v)) != 0) == n
