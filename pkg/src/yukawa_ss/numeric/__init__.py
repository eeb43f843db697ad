"""Finite-difference solvers for the exact radial equations."""
from .grids import LogGrid, RadialGrid, UniformGrid
from .radial import (
    build_schrodinger_operator,
    build_ss_operator,
    convergence_ratio,
    default_grid,
    default_r_max,
    solve_schrodinger_numeric,
    solve_ss_numeric,
    ss_secular_sign,
    ss_secular_value,
)
from .tridiagonal import TridiagonalOperator, eigenvector, kth_eigenvalue

__all__ = [
    "LogGrid",
    "RadialGrid",
    "UniformGrid",
    "TridiagonalOperator",
    "build_schrodinger_operator",
    "build_ss_operator",
    "convergence_ratio",
    "default_grid",
    "default_r_max",
    "eigenvector",
    "kth_eigenvalue",
    "solve_schrodinger_numeric",
    "solve_ss_numeric",
    "ss_secular_sign",
    "ss_secular_value",
]
