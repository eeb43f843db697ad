"""Radial grids and the finite-difference operators built on them.

Both grids discretize

    -psi'' + [l(l+1)/r^2 - k q(r)] psi = lam psi,   k = 2 mu / hbar^2,

where ``q`` collects the attractive terms. ``UniformGrid`` uses the plain
central difference with Dirichlet walls at 0 and r_max. ``LogGrid`` writes
psi = r^(1/2) u(x), x = ln r, which turns the equation into the pencil

    -u'' + [(l+1/2)^2 - k r^2 q] u = lam r^2 u,

and imposes u ~ exp(nu0 x) at the inner edge. This resolves the r^nu0 small-r
behaviour exactly, which the uniform grid cannot do when nu0 is near zero.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from .tridiagonal import TridiagonalOperator


class UniformGrid:
    """r_i = i h for i = 1..m_points, h = r_max / (m_points + 1)."""

    kind = "uniform"

    def __init__(self, r_max: float, m_points: int = 20000):
        if not (math.isfinite(r_max) and r_max > 0):
            raise ParameterError(f"r_max must be positive, got {r_max!r}")
        if int(m_points) != m_points or m_points < 100:
            raise ParameterError(f"m_points must be an integer >= 100, got {m_points!r}")
        self.r_max = float(r_max)
        self.m_points = int(m_points)
        self.h = self.r_max / (self.m_points + 1)
        self.r = self.h * np.arange(1, self.m_points + 1)

    def assemble(self, l: int, k: float, q, nu0: float = None) -> TridiagonalOperator:
        r = self.r
        diag = 2.0 / self.h**2 + l * (l + 1) / r**2 - k * q(r)
        off = np.full(self.m_points - 1, -1.0 / self.h**2)
        return TridiagonalOperator(diag, off)

    def wavefunction(self, v):
        """psi on ``self.r`` with h * sum(psi^2) = 1."""
        return v / math.sqrt(self.h * np.sum(v * v))

    def refined(self, factor: int = 2) -> "UniformGrid":
        return UniformGrid(self.r_max, factor * (self.m_points + 1) - 1)

    def __repr__(self):
        return f"UniformGrid(r_max={self.r_max!r}, m_points={self.m_points})"


class LogGrid:
    """x_i = ln r_min + i h for i = 1..m_points, h = ln(r_max / r_min) / (m_points + 1).

    u is extrapolated to the inner node x_0 by the small-r power law and
    vanishes at the outer node x = ln r_max.
    """

    kind = "log"

    def __init__(self, r_max: float, m_points: int = 8000, r_min: float = 1e-6):
        if not (math.isfinite(r_max) and r_max > 0):
            raise ParameterError(f"r_max must be positive, got {r_max!r}")
        if not (math.isfinite(r_min) and 0 < r_min < r_max):
            raise ParameterError(f"need 0 < r_min < r_max, got r_min={r_min!r}")
        if int(m_points) != m_points or m_points < 100:
            raise ParameterError(f"m_points must be an integer >= 100, got {m_points!r}")
        self.r_max = float(r_max)
        self.r_min = float(r_min)
        self.m_points = int(m_points)
        self.h = math.log(self.r_max / self.r_min) / (self.m_points + 1)
        x = math.log(self.r_min) + np.arange(1, self.m_points + 1) * self.h
        self.r = np.exp(x)

    def assemble(self, l: int, k: float, q, nu0: float = None) -> TridiagonalOperator:
        if nu0 is None:
            nu0 = l + 0.5
        r = self.r
        h2 = self.h**2
        diag = 2.0 / h2 + (l + 0.5) ** 2 - k * r * r * q(r)
        # ghost node u_0 = u_1 exp(-nu0 h) from the small-r power law
        diag[0] -= math.exp(-nu0 * self.h) / h2
        off = np.full(self.m_points - 1, -1.0 / h2)
        return TridiagonalOperator(diag, off, weight=r * r)

    def wavefunction(self, v):
        """psi = r^(1/2) u on ``self.r``, normalized so the integral of psi^2 dr is one."""
        psi = np.sqrt(self.r) * v
        return psi / math.sqrt(self.h * np.sum(self.r**2 * v * v))

    def refined(self, factor: int = 2) -> "LogGrid":
        return LogGrid(self.r_max, factor * (self.m_points + 1) - 1, self.r_min)

    def __repr__(self):
        return f"LogGrid(r_max={self.r_max!r}, m_points={self.m_points}, r_min={self.r_min!r})"


# the uniform grid is the plain reading of "r_i = i h"
RadialGrid = UniformGrid
