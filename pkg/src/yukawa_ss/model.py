"""Physical parameters, derived masses and state bookkeeping.

Units follow the tables this package reproduces: masses, energies and the
screening parameter in fm^-1, lengths in fm, hbar = 1 by default.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, NamedTuple, Optional

import numpy as np

from .errors import DomainError, ParameterError, SupercriticalCouplingError

PARAM_KEYS = ("m1", "m2", "V0", "a", "hbar")


@dataclass(frozen=True)
class PhysicalParams:
    """Two-body parameters.

    ``m_tilde_scale`` multiplies the relativistic mass ``m_tilde`` and exists
    only to probe the nonrelativistic limit (``m_tilde -> inf``); it is 1 for
    every physical calculation.
    """

    m1: float = 5.0
    m2: float = 5.0
    V0: float = 1.0
    a: float = 0.01
    hbar: float = 1.0
    m_tilde_scale: float = 1.0

    def __post_init__(self):
        for name in ("m1", "m2", "V0", "hbar", "m_tilde_scale"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ParameterError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.a) and self.a >= 0):
            raise ParameterError(f"a must be non-negative and finite, got {self.a!r}")

    @property
    def mu(self) -> float:
        return self.m1 * self.m2 / (self.m1 + self.m2)

    @property
    def eta(self) -> float:
        p = self.m1 * self.m2
        return self.mu * (p / (p - 3.0 * self.mu**2)) ** (1.0 / 3.0)

    @property
    def m_tilde(self) -> float:
        p = self.m1 * self.m2
        return self.m_tilde_scale * p * self.mu / (p - 3.0 * self.mu**2)

    @property
    def bohr_radius(self) -> float:
        """hbar^2 / (mu V0): the Coulomb length scale."""
        return self.hbar**2 / (self.mu * self.V0)

    def replace(self, **changes) -> "PhysicalParams":
        return replace(self, **changes)

    @classmethod
    def from_mapping(cls, values: Mapping[str, float], base: Optional["PhysicalParams"] = None):
        unknown = set(values) - set(PARAM_KEYS) - {"m_tilde_scale"}
        if unknown:
            raise ParameterError(f"unknown parameter keys: {sorted(unknown)}")
        base = base or cls()
        return base.replace(**{k: float(v) for k, v in values.items()})


def read_params_file(path) -> dict:
    """Parse a ``key = value`` file (``#`` starts a comment) into a dict of floats."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in PARAM_KEYS:
            raise ParameterError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = float(value)
        except ValueError:
            raise ParameterError(f"{path}:{lineno}: {key} is not a number: {value!r}") from None
    return values


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial node count ``n`` and orbital angular momentum ``l``."""

    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
                raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")

    @property
    def principal(self) -> int:
        """n + l + 1, the Coulomb principal quantum number."""
        return self.n + self.l + 1


class DerivedMasses(NamedTuple):
    mu: float
    eta: float
    m_tilde: float


def derive_masses(params: PhysicalParams) -> DerivedMasses:
    return DerivedMasses(params.mu, params.eta, params.m_tilde)


def nu_parameter(l: int, params: PhysicalParams) -> float:
    """sqrt((l + 1/2)^2 - mu V0^2 / (hbar^2 m_tilde)).

    Replaces ``l + 1/2`` when the -W^2/(2 m_tilde) term is kept.
    """
    QuantumNumbers(0, l)
    radicand = (l + 0.5) ** 2 - params.mu * params.V0**2 / (params.hbar**2 * params.m_tilde)
    if radicand < 0:
        raise SupercriticalCouplingError(
            f"supercritical coupling: (l+1/2)^2 - mu V0^2/(hbar^2 m_tilde) = {radicand:.6g} < 0 for l={l}"
        )
    return math.sqrt(radicand)


def yukawa_potential(r, params: PhysicalParams):
    """-V0 exp(-a r) / r, for scalar or array ``r > 0``."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("yukawa_potential requires r > 0")
    value = -params.V0 * np.exp(-params.a * r_arr) / r_arr
    return float(value) if value.ndim == 0 else value


class Provenance(str, enum.Enum):
    ANALYTIC_SS = "analytic-SS"
    ANALYTIC_NR = "analytic-NR"
    NUMERIC_FD = "numeric-FD"

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class BoundState:
    """A solved state.

    Analytic SS states carry ``nu`` and ``epsilon``; analytic nonrelativistic
    states carry ``lam``; finite-difference states carry the sampled
    wavefunction ``(grid_r, grid_psi)``, normalized so that the integral of
    psi^2 dr is one.
    """

    n: int
    l: int
    energy: float
    provenance: Provenance
    nu: Optional[float] = None
    epsilon: Optional[float] = None
    lam: Optional[float] = None
    norm_constant: Optional[float] = None
    grid_r: Optional[np.ndarray] = field(default=None, repr=False)
    grid_psi: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def binding_energy(self) -> float:
        return -self.energy
