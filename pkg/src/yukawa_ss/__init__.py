"""Bound states of two spinless particles bound by a Yukawa potential.

Semirelativistic (spinless Salpeter) and nonrelativistic spectra are
available both analytically, through a parametric Nikiforov-Uvarov
reduction under the Greene-Aldrich centrifugal approximation, and
numerically, through a finite-difference radial eigensolver that keeps the
centrifugal term exact.
"""
from .errors import (
    BranchError,
    DomainError,
    InvalidJacobiParametersError,
    NoBoundStateError,
    NonNormalizableError,
    NumericalError,
    ParameterError,
    PoleError,
    SupercriticalCouplingError,
    UnphysicalTemplateError,
    YukawaError,
)
from .model import (
    BoundState,
    DerivedMasses,
    PhysicalParams,
    Provenance,
    QuantumNumbers,
    derive_masses,
    nu_parameter,
    yukawa_potential,
)

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "BranchError",
    "DerivedMasses",
    "DomainError",
    "InvalidJacobiParametersError",
    "NoBoundStateError",
    "NonNormalizableError",
    "NumericalError",
    "ParameterError",
    "PhysicalParams",
    "PoleError",
    "Provenance",
    "QuantumNumbers",
    "SupercriticalCouplingError",
    "UnphysicalTemplateError",
    "YukawaError",
    "derive_masses",
    "nu_parameter",
    "yukawa_potential",
]
