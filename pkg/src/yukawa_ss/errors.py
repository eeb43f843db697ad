"""Exception hierarchy. Every error raised by the package derives from YukawaError."""


class YukawaError(Exception):
    pass


class ParameterError(YukawaError, ValueError):
    """Invalid physical parameters or quantum numbers."""


class SupercriticalCouplingError(ParameterError):
    """(l + 1/2)^2 < mu V0^2 / (hbar^2 m_tilde): the index nu would be imaginary."""


class DomainError(YukawaError, ValueError):
    """Argument outside the domain of a function."""


class PoleError(DomainError):
    """Hypergeometric lower parameter hits a pole of the terminating series."""


class UnphysicalTemplateError(YukawaError, ValueError):
    """Nikiforov-Uvarov template whose constants leave the real branch."""


class InvalidJacobiParametersError(YukawaError, ValueError):
    pass


class NonNormalizableError(YukawaError, ValueError):
    pass


class BranchError(YukawaError, ValueError):
    """Trial energy outside the physical branch (a square root turns imaginary)."""


class NoBoundStateError(YukawaError):
    pass


class NumericalError(YukawaError, RuntimeError):
    pass
