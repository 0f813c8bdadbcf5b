"""Exception hierarchy shared by every module."""


class WsIqrError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(WsIqrError, ValueError):
    pass


class PoleError(WsIqrError, ArithmeticError):
    """A denominator of the potential or of a special function vanishes."""


class DomainError(WsIqrError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class NoClassicalRegionError(WsIqrError):
    pass


class DegenerateQuadraticError(WsIqrError):
    """The turning-point quadratic has no y**2 term (b == 0)."""


class SingularBranchError(WsIqrError):
    """The ground-state parameter m vanishes (Woods-Saxon s-wave)."""


class DegenerateConditionError(WsIqrError):
    """The quantization condition has C == 0 and cannot be inverted."""


class BranchViolationError(WsIqrError):
    """A radicand of a closed-form expression is negative."""

    def __init__(self, message, radicand=None):
        super().__init__(message)
        self.radicand = radicand


class NoBoundStateError(WsIqrError):
    """No bound state exists for the requested quantum numbers.

    ``energy`` carries the unchecked value produced by the algebra (if any) so
    callers can still inspect it.
    """

    def __init__(self, message, energy=None, diagnostics=None):
        super().__init__(message)
        self.energy = energy
        self.diagnostics = diagnostics or {}


class AccuracyError(WsIqrError):
    """Quadrature or iteration failed to reach its tolerance."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class PrintedFormulaSingularError(WsIqrError, ZeroDivisionError):
    pass


class NotNormalizableError(WsIqrError):
    pass


class GridMismatchError(WsIqrError, ValueError):
    pass


class OracleError(WsIqrError):
    pass


class ConfigError(WsIqrError, ValueError):
    pass
