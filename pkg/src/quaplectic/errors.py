"""Exception types raised across the package."""


class QuaplecticError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuaplecticError, ValueError):
    """Frame parameters lie on or beyond the null surface."""


class SingularCompositionError(QuaplecticError, ZeroDivisionError):
    """The composition law's denominator vanishes."""


class ValidationError(QuaplecticError, ValueError):
    """Input violates a structural invariant (antisymmetry, unitarity, shapes)."""


class DivergenceError(QuaplecticError, ValueError):
    """A contraction would keep a bracket with negative degree in epsilon."""


class ResolutionError(QuaplecticError, RuntimeError):
    """A grid discretisation is too coarse to resolve the requested levels."""


class SizeError(QuaplecticError, MemoryError):
    """A truncated basis exceeds the configured element budget."""
