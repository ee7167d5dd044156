"""Exception hierarchy shared across the package."""

from __future__ import annotations


class TumorstabError(Exception):
    """Base class for all package-specific failures."""


class DomainError(TumorstabError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class NoRootError(DomainError):
    """A bracketing search found no sign change in the admissible interval."""


class PoleProximityError(TumorstabError):
    """The evaluation point is too close to a pole of the Bessel ratio.

    ``index`` is the 1-based index m of the offending zero j_{n+1/2,m}.
    """

    def __init__(self, message: str, index: int, distance: float):
        super().__init__(message)
        self.index = index
        self.distance = distance


class GridMismatchError(DomainError):
    """Sphere samples do not match the quadrature grid of the band."""


class SymmetryError(DomainError):
    """Coefficients violate the conjugate symmetry required for real output."""


class UnresolvedRegionError(TumorstabError):
    """Root counting could not be resolved after maximal subdivision.

    ``region`` is the (re_min, re_max, im_min, im_max) sub-rectangle left over.
    """

    def __init__(self, message: str, region: tuple[float, float, float, float]):
        super().__init__(message)
        self.region = region


class ConditioningError(TumorstabError):
    """A linear solve hit a (near-)singular system."""


class ContourError(TumorstabError):
    """The Laplace-inversion contour passes too close to a transform pole."""

    def __init__(self, message: str, suggested_shift: float):
        super().__init__(message)
        self.suggested_shift = suggested_shift


class NearBifurcationError(TumorstabError):
    """Recentering is requested at (or numerically at) the mode-1 bifurcation."""


class NonContractionError(TumorstabError):
    """Fixed-point iteration failed to contract (or the linearization is singular)."""


class ConfigError(TumorstabError):
    """A run configuration is invalid; ``field`` is the dotted key path."""

    def __init__(self, message: str, field: str = ""):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
