"""Exception hierarchy shared by the algebra kernel and the geometry layers."""


class CgaError(Exception):
    """Base class for every error raised by this package."""


class NormalizationError(CgaError):
    """Element cannot be normalized (zero or indefinite magnitude)."""


class IndefiniteMagnitudeError(CgaError):
    """|m|^2 is negative, so no real scalar magnitude exists."""


class InverseError(CgaError):
    """Element is not an invertible blade (multi-grade or null)."""


class ConvergenceError(CgaError):
    """A series did not converge within the term cap."""


class RepresentationError(CgaError):
    """A multivector does not have the representation an operation requires."""


class DegenerateGeometryError(CgaError):
    """Input points or blades are in a degenerate configuration."""


class FlatGeometryError(CgaError):
    """A flat entity (line/plane/point at infinity) was supplied where a
    round one is required, or vice versa."""


class SceneError(CgaError):
    """Scene construction, persistence or command errors."""
