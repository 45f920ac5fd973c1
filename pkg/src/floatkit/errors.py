"""Exception types shared across the toolkit."""


class FloatkitError(Exception):
    """Base class for every error raised by this package."""


class InvalidCurveError(FloatkitError):
    """Curve data fails a structural requirement (convexity, closure, junctions)."""


class NonSimpleCurveError(InvalidCurveError):
    """A self-intersection was detected."""


class NonConvexError(InvalidCurveError):
    """Operation requires a strictly convex curve."""


class CurveFormatError(FloatkitError):
    """Malformed or unrecognized curve/polygon document."""


class DegenerateChordError(FloatkitError):
    """Chord endpoints coincide."""


class NoIntersectionError(FloatkitError):
    """Ray-curve bracketing failed; usually signals a non-convex curve."""


class NearTangencyError(FloatkitError):
    """Launch angle too close to 0 or pi for a reliable intersection."""


class PoleProximityError(FloatkitError):
    """Angle sits on a pole of one of the tangent terms."""


class NotARootError(FloatkitError):
    """The (n, gamma) pair does not satisfy the angle relation."""


class NotConcyclicError(FloatkitError):
    """A quadrilateral of the polygon is not concyclic within tolerance."""


class AmbiguousArcError(FloatkitError):
    """Arc selection is degenerate (collinear points or coincident vertices)."""
