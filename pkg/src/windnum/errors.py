"""Exception taxonomy shared by every module.

All geometric precondition violations derive from ``GeometryError`` so the
CLI can map them onto its exit-code scheme in one place.
"""


class GeometryError(Exception):
    """Base class for geometric precondition violations."""


class DegeneratePoint(GeometryError):
    """An angle endpoint coincides with the angle vertex."""


class NonGenericIntersection(GeometryError):
    """Segments overlap, touch at an endpoint, or graze instead of crossing."""


class PointOnLine(GeometryError):
    """The query point lies on the polyline (vertex or segment)."""


class IntegralityViolation(GeometryError):
    """An angle sum failed to round to an integer number of turns."""


class EndpointMismatch(GeometryError):
    """Concatenation operands do not share the required endpoint."""


class EndpointOnLine(GeometryError):
    """A polyline endpoint lies on the other polyline of a pairing."""


class FanBlocked(GeometryError):
    """The pivot-to-vertex segments of a fan pass through the query point."""


class DegenerateInput(GeometryError):
    """Construction inputs coincide where distinct points are required."""


class GeneralPositionViolation(GeometryError):
    """A configuration violates the general-position assumption."""


class BoundaryPoint(GeometryError):
    """A boundary classification was used where an off-line point is required."""


class GenerationExhausted(GeometryError):
    """Rejection sampling hit its retry budget."""
