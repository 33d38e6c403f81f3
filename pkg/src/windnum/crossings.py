"""Signed intersection counting and the discrete Stokes statements.

A crossing of directed segments AB and CD carries sign +1 when the traversal
A, B, C is clockwise and -1 otherwise.  Summed over all intersection points
of two polygonal lines this gives the pairing l . p, which equals the winding
difference between p's endpoints (the discrete Stokes identity) and the
four-term boundary pairing of turn fractions.

Enumeration is brute force over all segment pairs; inputs are desk-scale and
auditability beats asymptotics here.
"""

import math
from dataclasses import dataclass

from .errors import (
    EndpointOnLine,
    GeneralPositionViolation,
    NonGenericIntersection,
    PointOnLine,
)
from .geomcore import (
    EPS_INT,
    Point,
    Segment,
    Orientation,
    orientation,
    point_on_segments,
    segment_intersection,
)
from .polyline import (
    ClosedPolyline,
    OpenPolyline,
    Polyline,
    bounding_box,
    segments_of,
)
from .winding import WindingResult, _assert_off_line, w_prime, winding_number


@dataclass(frozen=True, slots=True)
class Crossing:
    point: Point
    sign: int
    l_segment_index: int
    p_segment_index: int


@dataclass(frozen=True, slots=True)
class CrossingReport:
    crossings: tuple[Crossing, ...]

    @property
    def count(self) -> int:
        return len(self.crossings)

    @property
    def signed_sum(self) -> int:
        return sum(c.sign for c in self.crossings)


def crossing_sign(ab: Segment, cd: Segment) -> int:
    """Sign of the crossing of directed segments ab and cd.

    +1 when the traversal (ab.start, ab.end, cd.start) is clockwise, -1 when
    counterclockwise.  The segments must cross properly with no three of the
    four endpoints collinear; anything else raises
    :class:`NonGenericIntersection`.
    """
    if segment_intersection(ab, cd) is None:
        raise NonGenericIntersection(f"{ab} and {cd} do not cross")
    turn = orientation(ab.start, ab.end, cd.start)
    if turn is Orientation.COLLINEAR:
        raise NonGenericIntersection("collinear endpoints at a crossing")
    return 1 if turn is Orientation.CW else -1


def crossings(l: Polyline, p: Polyline) -> CrossingReport:
    """All proper transversal intersections of l and p with their signs.

    Signs follow the (l segment, p segment) order.  Any non-generic incidence
    between the two lines raises :class:`GeneralPositionViolation`.
    """
    found = []
    l_segs = segments_of(l)
    p_segs = segments_of(p)
    for i, ls in enumerate(l_segs):
        for j, ps in enumerate(p_segs):
            try:
                x = segment_intersection(ls, ps)
            except NonGenericIntersection as exc:
                raise GeneralPositionViolation(str(exc)) from exc
            if x is None:
                continue
            turn = orientation(ls.start, ls.end, ps.start)
            if turn is Orientation.COLLINEAR:
                raise GeneralPositionViolation(
                    f"collinear endpoints at crossing of {ls} and {ps}")
            found.append(Crossing(x, 1 if turn is Orientation.CW else -1, i, j))
    return CrossingReport(tuple(found))


def stokes_parity_check(l: ClosedPolyline, p: OpenPolyline) -> tuple[int, int]:
    """(winding difference mod 2, crossing count mod 2) for l against p.

    The two components agree for general-position inputs.
    """
    report = crossings(l, p)
    w0 = winding_number(l, p.start).w
    w1 = winding_number(l, p.end).w
    return (w1 - w0) % 2, report.count % 2


def stokes_signed_check(l: ClosedPolyline, p: OpenPolyline) -> tuple[int, int]:
    """(winding difference, signed crossing sum) for l against p.

    The two components agree for general-position inputs.
    """
    report = crossings(l, p)
    w0 = winding_number(l, p.start).w
    w1 = winding_number(l, p.end).w
    return w1 - w0, report.signed_sum


_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


def winding_via_ray(l: ClosedPolyline, p: Point,
                    max_retries: int = 64) -> WindingResult:
    """Winding number of l around p via signed crossings of a straight probe
    from far outside the hull of l.

    Independent of the angle-sum route, hence usable as its oracle.  The far
    endpoint is rotated through a deterministic golden-angle sequence until
    the probe is in general position with respect to l;
    :class:`GeneralPositionViolation` after ``max_retries`` re-aims.
    """
    _assert_off_line(l, p)
    lo, hi = bounding_box(l.points)
    cx, cy = 0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)
    diag = math.hypot(hi.x - lo.x, hi.y - lo.y)
    radius = 2.0 * (diag if diag > 0.0 else 1.0) + math.hypot(p.x - cx, p.y - cy)
    for k in range(max_retries):
        phi = k * _GOLDEN_ANGLE
        far = Point(cx + radius * math.cos(phi), cy + radius * math.sin(phi))
        try:
            report = crossings(l, OpenPolyline((far, p)))
        except GeneralPositionViolation:
            continue
        return WindingResult(report.signed_sum, 0.0)
    raise GeneralPositionViolation(
        f"no generic probe to {p} after {max_retries} re-aims")


@dataclass(frozen=True, slots=True)
class BoundaryPairing:
    """Four-term turn-fraction pairing of two open lines, plus its rounding."""

    value: float
    rounded: int


def boundary_pairing(l: OpenPolyline, p: OpenPolyline) -> BoundaryPairing:
    """The pairing w'(l, p.end) - w'(p, l.end) - w'(l, p.start) + w'(p, l.start).

    Defined when no endpoint of either line lies on the other line
    (:class:`EndpointOnLine` otherwise).  Equals the signed crossing sum
    l . p for general-position lines and 0 for disjoint ones; ``rounded``
    is the nearest integer to ``value``.
    """
    l_segs = segments_of(l)
    p_segs = segments_of(p)
    for label, e, other_line, other_segs in (
        ("l.start", l.start, p, p_segs),
        ("l.end", l.end, p, p_segs),
        ("p.start", p.start, l, l_segs),
        ("p.end", p.end, l, l_segs),
    ):
        near_vertex = any(
            (e.x - v.x) ** 2 + (e.y - v.y) ** 2 <= 1e-18
            for v in other_line.points
        )
        if near_vertex or point_on_segments(e, other_segs):
            raise EndpointOnLine(f"{label} = {e} lies on the other line")
    try:
        value = (w_prime(l, p.end) - w_prime(p, l.end)
                 - w_prime(l, p.start) + w_prime(p, l.start))
    except PointOnLine as exc:  # pragma: no cover - guarded above
        raise EndpointOnLine(str(exc)) from exc
    return BoundaryPairing(value, int(round(value)))


def bilinearity_check(l1: OpenPolyline, l2: OpenPolyline,
                      p: OpenPolyline) -> bool:
    """True iff the boundary pairing is additive under concatenation of
    l1 and l2, in both argument positions, within 2 * EPS_INT turns."""
    from .polyline import concat_open

    joined = concat_open(l1, l2)
    left = boundary_pairing(joined, p).value
    right = boundary_pairing(l1, p).value + boundary_pairing(l2, p).value
    swapped_left = boundary_pairing(p, joined).value
    swapped_right = (boundary_pairing(p, l1).value
                     + boundary_pairing(p, l2).value)
    return (abs(left - right) <= 2.0 * EPS_INT
            and abs(swapped_left - swapped_right) <= 2.0 * EPS_INT)
