"""Plane primitives: oriented angles, the orientation predicate, segment
intersection, point-on-segment tests, and the general-position check.

Coordinates are double-precision floats. Test data is drawn from the integer
lattice so that cross products (magnitude < 2^53) are exact; the tolerances
below only matter for perturbed or hand-entered inputs.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DegeneratePoint, NonGenericIntersection

# Tolerances (see README):
TAU_ORIENT = 1e-12  # orientation collinearity band, relative, scaled by coord^2
TAU_PT = 1e-9       # absolute distance for point coincidence / on-segment tests
TAU_ANG = 1e-9      # radians, for angle identities
EPS_INT = 1e-6      # turns, integrality certification threshold

TWO_PI = 2.0 * math.pi

# An oriented angle is a plain float in (-pi, pi].
OrientedAngle = float


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")


@dataclass(frozen=True, slots=True)
class Segment:
    start: Point
    end: Point


class Orientation(Enum):
    CCW = 1
    CW = -1
    COLLINEAR = 0


def oriented_angle(o: Point, a: Point, b: Point) -> OrientedAngle:
    """Angle t in (-pi, pi] rotating ray o->a onto ray o->b counterclockwise.

    a == b is permitted (zero angle); a or b coinciding with o (within
    ``TAU_PT``) raises :class:`DegeneratePoint`.  The boundary value pi is
    always returned as +pi, never -pi.
    """
    ax, ay = a.x - o.x, a.y - o.y
    bx, by = b.x - o.x, b.y - o.y
    if ax * ax + ay * ay <= TAU_PT * TAU_PT:
        raise DegeneratePoint(f"first ray endpoint coincides with vertex {o}")
    if bx * bx + by * by <= TAU_PT * TAU_PT:
        raise DegeneratePoint(f"second ray endpoint coincides with vertex {o}")
    t = math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return math.pi if t == -math.pi else t


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Turn direction of the ordered triple (a, b, c).

    |cross| <= TAU_ORIENT * scale^2 reports COLLINEAR, where scale is the
    largest coordinate magnitude among the inputs.
    """
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    scale = max(abs(a.x), abs(a.y), abs(b.x), abs(b.y), abs(c.x), abs(c.y))
    if abs(cross) <= TAU_ORIENT * scale * scale:
        return Orientation.COLLINEAR
    return Orientation.CCW if cross > 0.0 else Orientation.CW


def _dist_point_segment(px: float, py: float, ax: float, ay: float,
                        bx: float, by: float) -> float:
    dx, dy = bx - ax, by - ay
    len2 = dx * dx + dy * dy
    if len2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / len2
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(px - ax - t * dx, py - ay - t * dy)


def point_on_segment(p: Point, s: Segment) -> bool:
    """True iff p lies within distance ``TAU_PT`` of s (endpoints included)."""
    return _dist_point_segment(p.x, p.y, s.start.x, s.start.y,
                               s.end.x, s.end.y) <= TAU_PT


def point_on_segments(p: Point, segments: Iterable[Segment]) -> bool:
    """True iff p lies on some segment within distance ``TAU_PT``."""
    return any(point_on_segment(p, s) for s in segments)


def _within_span(p: Point, a: Point, b: Point) -> bool:
    # Bounding-box membership with TAU_PT slack; meaningful for points already
    # known to be collinear with (a, b).
    return (min(a.x, b.x) - TAU_PT <= p.x <= max(a.x, b.x) + TAU_PT
            and min(a.y, b.y) - TAU_PT <= p.y <= max(a.y, b.y) + TAU_PT)


def segment_intersection(s1: Segment, s2: Segment) -> Point | None:
    """Transversal interior intersection point of two open segments.

    Returns None for disjoint segments.  Raises
    :class:`NonGenericIntersection` when the segments overlap collinearly,
    touch at an endpoint, or one endpoint lies on the other segment: callers
    needing general position must treat that as a precondition violation.
    """
    a, b = s1.start, s1.end
    c, d = s2.start, s2.end
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)
    col = Orientation.COLLINEAR
    if ((d1 is col and _within_span(a, c, d))
            or (d2 is col and _within_span(b, c, d))
            or (d3 is col and _within_span(c, a, b))
            or (d4 is col and _within_span(d, a, b))):
        raise NonGenericIntersection(
            f"non-generic contact between {s1} and {s2}")
    if col in (d1, d2, d3, d4):
        return None  # an endpoint sits on the other carrier line, off-segment
    if d1 is not d2 and d3 is not d4:
        rx, ry = b.x - a.x, b.y - a.y
        sx, sy = d.x - c.x, d.y - c.y
        denom = rx * sy - ry * sx
        t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
        return Point(a.x + t * rx, a.y + t * ry)
    return None


def _proper_crossing(ax, ay, bx, by, cx, cy, dx, dy):
    """Strict transversal crossing test on raw coordinates.

    Returns the intersection point as an (x, y) tuple, or None.  Exact zero
    cross products are treated as non-crossing; callers filter collinear
    configurations beforehand.
    """
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    d1 = sx * (ay - cy) - sy * (ax - cx)
    d2 = sx * (by - cy) - sy * (bx - cx)
    if d1 == 0.0 or d2 == 0.0 or (d1 > 0.0) == (d2 > 0.0):
        return None
    d3 = rx * (cy - ay) - ry * (cx - ax)
    d4 = rx * (dy - ay) - ry * (dx - ax)
    if d3 == 0.0 or d4 == 0.0 or (d3 > 0.0) == (d4 > 0.0):
        return None
    denom = rx * sy - ry * sx
    t = ((cx - ax) * sy - (cy - ay) * sx) / denom
    return (ax + t * rx, ay + t * ry)


def in_general_position(points: Sequence[Point]) -> bool:
    """True iff no three points are collinear and no three of the segments
    joining them share a common interior point.

    The second condition is checked by brute force over all segment pairs:
    interior intersection points closer than ``TAU_PT`` that involve three
    or more distinct segments count as a violation.
    """
    pts = [(p.x, p.y) for p in points]
    n = len(pts)
    for i in range(n - 2):
        xi, yi = pts[i]
        for j in range(i + 1, n - 1):
            xj, yj = pts[j]
            ux, uy = xj - xi, yj - yi
            for k in range(j + 1, n):
                xk, yk = pts[k]
                cross = ux * (yk - yi) - uy * (xk - xi)
                scale = max(abs(xi), abs(yi), abs(xj), abs(yj),
                            abs(xk), abs(yk))
                if abs(cross) <= TAU_ORIENT * scale * scale:
                    return False

    segs = [(i, j) for i in range(n - 1) for j in range(i + 1, n)]
    # Interior intersections keyed by a TAU_PT-sized grid cell; a cell whose
    # hits involve >= 3 distinct segments flags a shared interior point.
    hits: dict[tuple[int, int], set[int]] = {}
    inv = 1.0 / TAU_PT
    for si in range(len(segs) - 1):
        i1, j1 = segs[si]
        ax, ay = pts[i1]
        bx, by = pts[j1]
        for sj in range(si + 1, len(segs)):
            i2, j2 = segs[sj]
            if i2 in (i1, j1) or j2 in (i1, j1):
                continue  # a shared endpoint is not an interior point
            cx, cy = pts[i2]
            dx, dy = pts[j2]
            x = _proper_crossing(ax, ay, bx, by, cx, cy, dx, dy)
            if x is None:
                continue
            key = (round(x[0] * inv), round(x[1] * inv))
            involved = hits.setdefault(key, set())
            involved.update((si, sj))
            if len(involved) >= 3:
                return False
    return True


def verify_triangle_angle_sum(o: Point, a: Point, b: Point, c: Point) -> float:
    """Sum of the three oriented angles at o subtended by the triangle sides.

    Equals +-2pi when o lies in the convex hull of {a, b, c} and 0 otherwise
    (within 4 * TAU_ANG), provided o is not on the segments ab, bc, ca.
    """
    return (oriented_angle(o, a, b)
            + oriented_angle(o, b, c)
            + oriented_angle(o, c, a))
