"""Winding numbers of polygonal lines.

The winding number of a closed line around an off-line point is the sum of
the oriented angles subtended at that point by consecutive vertex pairs
(closing pair included), divided by one full turn.  The sum is always an
integer multiple of a turn; every result carries the pre-rounding residual so
integrality is certified numerically rather than assumed.

The open-line variant (``w_prime``) drops the closing pair and is generally a
non-integer number of turns.  The module also hosts the constructive
generators used throughout the test suites: prescribed-winding loops,
centrally symmetric lines, triple paths with prescribed pairwise windings,
and sector-avoiding paths.
"""

import math
from dataclasses import dataclass

from .errors import (
    DegenerateInput,
    FanBlocked,
    GenerationExhausted,
    IntegralityViolation,
    PointOnLine,
)
from .geomcore import (
    EPS_INT,
    TAU_PT,
    TWO_PI,
    Point,
    _dist_point_segment,
    oriented_angle,
)
from .polyline import ClosedPolyline, OneCycle, OpenPolyline, Polyline
from .rng import CounterRng

# A turn count that may be fractional (open lines).
TurnFraction = float


@dataclass(frozen=True, slots=True)
class WindingResult:
    """An integer number of turns plus the pre-rounding residual (radians)."""

    w: int
    residual: float

    @property
    def residual_turns(self) -> float:
        return self.residual / TWO_PI


def _assert_off_line(line: Polyline, o: Point) -> None:
    pts = line.points
    t2 = TAU_PT * TAU_PT
    for p in pts:
        dx, dy = p.x - o.x, p.y - o.y
        if dx * dx + dy * dy <= t2:
            raise PointOnLine(f"{o} coincides with a vertex")
    closed = isinstance(line, ClosedPolyline)
    m = len(pts)
    last = m if closed else m - 1
    for i in range(last):
        a = pts[i]
        b = pts[(i + 1) % m]
        if a == b:
            continue
        if _dist_point_segment(o.x, o.y, a.x, a.y, b.x, b.y) <= TAU_PT:
            raise PointOnLine(f"{o} lies on segment {a}-{b}")


def _angle_sum(pts: tuple[Point, ...], o: Point, closed: bool) -> float:
    total = 0.0
    m = len(pts)
    last = m if closed else m - 1
    for i in range(last):
        a = pts[i]
        b = pts[(i + 1) % m]
        if a != b:
            total += oriented_angle(o, a, b)
    return total


def _round_turns(total: float) -> tuple[int, float]:
    w = int(round(total / TWO_PI))
    residual = abs(total - w * TWO_PI)
    if residual > TWO_PI * EPS_INT:
        raise IntegralityViolation(
            f"angle sum {total!r} is {residual / TWO_PI:.3g} turns from integer")
    return w, residual


def _winding_points(pts: tuple[Point, ...], o: Point) -> tuple[int, float]:
    return _round_turns(_angle_sum(pts, o, closed=True))


def winding_number(line: ClosedPolyline, o: Point) -> WindingResult:
    """Winding number of a closed line around o, with certified integrality.

    Raises :class:`PointOnLine` when o lies on the line and
    :class:`IntegralityViolation` when the angle sum fails to round (which
    signals numerically pathological input, not a math failure).
    """
    _assert_off_line(line, o)
    w, residual = _winding_points(line.points, o)
    return WindingResult(w, residual)


def w_prime(line: OpenPolyline, o: Point) -> TurnFraction:
    """Turn fraction of an open line around o (no closing segment).

    Satisfies w_prime(A1..Am A1) = winding_number(A1..Am) and the split
    identity w_prime(A1..Am) = w_prime(A1..Aj) + w_prime(Aj..Am).
    """
    _assert_off_line(line, o)
    return _angle_sum(line.points, o, closed=False) / TWO_PI


def winding_of_cycle(cycle: OneCycle, o: Point) -> WindingResult:
    """Winding number of a 1-cycle: the rounded sum of per-segment angles.

    Cycle-ness is not re-verified; a multiset that is not a cycle surfaces
    as :class:`IntegralityViolation`.
    """
    total = 0.0
    for s in cycle.segments:
        if _dist_point_segment(o.x, o.y, s.start.x, s.start.y,
                               s.end.x, s.end.y) <= TAU_PT:
            raise PointOnLine(f"{o} lies on cycle segment {s}")
        total += oriented_angle(o, s.start, s.end)
    w, residual = _round_turns(total)
    return WindingResult(w, residual)


def fan_decomposition(line: ClosedPolyline, o: Point, pivot: Point) -> WindingResult:
    """Sum of the triangle windings (pivot, A_i, A_{i+1}) around o.

    Equals winding_number(line, o) whenever o is off the line and off every
    pivot-to-vertex segment (otherwise :class:`FanBlocked`).  The residual
    reported is the largest per-triangle residual.
    """
    _assert_off_line(line, o)
    for v in line.points:
        if _dist_point_segment(o.x, o.y, pivot.x, pivot.y, v.x, v.y) <= TAU_PT:
            raise FanBlocked(f"{o} lies on segment {pivot}-{v}")
    pts = line.points
    m = len(pts)
    total = 0
    worst = 0.0
    for i in range(m):
        tri = (pivot, pts[i], pts[(i + 1) % m])
        w, residual = _winding_points(tri, o)
        total += w
        worst = max(worst, residual)
    return WindingResult(total, worst)


# --- constructive generators -------------------------------------------------

def _rotated(vx: float, vy: float, angle: float) -> tuple[float, float]:
    c, s = math.cos(angle), math.sin(angle)
    return vx * c - vy * s, vx * s + vy * c


def gen_loop(n: int, o: Point, radius: float) -> ClosedPolyline:
    """A closed line whose winding number around o is exactly n.

    n = 0 gives a single-point line; otherwise an equilateral triangle
    centered at o, counterclockwise for n > 0 and clockwise for n < 0,
    repeated |n| times.
    """
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    if n == 0:
        return ClosedPolyline((Point(o.x + radius, o.y),))
    step = TWO_PI / 3.0 if n > 0 else -TWO_PI / 3.0
    tri = tuple(
        Point(o.x + radius * math.cos(i * step), o.y + radius * math.sin(i * step))
        for i in range(3)
    )
    return ClosedPolyline(tri * abs(n))


def gen_symmetric(k: int, o: Point, seed: int) -> ClosedPolyline:
    """A random 2k-point closed line centrally symmetric about o.

    Vertex k+j is the reflection of vertex j through o; the line avoids o,
    so its winding number around o is odd.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    rng = CounterRng(seed, stream=0x53594D)
    for _ in range(1000):
        half = []
        for _ in range(k):
            theta = rng.uniform(0.0, TWO_PI)
            r = rng.uniform(1.0, 10.0)
            half.append(Point(o.x + r * math.cos(theta), o.y + r * math.sin(theta)))
        pts = half + [Point(2.0 * o.x - p.x, 2.0 * o.y - p.y) for p in half]
        line = ClosedPolyline(tuple(pts))
        m = len(pts)
        clear = True
        for i in range(m):
            a, b = pts[i], pts[(i + 1) % m]
            if a == b:
                continue
            if _dist_point_segment(o.x, o.y, a.x, a.y, b.x, b.y) <= 1e-7:
                clear = False
                break
        if clear:
            return line
    raise GenerationExhausted("could not draw a symmetric line avoiding o")


def _loop_excursion(n: int, o: Point, anchor: Point) -> tuple[Point, ...]:
    """Detour anchor -> loop -> anchor adding exactly n turns around o.

    The loop's first vertex sits on the segment from o to the anchor, so the
    connecting legs subtend an exactly-zero angle at o.
    """
    if n == 0:
        return ()
    ux, uy = 0.5 * (anchor.x - o.x), 0.5 * (anchor.y - o.y)
    step = TWO_PI / 3.0 if n > 0 else -TWO_PI / 3.0
    ring = tuple(
        Point(o.x + v[0], o.y + v[1])
        for v in (_rotated(ux, uy, i * step) for i in range(3))
    )
    return ring * abs(n) + (ring[0],)


def gen_three_paths(
    n1: int, n2: int, a: Point, b: Point, o: Point
) -> tuple[OpenPolyline, OpenPolyline, OpenPolyline]:
    """Three paths from a to b avoiding o with pairwise windings n1, n2, n1+n2.

    Closing path i against reversed path j yields winding n1 for (1,2), n2
    for (2,3) and n1+n2 for (1,3): path 2 is a base route, path 1 prepends a
    +n1 loop around o, path 3 prepends a -n2 loop.
    """
    def close(p: Point, q: Point) -> bool:
        return (p.x - q.x) ** 2 + (p.y - q.y) ** 2 <= TAU_PT * TAU_PT

    if close(a, b) or close(a, o) or close(b, o):
        raise DegenerateInput("a, b and o must be pairwise distinct")

    span = math.hypot(b.x - a.x, b.y - a.y)
    if _dist_point_segment(o.x, o.y, a.x, a.y, b.x, b.y) > 0.05 * span:
        base = (a, b)
    else:
        # Route around o through a perpendicular detour on the far side.
        mx, my = 0.5 * (a.x + b.x), 0.5 * (a.y + b.y)
        px, py = -(b.y - a.y) / span, (b.x - a.x) / span
        side = -1.0 if (px * (o.x - mx) + py * (o.y - my)) > 0.0 else 1.0
        base = (a, Point(mx + side * span * px, my + side * span * py), b)

    l2 = OpenPolyline(base)
    l1 = OpenPolyline((a,) + _loop_excursion(n1, o, a) + base) if n1 else l2
    l3 = OpenPolyline((a,) + _loop_excursion(-n2, o, a) + base) if n2 else l2
    return l1, l2, l3


def loop_closure(path: OpenPolyline, back: OpenPolyline) -> ClosedPolyline:
    """The closed line obtained by following path and then back reversed.

    Both must run between the same endpoints (path a->b, back a->b).
    """
    from .polyline import concat_open, reverse

    roundtrip = concat_open(path, reverse(back))
    return ClosedPolyline(roundtrip.points)


def _segment_hits_ray(p: Point, q: Point, apex: Point,
                      dx: float, dy: float) -> bool:
    """True iff segment pq meets the closed ray from apex in direction d."""
    px, py = p.x - apex.x, p.y - apex.y
    qx, qy = q.x - apex.x, q.y - apex.y
    scale = max(abs(px), abs(py), abs(qx), abs(qy), abs(dx), abs(dy))
    tol = 1e-12 * scale * scale
    c1 = dx * py - dy * px
    c2 = dx * qy - dy * qx
    if abs(c1) <= tol and abs(c2) <= tol:
        return max(dx * px + dy * py, dx * qx + dy * qy) >= 0.0
    if abs(c1) <= tol:
        return dx * px + dy * py >= 0.0
    if abs(c2) <= tol:
        return dx * qx + dy * qy >= 0.0
    if (c1 > 0.0) == (c2 > 0.0):
        return False
    t = c1 / (c1 - c2)
    ix = px + t * (qx - px)
    iy = py + t * (qy - py)
    return dx * ix + dy * iy >= 0.0


def path_avoids_ray(path: OpenPolyline, apex: Point, through: Point) -> bool:
    """True iff no segment of path meets the closed ray apex -> through."""
    dx, dy = through.x - apex.x, through.y - apex.y
    pts = path.points
    return not any(
        a != b and _segment_hits_ray(a, b, apex, dx, dy)
        for a, b in zip(pts, pts[1:])
    )


def gen_sector_path(j: int, triangle: tuple[Point, Point, Point], o: Point,
                    seed: int) -> OpenPolyline:
    """A random path joining triangle vertex j+1 to vertex j+2 (mod 3) whose
    segments avoid the closed ray from o through vertex j.

    The triangle must be equilateral with center o.  Vertex angles advance by
    one third of a turn, so for counterclockwise labeling the path's turn
    fraction around o is exactly 1/3.
    """
    a0, a1, a2 = triangle
    radii = [math.hypot(p.x - o.x, p.y - o.y) for p in (a0, a1, a2)]
    r = radii[0]
    gx = (a0.x + a1.x + a2.x) / 3.0 - o.x
    gy = (a0.y + a1.y + a2.y) / 3.0 - o.y
    if (r <= 0.0
            or max(abs(v - r) for v in radii) > 1e-6 * r
            or math.hypot(gx, gy) > 1e-6 * r):
        raise DegenerateInput("triangle is not equilateral with center o")

    blocked = triangle[j % 3]
    src = triangle[(j + 1) % 3]
    dst = triangle[(j + 2) % 3]
    theta = math.atan2(blocked.y - o.y, blocked.x - o.x)
    margin = math.pi / 9.0
    rng = CounterRng(seed, stream=0x534543)

    for _ in range(1000):
        k = rng.randint(0, 5)
        angles = ([theta + TWO_PI / 3.0]
                  + [theta + rng.uniform(margin, TWO_PI - margin) for _ in range(k)]
                  + [theta + 2.0 * TWO_PI / 3.0])
        if any(abs(u - v) >= math.pi - 0.01 for u, v in zip(angles, angles[1:])):
            continue  # a step that wide could sweep across the blocked ray
        mid = [
            Point(o.x + rad * math.cos(ang), o.y + rad * math.sin(ang))
            for ang, rad in ((angles[i], r * rng.uniform(0.4, 2.2))
                             for i in range(1, k + 1))
        ]
        path = OpenPolyline((src, *mid, dst))
        if path_avoids_ray(path, o, blocked):
            return path
    raise GenerationExhausted("could not draw a path avoiding the ray")
