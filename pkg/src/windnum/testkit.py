"""Deterministic generators and independent oracles for the property suites.

Generators draw vertices from an integer lattice so that orientation
decisions on generated data are exact in double precision; general position
is obtained by rejection sampling against the real predicate, not by
construction.
"""

import math
from dataclasses import dataclass
from typing import Callable, TypeVar

from .errors import GenerationExhausted, PointOnLine
from .geomcore import (
    EPS_INT,
    TAU_PT,
    TWO_PI,
    Point,
    _dist_point_segment,
    in_general_position,
    oriented_angle,
)
from .polyline import ClosedPolyline, OpenPolyline, Polyline
from .rng import CounterRng, mix64

__all__ = [
    "CounterRng",
    "GenConfig",
    "gen_general_position_pair",
    "gen_lattice_points",
    "gen_closed_line",
    "gen_star_polygon",
    "sampled_angle_oracle",
    "shrink",
    "mix64",
]


@dataclass(frozen=True, slots=True)
class GenConfig:
    seed: int
    max_vertices: int = 8
    coord_range: int = 10**6
    perturbation: float = 0.0

    def __post_init__(self) -> None:
        if self.max_vertices < 3:
            raise ValueError("max_vertices must be at least 3")
        if self.coord_range < 10:
            raise ValueError("coord_range must be at least 10")


def gen_lattice_points(rng: CounterRng, count: int, coord_range: int,
                       perturbation: float = 0.0) -> list[Point]:
    """Distinct lattice points in [-coord_range, coord_range]^2, optionally
    perturbed by a uniform offset of the given magnitude."""
    seen: set[tuple[float, float]] = set()
    pts: list[Point] = []
    while len(pts) < count:
        x = float(rng.randint(-coord_range, coord_range))
        y = float(rng.randint(-coord_range, coord_range))
        if (x, y) in seen:
            continue
        seen.add((x, y))
        if perturbation > 0.0:
            x += rng.uniform(-perturbation, perturbation)
            y += rng.uniform(-perturbation, perturbation)
        pts.append(Point(x, y))
    return pts


def gen_closed_line(rng: CounterRng, m: int, coord_range: int) -> ClosedPolyline:
    """A random closed line on m distinct lattice vertices (no position
    guarantees beyond distinctness)."""
    return ClosedPolyline(tuple(gen_lattice_points(rng, m, coord_range)))


def gen_off_line_point(rng: CounterRng, line: Polyline,
                       coord_range: int) -> Point:
    """A random lattice point not lying on the line."""
    pts = line.points
    m = len(pts)
    closed = isinstance(line, ClosedPolyline)
    last = m if closed else m - 1
    for _ in range(10_000):
        o = Point(float(rng.randint(-coord_range, coord_range)),
                  float(rng.randint(-coord_range, coord_range)))
        clear = all(
            (o.x - p.x) ** 2 + (o.y - p.y) ** 2 > TAU_PT * TAU_PT for p in pts
        ) and all(
            pts[i] == pts[(i + 1) % m]
            or _dist_point_segment(o.x, o.y, pts[i].x, pts[i].y,
                                   pts[(i + 1) % m].x, pts[(i + 1) % m].y) > TAU_PT
            for i in range(last)
        )
        if clear:
            return o
    raise GenerationExhausted("no off-line point found")


def gen_general_position_pair(cfg: GenConfig) -> tuple[ClosedPolyline, OpenPolyline]:
    """A (closed, open) pair whose vertex union is in general position.

    Deterministic in the seed; rejection-sampled with a 10^4 budget
    (:class:`GenerationExhausted` beyond that).
    """
    rng = CounterRng(cfg.seed, stream=0x475050)
    for _ in range(10_000):
        m_closed = rng.randint(3, cfg.max_vertices)
        m_open = rng.randint(2, max(2, cfg.max_vertices // 2))
        pts = gen_lattice_points(rng, m_closed + m_open, cfg.coord_range,
                                 cfg.perturbation)
        if in_general_position(pts):
            return (ClosedPolyline(tuple(pts[:m_closed])),
                    OpenPolyline(tuple(pts[m_closed:])))
    raise GenerationExhausted("general-position sampling budget exceeded")


def gen_general_position_open_pair(cfg: GenConfig) -> tuple[OpenPolyline, OpenPolyline]:
    """Two open lines whose vertex union is in general position."""
    rng = CounterRng(cfg.seed, stream=0x47504F)
    for _ in range(10_000):
        m1 = rng.randint(2, cfg.max_vertices)
        m2 = rng.randint(2, cfg.max_vertices)
        pts = gen_lattice_points(rng, m1 + m2, cfg.coord_range,
                                 cfg.perturbation)
        if in_general_position(pts):
            return (OpenPolyline(tuple(pts[:m1])),
                    OpenPolyline(tuple(pts[m1:])))
    raise GenerationExhausted("general-position sampling budget exceeded")


def gen_general_position_closed_pair(
    cfg: GenConfig,
) -> tuple[ClosedPolyline, ClosedPolyline]:
    """Two closed lines whose vertex union is in general position."""
    rng = CounterRng(cfg.seed, stream=0x475043)
    for _ in range(10_000):
        m1 = rng.randint(3, cfg.max_vertices)
        m2 = rng.randint(3, cfg.max_vertices)
        pts = gen_lattice_points(rng, m1 + m2, cfg.coord_range,
                                 cfg.perturbation)
        if in_general_position(pts):
            return (ClosedPolyline(tuple(pts[:m1])),
                    ClosedPolyline(tuple(pts[m1:])))
    raise GenerationExhausted("general-position sampling budget exceeded")


def gen_star_polygon(rng: CounterRng, m: int, center: Point,
                     radius: float) -> ClosedPolyline:
    """A simple (star-shaped) closed polygon: sorted angles around the
    center, random radii, all angular gaps below pi."""
    if m < 3:
        raise ValueError("need at least 3 vertices")
    for _ in range(1000):
        angles = sorted(rng.uniform(0.0, TWO_PI) for _ in range(m))
        gaps = [b - a for a, b in zip(angles, angles[1:])]
        gaps.append(TWO_PI - (angles[-1] - angles[0]))
        if max(gaps) >= 0.95 * math.pi:
            continue
        pts = tuple(
            Point(center.x + r * math.cos(a), center.y + r * math.sin(a))
            for a, r in ((a, radius * rng.uniform(0.3, 1.0)) for a in angles)
        )
        return ClosedPolyline(pts)
    raise GenerationExhausted("no star polygon with small angular gaps")


def sampled_angle_oracle(line: ClosedPolyline, o: Point,
                         steps_per_segment: int) -> float:
    """Total turning angle around o accumulated over a fine subdivision of
    the closed traversal (radians).

    Every per-step angle is kept below pi/2 by adaptive refinement, so the
    result never depends on the branch behavior of a single large angle.
    Independent of the vertex-angle-sum route.
    """
    if steps_per_segment < 2:
        raise ValueError("steps_per_segment must be at least 2")
    pts = line.points
    m = len(pts)
    total = 0.0
    for i in range(m):
        a = pts[i]
        b = pts[(i + 1) % m]
        if a == b:
            continue
        steps = steps_per_segment
        while True:
            seg_sum = 0.0
            ok = True
            prev = a
            for k in range(1, steps + 1):
                t = k / steps
                cur = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)) \
                    if k < steps else b
                step_angle = oriented_angle(o, prev, cur)
                if abs(step_angle) >= math.pi / 2.0:
                    ok = False
                    break
                seg_sum += step_angle
                prev = cur
            if ok:
                total += seg_sum
                break
            steps *= 2
            if steps > 1 << 20:
                raise PointOnLine(
                    f"{o} is numerically on segment {a}-{b}")
    return total


T = TypeVar("T")


def _shrink_line(line: Polyline, fails: Callable[[Polyline], bool]) -> Polyline:
    current = line
    changed = True
    while changed:
        changed = False
        pts = current.points
        for i in range(len(pts)):
            if len(pts) <= 1:
                break
            candidate_pts = pts[:i] + pts[i + 1:]
            try:
                candidate = type(current)(candidate_pts)
                if fails(candidate):
                    current = candidate
                    changed = True
                    break
            except Exception:
                continue
        if changed:
            continue
        pts = current.points
        for i, p in enumerate(pts):
            for newp in (Point(_halve(p.x), _halve(p.y)),
                         Point(_halve(p.x), p.y),
                         Point(p.x, _halve(p.y))):
                if newp == p:
                    continue
                candidate_pts = pts[:i] + (newp,) + pts[i + 1:]
                try:
                    candidate = type(current)(candidate_pts)
                    if fails(candidate):
                        current = candidate
                        changed = True
                        break
                except Exception:
                    continue
            if changed:
                break
    return current


def _halve(v: float) -> float:
    if v == 0.0:
        return 0.0
    half = v / 2.0
    return float(int(half)) if float(v).is_integer() else half


def shrink(instance: T, fails: Callable[[T], bool]) -> T:
    """Greedily reduce a failing instance while the failure persists.

    Removes vertices and moves coordinates toward zero (halving, staying on
    the lattice for integral inputs).  Supports a single polyline or a tuple
    of polylines; a passing instance is returned unchanged.
    """
    if not fails(instance):
        return instance
    if isinstance(instance, (OpenPolyline, ClosedPolyline)):
        return _shrink_line(instance, fails)
    if isinstance(instance, tuple):
        current = instance
        for idx, part in enumerate(current):
            if not isinstance(part, (OpenPolyline, ClosedPolyline)):
                continue

            def fails_part(candidate: Polyline, idx: int = idx) -> bool:
                trial = current[:idx] + (candidate,) + current[idx + 1:]
                return fails(trial)

            current = (current[:idx]
                       + (_shrink_line(current[idx], fails_part),)
                       + current[idx + 1:])
        return current
    return instance
