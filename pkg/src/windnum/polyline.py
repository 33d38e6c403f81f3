"""Polygonal-line data model and its algebra.

Polylines are value objects: an ordered tuple of points, repeats allowed.
Two lines with the same segment union but different point sequences are
different values.  A closed line's final segment (last point back to first)
is implicit.
"""

import json
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import EndpointMismatch
from .geomcore import Point, Segment


@dataclass(frozen=True, slots=True)
class OpenPolyline:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("a polyline needs at least one point")

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[-1]


@dataclass(frozen=True, slots=True)
class ClosedPolyline:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("a polyline needs at least one point")


Polyline = Union[OpenPolyline, ClosedPolyline]


@dataclass(frozen=True, slots=True)
class OneCycle:
    """A finite multiset of directed segments, each with distinct endpoints."""

    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        for s in self.segments:
            if s.start == s.end:
                raise ValueError(f"zero-length segment in 1-cycle: {s}")


def reverse(line: Polyline) -> Polyline:
    """The same line traversed in the opposite direction."""
    return type(line)(tuple(reversed(line.points)))


def concat_open(l1: OpenPolyline, l2: OpenPolyline) -> OpenPolyline:
    """Join two open lines sharing l1's end and l2's start (bit-identical).

    The shared point appears once in the result.
    """
    if l1.end != l2.start:
        raise EndpointMismatch(f"end {l1.end} != start {l2.start}")
    return OpenPolyline(l1.points + l2.points[1:])


def concat_closed(l1: ClosedPolyline, l2: ClosedPolyline) -> ClosedPolyline:
    """Join two closed lines sharing their last point (bit-identical)."""
    if l1.points[-1] != l2.points[-1]:
        raise EndpointMismatch(
            f"last points differ: {l1.points[-1]} != {l2.points[-1]}")
    return ClosedPolyline(l1.points + l2.points)


def segments_of(line: Polyline) -> list[Segment]:
    """Consecutive segments, with the closing segment for closed lines.

    Zero-length segments (repeated consecutive points) are omitted, so
    intersection code never sees degenerate segments; the point sequence
    itself is untouched.
    """
    pts = line.points
    pairs = list(zip(pts, pts[1:]))
    if isinstance(line, ClosedPolyline) and len(pts) > 1:
        pairs.append((pts[-1], pts[0]))
    return [Segment(a, b) for a, b in pairs if a != b]


def _hull_of(points: Sequence[Point]) -> list[Point]:
    uniq = sorted({(p.x, p.y) for p in points})
    if len(uniq) <= 2:
        return [Point(x, y) for x, y in uniq]

    def half(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) > 0.0:
                    break
                out.pop()
            out.append(p)
        return out

    lower = half(uniq)
    upper = half(reversed(uniq))
    return [Point(x, y) for x, y in lower[:-1] + upper[:-1]]


def convex_hull(points: Sequence[Point]) -> ClosedPolyline:
    """Convex hull as a closed line, vertices counterclockwise, no three of
    them collinear (monotone chain with strict turns)."""
    if not points:
        raise ValueError("convex hull of an empty point set")
    return ClosedPolyline(tuple(_hull_of(points)))


def bounding_box(points: Sequence[Point]) -> tuple[Point, Point]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return Point(min(xs), min(ys)), Point(max(xs), max(ys))


def far_point(line: Polyline) -> Point:
    """A point strictly outside the convex hull of the line's points: the
    upper-right bounding-box corner offset by the box diagonal."""
    lo, hi = bounding_box(line.points)
    diag = math.hypot(hi.x - lo.x, hi.y - lo.y)
    pad = diag if diag > 0.0 else 1.0
    return Point(hi.x + pad, hi.y + pad)


# --- polyline JSON format (shared with the CLI) -----------------------------
#
# {"closed": true|false, "points": [[x, y], ...]}
# Point order is significant; coordinates must be finite numbers.

def polyline_to_obj(line: Polyline) -> dict:
    return {
        "closed": isinstance(line, ClosedPolyline),
        "points": [[p.x, p.y] for p in line.points],
    }


def polyline_from_obj(obj: object) -> Polyline:
    if not isinstance(obj, dict):
        raise ValueError("polyline document must be a JSON object")
    if not isinstance(obj.get("closed"), bool):
        raise ValueError('polyline document needs a boolean "closed" field')
    raw = obj.get("points")
    if not isinstance(raw, list) or not raw:
        raise ValueError('polyline document needs a non-empty "points" list')
    pts = []
    for entry in raw:
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)):
            raise ValueError(f"bad point entry: {entry!r}")
        pts.append(Point(float(entry[0]), float(entry[1])))
    return ClosedPolyline(tuple(pts)) if obj["closed"] else OpenPolyline(tuple(pts))


def dumps_polyline(line: Polyline) -> str:
    return json.dumps(polyline_to_obj(line))


def loads_polyline(text: str) -> Polyline:
    return polyline_from_obj(json.loads(text))
