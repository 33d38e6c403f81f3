"""Complement colorings of a closed polygonal line on a sampling grid.

Each grid cell center is labeled with the winding number of the line around
it (or marked as boundary when it sits on the line).  Labels realize the
integer coloring of the complement: constant on connected components, and
stepping by one across a single transversal segment crossing.  Reducing
labels mod 2 gives the checkerboard coloring whose black part is the
interior modulo 2.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BoundaryPoint
from .geomcore import TAU_PT, Point
from .polyline import ClosedPolyline, bounding_box, segments_of
from .winding import _assert_off_line, _winding_points


class PointTag(Enum):
    ON_BOUNDARY = "on_boundary"
    OFF = "off"


@dataclass(frozen=True, slots=True)
class PointClass:
    tag: PointTag
    winding: int | None = None


def classify_point(l: ClosedPolyline, p: Point) -> PointClass:
    """ON_BOUNDARY within TAU_PT of the line, else OFF with its winding."""
    try:
        _assert_off_line(l, p)
    except Exception:
        return PointClass(PointTag.ON_BOUNDARY)
    w, _ = _winding_points(l.points, p)
    return PointClass(PointTag.OFF, w)


def interior_mod2(pc: PointClass) -> bool:
    """True iff the classified point has odd winding number."""
    if pc.tag is PointTag.ON_BOUNDARY:
        raise BoundaryPoint("interior mod 2 is undefined on the boundary")
    return pc.winding % 2 == 1


@dataclass(frozen=True, slots=True)
class RegionGrid:
    """Winding labels at the centers of an nx-by-ny cell grid.

    ``labels[iy][ix]`` is the label of the cell in column ix (left to right)
    and row iy (bottom to top); None marks a boundary cell.
    """

    lo: Point
    hi: Point
    nx: int
    ny: int
    labels: tuple[tuple[int | None, ...], ...]

    def cell_center(self, ix: int, iy: int) -> Point:
        dx = (self.hi.x - self.lo.x) / self.nx
        dy = (self.hi.y - self.lo.y) / self.ny
        return Point(self.lo.x + (ix + 0.5) * dx, self.lo.y + (iy + 0.5) * dy)

    def to_obj(self) -> dict:
        return {
            "bbox": [[self.lo.x, self.lo.y], [self.hi.x, self.hi.y]],
            "nx": self.nx,
            "ny": self.ny,
            "labels": [list(row) for row in self.labels],
        }


def mobius_alexander_grid(l: ClosedPolyline, nx: int, ny: int) -> RegionGrid:
    """Label every cell center of an inflated-bounding-box grid by winding.

    The box around the line's points is inflated by 10% of its diagonal on
    every side, which puts the outer frame of cells in the unbounded
    (label 0) component at the default resolutions.
    """
    if nx < 2 or ny < 2:
        raise ValueError("grid needs at least 2x2 cells")
    lo, hi = bounding_box(l.points)
    diag = math.hypot(hi.x - lo.x, hi.y - lo.y)
    pad = 0.1 * (diag if diag > 0.0 else 1.0)
    lo = Point(lo.x - pad, lo.y - pad)
    hi = Point(hi.x + pad, hi.y + pad)
    dx = (hi.x - lo.x) / nx
    dy = (hi.y - lo.y) / ny
    rows = []
    for iy in range(ny):
        row: list[int | None] = []
        for ix in range(nx):
            pc = classify_point(l, Point(lo.x + (ix + 0.5) * dx,
                                         lo.y + (iy + 0.5) * dy))
            row.append(None if pc.tag is PointTag.ON_BOUNDARY else pc.winding)
        rows.append(tuple(row))
    return RegionGrid(lo, hi, nx, ny, tuple(rows))


def checkerboard_mask(grid: RegionGrid) -> tuple[tuple[bool | None, ...], ...]:
    """Label parity per cell: True (black) for odd winding, None on boundary."""
    return tuple(
        tuple(None if v is None else v % 2 == 1 for v in row)
        for row in grid.labels
    )


# --- SVG rendering -----------------------------------------------------------

_BOUNDARY_FILL = "#999999"


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _ramp_color(v: int, vmax: int) -> str:
    if v == 0:
        return "#ffffff"
    frac = min(abs(v) / vmax, 1.0)
    if v > 0:
        r, g, b = 255, round(255 * (1 - 0.7 * frac)), round(255 * (1 - 0.85 * frac))
    else:
        r, g, b = round(255 * (1 - 0.85 * frac)), round(255 * (1 - 0.6 * frac)), 255
    return f"#{r:02x}{g:02x}{b:02x}"


def render_svg(l: ClosedPolyline, grid: RegionGrid, mode: str = "integer") -> str:
    """Deterministic SVG: grid cells filled by label, line drawn on top with
    direction arrows at segment midpoints.

    mode "integer" uses a diverging ramp (blue negative, red positive);
    mode "parity" paints odd cells black and even cells white.
    """
    if mode not in ("integer", "parity"):
        raise ValueError(f"unknown render mode {mode!r}")
    w = grid.hi.x - grid.lo.x
    h = grid.hi.y - grid.lo.y
    dx, dy = w / grid.nx, h / grid.ny
    vmax = max(
        (abs(v) for row in grid.labels for v in row if v is not None),
        default=0,
    ) or 1

    def sx(x: float) -> float:
        return x - grid.lo.x

    def sy(y: float) -> float:
        return grid.hi.y - y  # SVG y axis points down

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(w)} {_fmt(h)}" '
        f'width="640" height="{_fmt(640 * h / w)}">',
    ]
    for iy, row in enumerate(grid.labels):
        for ix, v in enumerate(row):
            if v is None:
                fill = _BOUNDARY_FILL
            elif mode == "parity":
                fill = "#000000" if v % 2 == 1 else "#ffffff"
            else:
                fill = _ramp_color(v, vmax)
            out.append(
                f'<rect x="{_fmt(ix * dx)}" y="{_fmt(h - (iy + 1) * dy)}" '
                f'width="{_fmt(dx)}" height="{_fmt(dy)}" fill="{fill}"/>'
            )
    segs = segments_of(l)
    if segs:
        stroke = max(w, h) / 200.0
        out.append(
            f'<g stroke="#1a7a1a" stroke-width="{_fmt(stroke)}" fill="none">')
        for s in segs:
            out.append(
                f'<line x1="{_fmt(sx(s.start.x))}" y1="{_fmt(sy(s.start.y))}" '
                f'x2="{_fmt(sx(s.end.x))}" y2="{_fmt(sy(s.end.y))}"/>'
            )
        out.append("</g>")
        arrow = max(w, h) / 60.0
        for s in segs:
            mx, my = 0.5 * (s.start.x + s.end.x), 0.5 * (s.start.y + s.end.y)
            ang = math.atan2(s.end.y - s.start.y, s.end.x - s.start.x)
            tips = []
            for da in (0.0, 2.6, -2.6):
                tips.append(
                    f"{_fmt(sx(mx + arrow * math.cos(ang + da)))},"
                    f"{_fmt(sy(my + arrow * math.sin(ang + da)))}"
                )
            out.append(f'<polygon points="{" ".join(tips)}" fill="#1a7a1a"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
