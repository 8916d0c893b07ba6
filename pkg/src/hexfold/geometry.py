"""Pointy-top hexagonal grids with a half-open ownership rule, and exact
distance computations between convex polygons.

A grid tiles the plane with regular hexagons that have two vertical edges
and a vertex at top and bottom.  A hexagon of side s has width sqrt(3)*s
and height 2*s.  Cell (q, r) sits at

    offset + q * (sqrt(3)*s, 0) + r * (sqrt(3)*s/2, 3*s/2).

Closed hexagons overlap on their borders, so ownership of boundary points
is decided deterministically: a boundary point belongs to the claimant
cell whose center comes first in (y, x)-lexicographic order.  With this
rule a cell keeps its open interior, its right border (the three open
edges on its right side) and its top and upper-right vertices, and every
point of the plane is owned by exactly one cell.  In particular no cell
owns both endpoints of any of its three long diagonals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

SQRT3 = math.sqrt(3.0)

# comparison tolerance for distance and boundary membership decisions
TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def translated(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class HexCell:
    q: int
    r: int


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon with vertices in counter-clockwise order."""

    vertices: Tuple[Point, ...]

    def edges(self) -> Iterator[Tuple[Point, Point]]:
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def contains_point(self, p: Point, tol: float = 0.0) -> bool:
        for a, b in self.edges():
            cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
            if cross < -tol:
                return False
        return True

    def centroid(self) -> Point:
        n = len(self.vertices)
        return Point(
            sum(v.x for v in self.vertices) / n,
            sum(v.y for v in self.vertices) / n,
        )


@dataclass(frozen=True)
class HexGrid:
    side: float
    offset: Point = Point(0.0, 0.0)

    @property
    def width(self) -> float:
        return SQRT3 * self.side

    def center(self, cell: HexCell) -> Point:
        s = self.side
        return Point(
            self.offset.x + SQRT3 * s * (cell.q + 0.5 * cell.r),
            self.offset.y + 1.5 * s * cell.r,
        )

    def _axial_frac(self, p: Point) -> Tuple[float, float]:
        s = self.side
        rf = (p.y - self.offset.y) / (1.5 * s)
        qf = (p.x - self.offset.x) / (SQRT3 * s) - rf / 2.0
        return qf, rf

    @staticmethod
    def _axial_round(qf: float, rf: float) -> Tuple[int, int]:
        xf, zf = qf, rf
        yf = -xf - zf
        rx, ry, rz = round(xf), round(yf), round(zf)
        dx, dy, dz = abs(rx - xf), abs(ry - yf), abs(rz - zf)
        if dx > dy and dx > dz:
            rx = -ry - rz
        elif dz > dy:
            rz = -rx - ry
        return int(rx), int(rz)

    def _contains_closed(self, cell: HexCell, p: Point, tol: float) -> bool:
        c = self.center(cell)
        dx = abs(p.x - c.x)
        dy = abs(p.y - c.y)
        s = self.side
        return dx <= SQRT3 * s / 2.0 + tol and dx / SQRT3 + dy <= s + tol

    def _center_key(self, cell: HexCell) -> Tuple[float, float]:
        c = self.center(cell)
        return (c.y, c.x)

    _NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))

    def cell_of(self, p: Point) -> HexCell:
        """Owning cell of p under the half-open boundary rule."""
        q0, r0 = self._axial_round(*self._axial_frac(p))
        best = None
        best_key = None
        for dq in (-1, 0, 1):
            for dr in (-1, 0, 1):
                cand = HexCell(q0 + dq, r0 + dr)
                if not self._contains_closed(cand, p, TOL):
                    continue
                key = self._center_key(cand)
                if best_key is None or key < best_key:
                    best, best_key = cand, key
        if best is None:
            # p is numerically outside every candidate; fall back to the
            # rounded cell, which is nearest in the hexagonal metric
            best = HexCell(q0, r0)
        return best

    def cell_membership(self, cell: HexCell, p: Point) -> bool:
        """True iff cell owns p.

        Decided locally: p must lie in the closed hexagon of cell and no
        claimant neighbour may precede cell in (y, x) order.
        """
        if not self._contains_closed(cell, p, TOL):
            return False
        key = self._center_key(cell)
        for dq, dr in self._NEIGHBOURS:
            nb = HexCell(cell.q + dq, cell.r + dr)
            if self._contains_closed(nb, p, TOL) and self._center_key(nb) < key:
                return False
        return True

    def cell_polygon(self, cell: HexCell) -> ConvexPolygon:
        c = self.center(cell)
        s = self.side
        h = SQRT3 * s / 2.0
        return ConvexPolygon(
            (
                Point(c.x, c.y + s),
                Point(c.x - h, c.y + s / 2.0),
                Point(c.x - h, c.y - s / 2.0),
                Point(c.x, c.y - s),
                Point(c.x + h, c.y - s / 2.0),
                Point(c.x + h, c.y + s / 2.0),
            )
        )

    def cells_in_disk(self, center: Point, radius: float) -> Iterator[HexCell]:
        """All cells whose center lies within radius of the given point."""
        s = self.side
        r_lo = math.ceil((center.y - radius - self.offset.y) / (1.5 * s) - 1e-12)
        r_hi = math.floor((center.y + radius - self.offset.y) / (1.5 * s) + 1e-12)
        rr = radius * radius
        for r in range(r_lo, r_hi + 1):
            cy = self.offset.y + 1.5 * s * r
            dy = cy - center.y
            rem = rr - dy * dy
            if rem < 0.0:
                continue
            half = math.sqrt(rem)
            x_lo = center.x - half
            x_hi = center.x + half
            q_lo = math.ceil((x_lo - self.offset.x) / (SQRT3 * s) - 0.5 * r - 1e-12)
            q_hi = math.floor((x_hi - self.offset.x) / (SQRT3 * s) - 0.5 * r + 1e-12)
            for q in range(q_lo, q_hi + 1):
                yield HexCell(q, r)


def cell_of(grid: HexGrid, p: Point) -> HexCell:
    return grid.cell_of(p)


def cell_membership(grid: HexGrid, cell: HexCell, p: Point) -> bool:
    return grid.cell_membership(cell, p)


def cell_polygon(grid: HexGrid, cell: HexCell) -> ConvexPolygon:
    return grid.cell_polygon(cell)


def _clamp01(t: float) -> float:
    if t < 0.0:
        return 0.0
    if t > 1.0:
        return 1.0
    return t


def point_segment_closest(p: Point, a: Point, b: Point) -> Point:
    vx, vy = b.x - a.x, b.y - a.y
    den = vx * vx + vy * vy
    if den == 0.0:
        return a
    t = _clamp01(((p.x - a.x) * vx + (p.y - a.y) * vy) / den)
    return Point(a.x + t * vx, a.y + t * vy)


def segment_closest_points(
    a1: Point, a2: Point, b1: Point, b2: Point
) -> Tuple[Point, Point, float]:
    """Closest point pair between two segments, with their distance."""
    ux, uy = a2.x - a1.x, a2.y - a1.y
    vx, vy = b2.x - b1.x, b2.y - b1.y
    wx, wy = a1.x - b1.x, a1.y - b1.y
    denom = (ux * vy - uy * vx)
    if abs(denom) > 1e-15:
        # segments are not parallel; check for a proper intersection
        t = (vx * wy - vy * wx) / denom
        u = (ux * wy - uy * wx) / denom
        if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
            pt = Point(a1.x + t * ux, a1.y + t * uy)
            return pt, pt, 0.0
    best = None
    for p, (c, d) in (
        (a1, (b1, b2)),
        (a2, (b1, b2)),
    ):
        foot = point_segment_closest(p, c, d)
        dist = p.distance_to(foot)
        if best is None or dist < best[2]:
            best = (p, foot, dist)
    for p, (c, d) in (
        (b1, (a1, a2)),
        (b2, (a1, a2)),
    ):
        foot = point_segment_closest(p, c, d)
        dist = p.distance_to(foot)
        if best is None or dist < best[2]:
            best = (foot, p, dist)
    return best


def polygon_closest_pair(p: ConvexPolygon, q: ConvexPolygon) -> Tuple[Point, Point, float]:
    """Closest point pair between two convex polygons (0 if they overlap)."""
    best = None
    for a1, a2 in p.edges():
        for b1, b2 in q.edges():
            cand = segment_closest_points(a1, a2, b1, b2)
            if best is None or cand[2] < best[2]:
                best = cand
    if best[2] > 0.0:
        # no edge contact: one polygon may still contain the other.
        # A degenerate (zero-area) polygon contains nothing this way.
        if _polygon_area(q) > 0.0 and q.contains_point(p.vertices[0]):
            v = p.vertices[0]
            return v, v, 0.0
        if _polygon_area(p) > 0.0 and p.contains_point(q.vertices[0]):
            v = q.vertices[0]
            return v, v, 0.0
    return best


def _polygon_area(p: ConvexPolygon) -> float:
    total = 0.0
    vs = p.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        total += a.x * b.y - b.x * a.y
    return 0.5 * total


def polygon_farthest_pair(p: ConvexPolygon, q: ConvexPolygon) -> Tuple[Point, Point, float]:
    best = None
    for v in p.vertices:
        for w in q.vertices:
            d = v.distance_to(w)
            if best is None or d > best[2]:
                best = (v, w, d)
    return best


def polygon_min_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    return polygon_closest_pair(p, q)[2]


def polygon_max_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    return polygon_farthest_pair(p, q)[2]
