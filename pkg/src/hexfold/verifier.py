"""Exact and sampled verification of periodic colourings.

The exact verifier enumerates every same-colour cell pair up to the
translation symmetry of the colouring: one cell ranges over a fundamental
parallelogram of the period vectors, the other over all cells (of every
layer) whose centre lies within the enumeration radius
b + 2 * max cell diameter.  Each pair is classified from the attainable
distance range [d_min, d_max] between the two closed cells:

* SAFE               the range misses [a, b];
* VIOLATION          interior point pairs attain a distance in [a, b]
                     (a concrete witness pair is produced);
* BOUNDARY_RESOLVED  the range only touches a or b (within 1e-9), and
                     every attaining point pair loses at least one of its
                     points to another cell under the ownership rule.

The sampled verifier draws seeded random point pairs at distance in
[a, b] and checks the colour sets are disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .constructions import Layer, PeriodicColouring
from .geometry import (
    TOL,
    ConvexPolygon,
    HexCell,
    Point,
    point_segment_closest,
    polygon_closest_pair,
    polygon_farthest_pair,
)

SAFE = "SAFE"
VIOLATION = "VIOLATION"
BOUNDARY_RESOLVED = "BOUNDARY_RESOLVED"


@dataclass(frozen=True)
class CellPairFinding:
    layer_a: int
    cell_a: HexCell
    layer_b: int
    cell_b: HexCell
    colour: int
    d_min: float
    d_max: float
    status: str
    witness: Optional[Tuple[Point, Point]] = None


@dataclass
class VerificationReport:
    valid: bool
    pairs_checked: int
    enumeration_radius: float
    min_same_colour_separation: float
    findings: List[CellPairFinding] = field(default_factory=list)

    def violations(self) -> List[CellPairFinding]:
        return [f for f in self.findings if f.status == VIOLATION]

    def boundary_cases(self) -> List[CellPairFinding]:
        return [f for f in self.findings if f.status == BOUNDARY_RESOLVED]


def _dedupe_pairs(pairs: List[Tuple[Point, Point]]) -> List[Tuple[Point, Point]]:
    seen = set()
    out = []
    for p, q in pairs:
        key = (round(p.x, 12), round(p.y, 12), round(q.x, 12), round(q.y, 12))
        if key not in seen:
            seen.add(key)
            out.append((p, q))
    return out


def _closest_attaining_pairs(
    pa: ConvexPolygon, pb: ConvexPolygon, d: float, tol: float
) -> List[Tuple[Point, Point]]:
    """Point pairs (one per polygon) at distance within tol of d ~ d_min."""
    pairs: List[Tuple[Point, Point]] = []
    for v in pa.vertices:
        for w in pb.vertices:
            if abs(v.distance_to(w) - d) <= tol:
                pairs.append((v, w))
    for v in pa.vertices:
        for e1, e2 in pb.edges():
            foot = point_segment_closest(v, e1, e2)
            if abs(v.distance_to(foot) - d) <= tol:
                pairs.append((v, foot))
    for w in pb.vertices:
        for e1, e2 in pa.edges():
            foot = point_segment_closest(w, e1, e2)
            if abs(w.distance_to(foot) - d) <= tol:
                pairs.append((foot, w))
    # parallel facing edges attain the minimum along a whole segment; the
    # endpoint pairs are already collected above, add their midpoint too
    if len(pairs) >= 2:
        for (p1, q1) in list(pairs):
            for (p2, q2) in list(pairs):
                mid_p = Point(0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y))
                mid_q = Point(0.5 * (q1.x + q2.x), 0.5 * (q1.y + q2.y))
                if abs(mid_p.distance_to(mid_q) - d) <= tol:
                    pairs.append((mid_p, mid_q))
    return _dedupe_pairs(pairs)


def _farthest_attaining_pairs(
    pa: ConvexPolygon, pb: ConvexPolygon, d: float, tol: float
) -> List[Tuple[Point, Point]]:
    pairs = [
        (v, w)
        for v in pa.vertices
        for w in pb.vertices
        if abs(v.distance_to(w) - d) <= tol
    ]
    return _dedupe_pairs(pairs)


def _interior_witness(
    pa: ConvexPolygon,
    pb: ConvexPolygon,
    target: float,
    layer_a: Layer,
    cell_a: HexCell,
    layer_b: Layer,
    cell_b: HexCell,
) -> Tuple[Point, Point]:
    """Point pair at distance ~ target, nudged to owned interior points.

    Moves continuously from the closest point pair to the farthest point
    pair inside the two (convex) cells; by continuity some intermediate
    pair attains the target distance.
    """
    p0, q0, dmin = polygon_closest_pair(pa, pb)
    p1, q1, dmax = polygon_farthest_pair(pa, pb)

    def at(t: float) -> Tuple[Point, Point]:
        return (
            Point(p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)),
            Point(q0.x + t * (q1.x - q0.x), q0.y + t * (q1.y - q0.y)),
        )

    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        p, q = at(mid)
        if p.distance_to(q) <= target:
            lo = mid
        else:
            hi = mid
    p, q = at(0.5 * (lo + hi))
    # pull slightly toward the centroids so the pair lies on owned points
    eps = 1e-7
    ca, cb = pa.centroid(), pb.centroid()
    if not layer_a.grid.cell_membership(cell_a, p):
        d = max(p.distance_to(ca), 1e-12)
        p = Point(p.x + eps * (ca.x - p.x) / d, p.y + eps * (ca.y - p.y) / d)
    if not layer_b.grid.cell_membership(cell_b, q):
        d = max(q.distance_to(cb), 1e-12)
        q = Point(q.x + eps * (cb.x - q.x) / d, q.y + eps * (cb.y - q.y) / d)
    return p, q


def _fundamental_cells(
    c: PeriodicColouring,
) -> List[Tuple[int, HexCell]]:
    """One representative cell per translation orbit of the structure."""
    anchor = c.layers[0].grid.offset
    v1, v2 = c.period_vectors
    det = v1.x * v2.y - v1.y * v2.x
    if abs(det) < 1e-12:
        raise ValueError("degenerate period vectors")
    reps: List[Tuple[int, HexCell]] = []
    for li, layer in enumerate(c.layers):
        corners = [
            Point(anchor.x + s1 * v1.x + s2 * v2.x, anchor.y + s1 * v1.y + s2 * v2.y)
            for s1 in (0.0, 1.0)
            for s2 in (0.0, 1.0)
        ]
        cx = sum(p.x for p in corners) / 4.0
        cy = sum(p.y for p in corners) / 4.0
        radius = max(math.hypot(p.x - cx, p.y - cy) for p in corners)
        radius += 2.0 * layer.grid.side
        for cell in layer.grid.cells_in_disk(Point(cx, cy), radius):
            ctr = layer.grid.center(cell)
            dx, dy = ctr.x - anchor.x, ctr.y - anchor.y
            alpha = (dx * v2.y - dy * v2.x) / det
            beta = (v1.x * dy - v1.y * dx) / det
            if abs(alpha - round(alpha)) < 1e-9:
                alpha = round(alpha)
            if abs(beta - round(beta)) < 1e-9:
                beta = round(beta)
            if 0.0 <= alpha < 1.0 and 0.0 <= beta < 1.0:
                reps.append((li, cell))
    # sanity: the parallelogram must contain exactly one cell per orbit
    expected = 0.0
    for layer in c.layers:
        s = layer.grid.side
        cell_area = 1.5 * SQ3 * s * s
        expected += abs(det) / cell_area
    if abs(expected - len(reps)) > 0.5:
        raise AssertionError(
            f"fundamental domain enumeration found {len(reps)} cells, "
            f"expected {expected:.3f}"
        )
    return reps


SQ3 = math.sqrt(3.0)


def verify_exact(
    c: PeriodicColouring, extra_radius: float = 0.0
) -> VerificationReport:
    a, b = c.interval.a, c.interval.b
    max_side = max(layer.grid.side for layer in c.layers)
    radius = b + 4.0 * max_side + extra_radius + 1e-6
    reps = _fundamental_cells(c)
    polygon_cache: Dict[Tuple[int, int, int], ConvexPolygon] = {}
    colour_cache: Dict[Tuple[int, int, int], frozenset] = {}

    def polygon_of(li: int, cell: HexCell) -> ConvexPolygon:
        key = (li, cell.q, cell.r)
        poly = polygon_cache.get(key)
        if poly is None:
            poly = c.layers[li].grid.cell_polygon(cell)
            polygon_cache[key] = poly
        return poly

    def colours_of(li: int, cell: HexCell) -> frozenset:
        key = (li, cell.q, cell.r)
        cols = colour_cache.get(key)
        if cols is None:
            cols = c.layers[li].colour_set(cell.q, cell.r)
            colour_cache[key] = cols
        return cols

    findings: List[CellPairFinding] = []
    pairs_checked = 0
    min_sep = math.inf

    for li, cell_a in reps:
        layer_a = c.layers[li]
        centre_a = layer_a.grid.center(cell_a)
        set_a = colours_of(li, cell_a)
        poly_a = polygon_of(li, cell_a)
        for lj, layer_b in enumerate(c.layers):
            for cell_b in layer_b.grid.cells_in_disk(centre_a, radius):
                shared = set_a & colours_of(lj, cell_b)
                if not shared:
                    continue
                pairs_checked += 1
                poly_b = polygon_of(lj, cell_b)
                _, _, d_min = polygon_closest_pair(poly_a, poly_b)
                _, _, d_max = polygon_farthest_pair(poly_a, poly_b)
                # separation only counts pairs that clear the interval;
                # a connected colour class has closer same-colour cells
                if d_min > b - TOL and d_min < min_sep:
                    min_sep = d_min
                status, witness = _classify_pair(
                    a, b, d_min, d_max, poly_a, poly_b,
                    layer_a, cell_a, layer_b, cell_b,
                )
                if status != SAFE:
                    findings.append(
                        CellPairFinding(
                            layer_a=li,
                            cell_a=cell_a,
                            layer_b=lj,
                            cell_b=cell_b,
                            colour=min(shared),
                            d_min=d_min,
                            d_max=d_max,
                            status=status,
                            witness=witness,
                        )
                    )
    findings.sort(
        key=lambda f: (f.status, f.layer_a, f.cell_a.q, f.cell_a.r, f.layer_b,
                       f.cell_b.q, f.cell_b.r, f.colour)
    )
    valid = not any(f.status == VIOLATION for f in findings)
    return VerificationReport(
        valid=valid,
        pairs_checked=pairs_checked,
        enumeration_radius=radius,
        min_same_colour_separation=min_sep,
        findings=findings,
    )


def _classify_pair(
    a: float,
    b: float,
    d_min: float,
    d_max: float,
    poly_a: ConvexPolygon,
    poly_b: ConvexPolygon,
    layer_a: Layer,
    cell_a: HexCell,
    layer_b: Layer,
    cell_b: HexCell,
):
    if d_min > b + TOL or d_max < a - TOL:
        return SAFE, None
    if d_min < b - TOL and d_max > a + TOL:
        # interior points of both cells attain a forbidden distance
        target = 0.5 * (max(a, d_min) + min(b, d_max))
        witness = _interior_witness(
            poly_a, poly_b, target, layer_a, cell_a, layer_b, cell_b
        )
        return VIOLATION, witness
    # the distance range only touches [a, b]; collect the attaining pairs
    candidates: List[Tuple[Point, Point]] = []
    if d_min >= b - TOL or (d_max <= a + TOL and d_min >= a - TOL):
        candidates.extend(
            _closest_attaining_pairs(poly_a, poly_b, d_min, 2.0 * TOL)
        )
    if a - TOL <= d_max <= a + TOL:
        candidates.extend(
            _farthest_attaining_pairs(poly_a, poly_b, d_max, 2.0 * TOL)
        )
    for p, q in candidates:
        if layer_a.grid.cell_membership(cell_a, p) and layer_b.grid.cell_membership(
            cell_b, q
        ):
            return VIOLATION, (p, q)
    return BOUNDARY_RESOLVED, None


def min_same_colour_separation(c: PeriodicColouring) -> float:
    """Smallest gap between same-colour cells separated beyond the interval."""
    report = verify_exact(c)
    if not report.valid:
        raise ValueError("colouring is not valid")
    return report.min_same_colour_separation


def _axial_round_np(qf: np.ndarray, rf: np.ndarray):
    xf, zf = qf, rf
    yf = -xf - zf
    rx = np.rint(xf)
    ry = np.rint(yf)
    rz = np.rint(zf)
    dx = np.abs(rx - xf)
    dy = np.abs(ry - yf)
    dz = np.abs(rz - zf)
    fix_x = (dx > dy) & (dx > dz)
    fix_z = ~fix_x & (dz > dy)
    rx = np.where(fix_x, -ry - rz, rx)
    rz = np.where(fix_z, -rx - ry, rz)
    return rx.astype(np.int64), rz.astype(np.int64)


def _layer_masks(layer: Layer, k: int):
    lo = np.zeros((layer.period_q, layer.period_r), dtype=np.uint64)
    hi = np.zeros((layer.period_q, layer.period_r), dtype=np.uint64)
    for (q, r), colours in layer.colour_map.items():
        lo_bits = 0
        hi_bits = 0
        for col in colours:
            if col < 64:
                lo_bits |= 1 << col
            else:
                hi_bits |= 1 << (col - 64)
        lo[q, r] = lo_bits
        hi[q, r] = hi_bits
    return lo, hi


def _point_masks(c: PeriodicColouring, xs: np.ndarray, ys: np.ndarray, tables):
    lo = np.zeros(xs.shape, dtype=np.uint64)
    hi = np.zeros(xs.shape, dtype=np.uint64)
    for layer, (tlo, thi) in zip(c.layers, tables):
        s = layer.grid.side
        rf = (ys - layer.grid.offset.y) / (1.5 * s)
        qf = (xs - layer.grid.offset.x) / (SQ3 * s) - rf / 2.0
        q, r = _axial_round_np(qf, rf)
        q %= layer.period_q
        r %= layer.period_r
        lo |= tlo[q, r]
        hi |= thi[q, r]
    return lo, hi


def verify_sampled(
    c: PeriodicColouring,
    samples: int = 100_000,
    window: float = 20.0,
    seed: int = 0,
    max_findings: int = 20,
    _force_slow: bool = False,
) -> VerificationReport:
    """Randomised check: point pairs at distance uniform in [a, b].

    Interior points have probability zero of hitting cell borders, so the
    owning cell is simply the one with the nearest centre.  Deterministic
    for a fixed seed.
    """
    a, b = c.interval.a, c.interval.b
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-window / 2.0, window / 2.0, samples)
    ys = rng.uniform(-window / 2.0, window / 2.0, samples)
    dist = rng.uniform(a, b, samples)
    theta = rng.uniform(0.0, 2.0 * math.pi, samples)
    xs2 = xs + dist * np.cos(theta)
    ys2 = ys + dist * np.sin(theta)

    findings: List[CellPairFinding] = []
    fast = (
        not _force_slow
        and c.k <= 128
        and all(not hasattr(layer.colour_map, "cells") for layer in c.layers)
    )
    if fast and samples > 0:
        tables = [_layer_masks(layer, c.k) for layer in c.layers]
        lo1, hi1 = _point_masks(c, xs, ys, tables)
        lo2, hi2 = _point_masks(c, xs2, ys2, tables)
        bad = ((lo1 & lo2) | (hi1 & hi2)) != 0
        bad_idx = np.flatnonzero(bad)
    else:
        bad_idx = []
        for i in range(samples):
            s1 = c.colours_at(Point(float(xs[i]), float(ys[i])))
            s2 = c.colours_at(Point(float(xs2[i]), float(ys2[i])))
            if s1 & s2:
                bad_idx.append(i)
        bad_idx = np.asarray(bad_idx, dtype=np.int64)

    for i in bad_idx[:max_findings]:
        p = Point(float(xs[i]), float(ys[i]))
        q = Point(float(xs2[i]), float(ys2[i]))
        shared = c.colours_at(p) & c.colours_at(q)
        findings.append(
            CellPairFinding(
                layer_a=-1,
                cell_a=HexCell(0, 0),
                layer_b=-1,
                cell_b=HexCell(0, 0),
                colour=min(shared) if shared else -1,
                d_min=p.distance_to(q),
                d_max=p.distance_to(q),
                status=VIOLATION,
                witness=(p, q),
            )
        )
    return VerificationReport(
        valid=len(bad_idx) == 0,
        pairs_checked=samples,
        enumeration_radius=0.0,
        min_same_colour_separation=math.inf,
        findings=findings,
    )
