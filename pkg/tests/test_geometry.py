import math

import pytest
from hypothesis import given, settings, strategies as st

from hexfold.geometry import (
    SQRT3,
    ConvexPolygon,
    HexCell,
    HexGrid,
    Point,
    polygon_closest_pair,
    polygon_farthest_pair,
    polygon_max_distance,
    polygon_min_distance,
)

GRID = HexGrid(side=0.5)


def polygon_area(poly):
    s = 0.0
    vs = poly.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        s += a.x * b.y - b.x * a.y
    return 0.5 * s


def test_cell_geometry():
    poly = GRID.cell_polygon(HexCell(0, 0))
    ys = [v.y for v in poly.vertices]
    xs = [v.x for v in poly.vertices]
    assert max(ys) == pytest.approx(0.5)
    assert min(ys) == pytest.approx(-0.5)
    assert max(xs) == pytest.approx(SQRT3 / 4)
    assert min(xs) == pytest.approx(-SQRT3 / 4)
    # top vertex present, diameter 2s = 1
    assert any(abs(v.x) < 1e-12 and abs(v.y - 0.5) < 1e-12 for v in poly.vertices)
    assert polygon_max_distance(poly, poly) == pytest.approx(1.0)
    assert polygon_area(poly) == pytest.approx(1.5 * SQRT3 * 0.25)


def test_cell_geometry_small_side():
    s = 1.0 / (2.0 * math.sqrt(7.0))
    grid = HexGrid(side=s)
    poly = grid.cell_polygon(HexCell(0, 0))
    c = grid.center(HexCell(0, 0))
    for v in poly.vertices:
        assert c.distance_to(v) == pytest.approx(s)


def test_center_lattice():
    c = GRID.center(HexCell(2, 3))
    assert c.x == pytest.approx(2 * SQRT3 * 0.5 + 3 * SQRT3 * 0.25)
    assert c.y == pytest.approx(3 * 0.75)


def test_membership_examples():
    cell = HexCell(0, 0)
    assert GRID.cell_membership(cell, Point(0.0, 0.0))
    # left vertical edge belongs to the left neighbour (its right edge)
    assert not GRID.cell_membership(cell, Point(-SQRT3 / 4, 0.1))
    assert GRID.cell_membership(HexCell(-1, 0), Point(-SQRT3 / 4, 0.1))
    # right vertical edge is owned
    assert GRID.cell_membership(cell, Point(SQRT3 / 4, 0.1))
    # bottom vertex belongs to a neighbour below
    assert not GRID.cell_membership(cell, Point(0.0, -0.5))
    # top vertex is owned
    assert GRID.cell_membership(cell, Point(0.0, 0.5))


def test_cell_of_examples():
    assert GRID.cell_of(Point(0.0, 0.0)) == HexCell(0, 0)
    top = Point(0.0, 0.5)
    owner = GRID.cell_of(top)
    claimants = [c for c in (HexCell(0, 0), HexCell(-1, 1), HexCell(0, 1))
                 if GRID._contains_closed(c, top, 1e-9)]
    assert len(claimants) == 3
    assert sum(GRID.cell_membership(c, top) for c in claimants) == 1
    assert owner in claimants


def test_antipodal_vertex_pairs_split():
    cell = HexCell(0, 0)
    for angle in (30.0, 90.0, 150.0):
        a = math.radians(angle)
        p = Point(0.5 * math.cos(a), 0.5 * math.sin(a))
        q = Point(-p.x, -p.y)
        owned = GRID.cell_membership(cell, p) + GRID.cell_membership(cell, q)
        assert owned <= 1


def test_cell_of_matches_membership_scan():
    # membership is an independent predicate; cross-check against a full
    # scan of every cell whose center lies within 2s of the point
    import random

    rng = random.Random(5)
    for grid in (GRID, HexGrid(side=0.37, offset=Point(0.123, -0.456))):
        for _ in range(400):
            p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            owner = grid.cell_of(p)
            owners = []
            base = grid.cell_of(p)
            for dq in range(-2, 3):
                for dr in range(-2, 3):
                    c = HexCell(base.q + dq, base.r + dr)
                    if grid.center(c).distance_to(p) <= 2 * grid.side + 1e-9:
                        if grid.cell_membership(c, p):
                            owners.append(c)
            assert owners == [owner]


@settings(max_examples=200, deadline=None)
@given(
    st.floats(-20, 20, allow_nan=False),
    st.floats(-20, 20, allow_nan=False),
    st.sampled_from([0.5, 0.25, 1.0 / (2.0 * math.sqrt(7.0))]),
)
def test_partition_property(x, y, side):
    grid = HexGrid(side=side)
    p = Point(x, y)
    cell = grid.cell_of(p)
    assert grid.cell_membership(cell, p)
    # no adjacent cell also claims ownership
    for dq, dr in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)):
        other = HexCell(cell.q + dq, cell.r + dr)
        assert not grid.cell_membership(other, p)


def test_translation_equivariance():
    import random

    rng = random.Random(11)
    v = GRID.center(HexCell(3, -2))
    shifted = HexGrid(side=0.5, offset=Point(GRID.offset.x + v.x, GRID.offset.y + v.y))
    for _ in range(200):
        p = Point(rng.uniform(-4, 4), rng.uniform(-4, 4))
        a = GRID.cell_of(p)
        b = shifted.cell_of(Point(p.x + v.x, p.y + v.y))
        assert (a.q, a.r) == (b.q, b.r)


def test_min_distance_examples():
    p0 = GRID.cell_polygon(HexCell(0, 0))
    p1 = GRID.cell_polygon(HexCell(1, 0))
    p2 = GRID.cell_polygon(HexCell(2, 0))
    assert polygon_min_distance(p0, p1) == pytest.approx(0.0, abs=1e-12)
    assert polygon_min_distance(p0, p2) == pytest.approx(SQRT3 / 2)
    assert polygon_min_distance(p2, p0) == pytest.approx(SQRT3 / 2)


def test_degenerate_point_polygons():
    a = ConvexPolygon((Point(0.0, 0.0), Point(0.0, 0.0), Point(0.0, 0.0)))
    b = ConvexPolygon((Point(3.0, 4.0), Point(3.0, 4.0), Point(3.0, 4.0)))
    assert polygon_max_distance(a, b) == pytest.approx(5.0)
    assert polygon_min_distance(a, b) == pytest.approx(5.0)


def brute_max(pa, pb):
    return max(u.distance_to(v) for u in pa.vertices for v in pb.vertices)


def test_max_distance_matches_vertex_bruteforce():
    import random

    rng = random.Random(3)
    for _ in range(100):
        ca = HexCell(rng.randint(-4, 4), rng.randint(-4, 4))
        cb = HexCell(rng.randint(-4, 4), rng.randint(-4, 4))
        pa = GRID.cell_polygon(ca)
        pb = GRID.cell_polygon(cb)
        assert polygon_max_distance(pa, pb) == pytest.approx(brute_max(pa, pb))
        assert polygon_max_distance(pa, pb) == pytest.approx(
            polygon_max_distance(pb, pa)
        )


def test_min_distance_zero_iff_touching():
    p0 = GRID.cell_polygon(HexCell(0, 0))
    for dq, dr in ((1, 0), (0, 1), (1, -1)):
        pn = GRID.cell_polygon(HexCell(dq, dr))
        assert polygon_min_distance(p0, pn) == pytest.approx(0.0, abs=1e-12)
    far = GRID.cell_polygon(HexCell(3, 1))
    assert polygon_min_distance(p0, far) > 0.5


def test_closest_and_farthest_pairs_are_attained():
    pa = GRID.cell_polygon(HexCell(0, 0))
    pb = GRID.cell_polygon(HexCell(2, 1))
    u, v, d = polygon_closest_pair(pa, pb)
    assert u.distance_to(v) == pytest.approx(d)
    u, v, d = polygon_farthest_pair(pa, pb)
    assert u.distance_to(v) == pytest.approx(d)
