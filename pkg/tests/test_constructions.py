import math
import random

import pytest

from hexfold.bounds import InfeasibleParameterError, count_contained_hexagons
from hexfold.constructions import (
    Interval,
    classic_seven,
    colours_at,
    construct_2nm,
    construct_density,
    construct_nm,
    fold2_twelve,
    fold3_sixteen,
    fold7_thirtyseven,
    nm_colour_count,
    two_nm_colour_count,
)
from hexfold.geometry import Point

SQRT3 = math.sqrt(3.0)


def fixed_constructions():
    return [
        classic_seven(),
        fold2_twelve(),
        fold3_sixteen(),
        fold7_thirtyseven(),
        construct_nm(1.0, 2, 2),
        construct_nm(2.0, 3, 3),
        construct_2nm(1.0, 1, 2),
        construct_2nm(1.0, 2, 2),
        construct_density(1.0, 20),
    ]


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(0.0, 1.0)
    with pytest.raises(ValueError):
        Interval(2.0, 1.0)
    assert Interval(1.0, 2.0).ratio == pytest.approx(2.0)


def test_fold_and_colour_counts():
    assert (classic_seven().j, classic_seven().k) == (1, 7)
    assert (fold2_twelve().j, fold2_twelve().k) == (2, 12)
    assert (fold3_sixteen().j, fold3_sixteen().k) == (3, 16)
    assert (fold7_thirtyseven().j, fold7_thirtyseven().k) == (7, 37)
    c = construct_nm(1.0, 2, 3)
    assert (c.j, c.k) == (6, 35)
    c = construct_nm(2.0, 3, 3)
    assert (c.j, c.k) == (9, 100)


def test_nm_colour_count_formula():
    for b in (1.0, 1.5, 2.0):
        for n in (1, 2, 3):
            for m in (1, 2, 4):
                expect = math.ceil((2 * b / SQRT3 + 1) * n) * math.ceil(
                    (2 * b / SQRT3 + 1) * m
                )
                assert nm_colour_count(b, n, m) == expect
                c = construct_nm(b, n, m)
                assert c.k == expect
                assert c.j == n * m


def test_2nm_colour_count_formula():
    for b in (1.0, 2.0):
        for n in (1, 2):
            for m in (1, 2, 3):
                expect = 2 * math.ceil((b + 1) * 2 * n) * math.ceil((b + 1) * 2 * m / 3)
                assert two_nm_colour_count(b, n, m) == expect
                assert construct_2nm(b, n, m).k == expect


def test_2nm_collapse_is_flagged():
    # for some parameters the shifted grid family repeats an existing
    # grid; duplicates are merged and the fold number drops accordingly
    c = construct_2nm(1.0, 1, 1)
    assert dict(c.provenance)["collapsed"]
    assert c.j == 1 and c.k == 16
    c = construct_2nm(1.0, 1, 2)
    assert not dict(c.provenance)["collapsed"]
    assert c.j == 4 and c.k == 24


def test_fold_exactness():
    rng = random.Random(0)
    for c in fixed_constructions():
        for _ in range(300):
            p = Point(rng.uniform(-4, 4), rng.uniform(-4, 4))
            assert len(colours_at(c, p)) == c.j


def test_colour_ids_in_range():
    rng = random.Random(1)
    for c in fixed_constructions():
        for _ in range(100):
            p = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
            assert all(0 <= col < c.k for col in colours_at(c, p))


def test_periodicity():
    rng = random.Random(2)
    for c in fixed_constructions():
        v1, v2 = c.period_vectors
        for _ in range(60):
            p = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
            base = colours_at(c, p)
            assert colours_at(c, Point(p.x + v1.x, p.y + v1.y)) == base
            assert colours_at(c, Point(p.x + v2.x, p.y + v2.y)) == base
            assert colours_at(c, Point(p.x - v1.x - v2.x, p.y - v1.y - v2.y)) == base


def test_classic_seven_same_colour_spacing():
    c = classic_seven()
    layer = c.layers[0]
    grid = layer.grid
    origin = grid.center(type(grid.cell_of(Point(0, 0)))(0, 0))
    colour0 = layer.colour_set(0, 0)
    best = math.inf
    for q in range(-8, 9):
        for r in range(-8, 9):
            if (q, r) == (0, 0):
                continue
            if layer.colour_set(q, r) == colour0:
                from hexfold.geometry import HexCell

                d = grid.center(HexCell(q, r)).distance_to(origin)
                best = min(best, d)
    assert best == pytest.approx(math.sqrt(21.0) / 2.0)


def test_nm_equilateral_triangle():
    # with n = m and b = 1 the three nearest same-colour grid positions
    # form an equilateral triangle with side >= b + sqrt(3)/2
    for n in (1, 2):
        c = construct_nm(1.0, n, n)
        target = c.layers[0]
        colour0 = target.colour_set(0, 0)
        from hexfold.geometry import HexCell

        origin = target.grid.center(HexCell(0, 0))
        centers = []
        for layer in c.layers:
            for cell in layer.grid.cells_in_disk(origin, 6.0):
                if layer.colour_set(cell.q, cell.r) == colour0:
                    centers.append(layer.grid.center(cell))
        dists = sorted(
            p.distance_to(origin) for p in centers if p.distance_to(origin) > 1e-9
        )
        assert dists[0] >= 1.0 + SQRT3 / 2.0 - 1e-9


def test_scaled_interval():
    c = classic_seven(a=2.0)
    assert c.interval.a == pytest.approx(2.0)
    assert c.interval.b == pytest.approx(2.0)
    assert c.layers[0].grid.side == pytest.approx(1.0)
    c = construct_nm(2.0, 1, 1, a=0.5)
    assert c.interval.a == pytest.approx(0.5)
    assert c.interval.b == pytest.approx(1.0)


def test_density_kernel_uniform_cardinality():
    for n in (8, 12, 16):
        c = construct_density(1.0, n)
        layer = c.layers[0]
        sizes = {
            len(layer.colour_set(q, r)) for q in range(-n, n) for r in range(-n, n)
        }
        assert sizes == {c.j}
        assert c.j == count_contained_hexagons(1.0, n).h_n
        assert c.k == n * n


def test_density_infeasible_n():
    with pytest.raises(InfeasibleParameterError):
        construct_density(1.0, 7)


def test_nm_parameter_validation():
    with pytest.raises(ValueError):
        construct_nm(0.5, 1, 1)
    with pytest.raises(ValueError):
        construct_nm(1.0, 0, 1)
    with pytest.raises(ValueError):
        construct_2nm(1.0, 1, 0)
