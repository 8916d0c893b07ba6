"""Upper bounds on the fractional chromatic number of distance-interval
graphs on the plane.

For the graph whose edges join points at distance in [1, b], the bound
comes from a periodic multi-fold colouring built on a region A: the
intersection of a disk of diameter 1 with a concentric hexagon whose
vertical edges lie at distance sqrt(1-x^2)/2 from the center.  The shape
parameter x in (0, 1/2) solves

    b*x = pi/6 - arcsin(x),

and the resulting bound is (sqrt(3)/3) * (b + sqrt(1-x^2)) / x.

The finite constructions tile the plane with hexagons of width s/n,
s = b + sqrt(1-x^2); ``count_contained_hexagons`` counts the tiles fully
contained in A, giving the fold number h_n of the concrete colouring
with n^2 colours, and ``h_lower_bound`` gives the closed-form lower
bound on h_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import SQRT3, HexGrid, Point


class InfeasibleParameterError(ValueError):
    """Raised when a parameter choice admits no valid construction."""


def _check_b(b: float) -> None:
    if not (b >= 1.0):
        raise ValueError(f"b must be >= 1, got {b!r}")


def solve_x(b: float) -> float:
    """Root of b*x + arcsin(x) - pi/6 in (0, 1/2).

    Bisection to near machine precision followed by one Newton step; the
    residual is below 1e-12 for all b >= 1.
    """
    _check_b(b)
    target = math.pi / 6.0

    def f(x: float) -> float:
        return b * x + math.asin(x) - target

    lo, hi = 0.0, 0.5
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    x = 0.5 * (lo + hi)
    deriv = b + 1.0 / math.sqrt(1.0 - x * x)
    x -= f(x) / deriv
    return x


@dataclass(frozen=True)
class DensityBound:
    """Closed-form bound data for interval [1, b]."""

    b: float
    x: float
    y: float
    s: float
    area_a: float
    bound: float


def chi_f_upper(b: float) -> DensityBound:
    """Upper bound on the fractional chromatic number for [1, b]."""
    _check_b(b)
    x = solve_x(b)
    y = math.pi / 6.0 - math.asin(x)
    c = math.sqrt(1.0 - x * x)
    s = b + c
    area_a = 0.25 * (math.pi - 6.0 * math.asin(x) + 6.0 * x * c)
    bound = (SQRT3 / 3.0) * s / x
    return DensityBound(b=b, x=x, y=y, s=s, area_a=area_a, bound=bound)


def chi_f_upper_alt(b: float) -> float:
    """Same bound written as 2*sqrt(3)*s^2 / (pi - 6*asin(x) + 3*sin(2*asin(x)))."""
    x = solve_x(b)
    s = b + math.sqrt(1.0 - x * x)
    alpha = math.asin(x)
    return 2.0 * SQRT3 * s * s / (math.pi - 6.0 * alpha + 3.0 * math.sin(2.0 * alpha))


def h_lower_bound(b: float, n: int) -> float:
    """Lower bound on the number of width-(s/n) tiles contained in A."""
    _check_b(b)
    x = solve_x(b)
    c = math.sqrt(1.0 - x * x)
    s = b + c
    if n <= 2.0 * s:
        raise InfeasibleParameterError(
            f"n must exceed 2*s = {2.0 * s:.6f}, got {n}"
        )
    return SQRT3 * (n / s - 2.0) ** 2 * (b * x + x * c)


@dataclass(frozen=True)
class HCount:
    b: float
    n: int
    h_n: int
    lower: float
    ratio: float  # n^2 / h_n, the achieved colours-per-fold ratio


# slack allowed when testing containment of a tile in the closed region A
CONTAINMENT_TOL = 1e-12


def _region_params(b: float):
    x = solve_x(b)
    c = math.sqrt(1.0 - x * x)
    s = b + c
    return x, c, s


def _tile_grid(b: float, n: int) -> HexGrid:
    """Tiling used by the density construction.

    Hexagons of width s/n; the left edge of cell (0, 0) lies on the left
    vertical segment of the border of A, centred on the x-axis.
    """
    _, c, s = _region_params(b)
    w = s / n
    return HexGrid(side=w / SQRT3, offset=Point(w / 2.0 - c / 2.0, 0.0))


def _tile_in_region(grid: HexGrid, cell, apothem: float) -> bool:
    """True iff the closed tile lies in A = disk(1/2) ∩ hexagon(apothem)."""
    tol = CONTAINMENT_TOL
    rr = 0.25 + tol
    for v in grid.cell_polygon(cell).vertices:
        if v.x * v.x + v.y * v.y > rr:
            return False
        ax = abs(v.x)
        ay = abs(v.y)
        if ax > apothem + tol:
            return False
        if 0.5 * ax + (SQRT3 / 2.0) * ay > apothem + tol:
            return False
    return True


def count_contained_hexagons(b: float, n: int) -> HCount:
    """Exact count of width-(s/n) tiles fully contained in the region A."""
    _check_b(b)
    x, c, s = _region_params(b)
    if n <= 2.0 * s:
        raise InfeasibleParameterError(
            f"n must exceed 2*s = {2.0 * s:.6f}, got {n}"
        )
    grid = _tile_grid(b, n)
    apothem = c / 2.0
    count = 0
    reach = 0.5 + 2.0 * grid.side
    for cell in grid.cells_in_disk(Point(0.0, 0.0), reach):
        if _tile_in_region(grid, cell, apothem):
            count += 1
    lower = h_lower_bound(b, n)
    if count == 0:
        raise InfeasibleParameterError(
            f"no tile of width s/{n} fits inside A for b={b}"
        )
    return HCount(b=b, n=n, h_n=count, lower=lower, ratio=n * n / count)
