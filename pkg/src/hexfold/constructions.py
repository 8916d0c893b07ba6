"""Periodic multi-fold colourings of the plane avoiding monochromatic
pairs at distance in a closed interval [a, b].

A colouring is a finite list of hexagonal-grid layers.  Every layer
assigns a (frozen) set of colour ids to each of its cells, periodically
in the axial coordinates; the colour set of a point is the union over
layers of the sets of the owning cells.  Two period vectors translate
the whole structure onto itself (possibly permuting layers).

Colour ids are dense integers in [0, k).  Constructions built from
(row class, column class) pairs encode them as row * period + column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Dict, Iterator, Mapping, Optional, Tuple

from .bounds import InfeasibleParameterError, solve_x
from .geometry import SQRT3, HexCell, HexGrid, Point

ColourSet = frozenset


@dataclass(frozen=True)
class Interval:
    """Closed distance interval [a, b] defining the forbidden distances."""

    a: float
    b: float

    def __post_init__(self):
        if not (0.0 < self.a <= self.b):
            raise ValueError(f"need 0 < a <= b, got [{self.a}, {self.b}]")

    @property
    def ratio(self) -> float:
        return self.b / self.a


@dataclass(frozen=True)
class Layer:
    """One hexagonal grid together with its periodic colour table."""

    grid: HexGrid
    period_q: int
    period_r: int
    colour_map: Mapping[Tuple[int, int], ColourSet]

    def colour_set(self, q: int, r: int) -> ColourSet:
        return self.colour_map[(q % self.period_q, r % self.period_r)]


class KernelColourMap(Mapping):
    """Colour table of the density construction, stored implicitly.

    The table on the n x n fundamental block is generated by a kernel D
    of cell offsets: cell (q, r) receives colour
    ((q - dq) mod n) * n + ((r - dr) mod n) for every (dq, dr) in D.
    Materialising the table would need n^2 * |D| entries, which is far
    too large for the n used in practice.
    """

    def __init__(self, n: int, cells: Tuple[Tuple[int, int], ...]):
        self.n = n
        self.cells = tuple(sorted(cells))

    def __getitem__(self, key: Tuple[int, int]) -> ColourSet:
        q, r = key
        n = self.n
        if not (0 <= q < n and 0 <= r < n):
            raise KeyError(key)
        return frozenset(
            ((q - dq) % n) * n + ((r - dr) % n) for dq, dr in self.cells
        )

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        for q in range(self.n):
            for r in range(self.n):
                yield (q, r)

    def __len__(self) -> int:
        return self.n * self.n

    def __eq__(self, other):
        return (
            isinstance(other, KernelColourMap)
            and self.n == other.n
            and self.cells == other.cells
        )


@dataclass(frozen=True)
class PeriodicColouring:
    interval: Interval
    j: int
    k: int
    layers: Tuple[Layer, ...]
    period_vectors: Tuple[Point, Point]
    provenance: Tuple[Tuple[str, object], ...] = ()

    def colours_at(self, p: Point) -> ColourSet:
        out: set = set()
        for layer in self.layers:
            cell = layer.grid.cell_of(p)
            out |= layer.colour_set(cell.q, cell.r)
        return frozenset(out)

    def scaled(self, factor: float) -> "PeriodicColouring":
        """Geometrically similar colouring for the interval scaled by factor."""
        if factor <= 0.0:
            raise ValueError("scale factor must be positive")
        layers = tuple(
            replace(
                layer,
                grid=HexGrid(
                    side=layer.grid.side * factor,
                    offset=Point(
                        layer.grid.offset.x * factor, layer.grid.offset.y * factor
                    ),
                ),
            )
            for layer in self.layers
        )
        v1, v2 = self.period_vectors
        return replace(
            self,
            interval=Interval(self.interval.a * factor, self.interval.b * factor),
            layers=layers,
            period_vectors=(
                Point(v1.x * factor, v1.y * factor),
                Point(v2.x * factor, v2.y * factor),
            ),
        )


def colours_at(colouring: PeriodicColouring, p: Point) -> ColourSet:
    return colouring.colours_at(p)


def _table(period_q: int, period_r: int, fn) -> Dict[Tuple[int, int], ColourSet]:
    out: Dict[Tuple[int, int], ColourSet] = {}
    for q in range(period_q):
        for r in range(period_r):
            v = fn(q, r)
            out[(q, r)] = v if isinstance(v, frozenset) else frozenset((v,))
    return out


def _lattice(side: float, q: float, r: float) -> Point:
    """q * e1 + r * e2 for the grid basis of the given side."""
    return Point(SQRT3 * side * (q + 0.5 * r), 1.5 * side * r)


def _maybe_scaled(c: PeriodicColouring, a: float) -> PeriodicColouring:
    return c if a == 1.0 else c.scaled(a)


def classic_seven(a: float = 1.0) -> PeriodicColouring:
    """1-fold colouring with 7 colours for the single distance a.

    Hexagons of side a/2; colour (q + 3r) mod 7, so equal colours repeat
    on a sublattice of index 7 with centre spacing a*sqrt(21)/2.
    """
    s = 0.5
    grid = HexGrid(side=s)
    layer = Layer(
        grid=grid,
        period_q=7,
        period_r=7,
        colour_map=_table(7, 7, lambda q, r: (q + 3 * r) % 7),
    )
    c = PeriodicColouring(
        interval=Interval(1.0, 1.0),
        j=1,
        k=7,
        layers=(layer,),
        period_vectors=(_lattice(s, 1, 2), _lattice(s, 3, -1)),
        provenance=(("method", "classic_seven"),),
    )
    return _maybe_scaled(c, a)


def _row_block_colour(q: int, r: int, colours_per_row: int) -> int:
    """Row-block colour pattern used by the 2-fold colouring.

    Rows are grouped in blocks of four; each row of a block uses its own
    set of ``colours_per_row`` colours, cycling along the row.  The cycle
    phase advances by two columns per block so that cells four rows up in
    the same visual column repeat their colour.
    """
    row = r % 4
    phase = 2 * (r // 4)
    return colours_per_row * row + (q + phase) % colours_per_row


def fold2_twelve(a: float = 1.0) -> PeriodicColouring:
    """2-fold colouring with 12 colours for the single distance a.

    Two identical row-block colourings on side-(a/2) grids; the second
    layer is the first translated by a*(3*sqrt(3)/4, -3/2).
    """
    s = 0.5
    table = _table(3, 12, lambda q, r: _row_block_colour(q, r, 3))
    base = Layer(grid=HexGrid(side=s), period_q=3, period_r=12, colour_map=table)
    shifted = replace(
        base, grid=HexGrid(side=s, offset=Point(3.0 * SQRT3 / 4.0, -1.5))
    )
    c = PeriodicColouring(
        interval=Interval(1.0, 1.0),
        j=2,
        k=12,
        layers=(base, shifted),
        period_vectors=(_lattice(s, 3, 0), _lattice(s, -2, 4)),
        provenance=(("method", "fold2_twelve"),),
    )
    return _maybe_scaled(c, a)


def fold3_sixteen(a: float = 1.0) -> PeriodicColouring:
    """3-fold colouring with 16 colours for the single distance a.

    Three identical grids coloured 4*(r mod 4) + (q mod 4); the extra
    layers are translated by a*(sqrt(3), -1) and a*(2*sqrt(3), -2).
    The minimum same-colour separation equals a exactly, attained only at
    cell corners, where the ownership rule splits the attaining pair.
    """
    s = 0.5
    table = _table(4, 4, lambda q, r: 4 * (r % 4) + q % 4)
    base = Layer(grid=HexGrid(side=s), period_q=4, period_r=4, colour_map=table)
    layers = [base]
    for i in (1, 2):
        layers.append(
            replace(base, grid=HexGrid(side=s, offset=Point(i * SQRT3, -float(i))))
        )
    c = PeriodicColouring(
        interval=Interval(1.0, 1.0),
        j=3,
        k=16,
        layers=tuple(layers),
        period_vectors=(_lattice(s, 4, 0), _lattice(s, 0, 4)),
        provenance=(("method", "fold3_sixteen"),),
    )
    return _maybe_scaled(c, a)


def fold7_thirtyseven(a: float = 1.0) -> PeriodicColouring:
    """7-fold colouring with 37 colours for the single distance a.

    Hexagons of side a/(2*sqrt(7)).  Seven-cell flowers of diameter a are
    placed on a sublattice of index 37 generated by 4*e1 + 3*e2 and its
    60-degree rotation -3*e1 + 7*e2; shifting the flower pattern cell by
    cell yields the 37 colour classes, and every cell lies in exactly
    seven flowers.  Distinct same-colour flowers are at distance
    a*sqrt(31)/(2*sqrt(7)).
    """
    s = 0.5 / math.sqrt(7.0)
    # phi(q, r) = q + 11 r mod 37 maps the cell lattice onto Z/37 with the
    # flower sublattice as kernel; flower offsets have phi in {0,±1,±10,±11}
    deltas = (0, 1, -1, 10, -10, 11, -11)
    table = _table(
        37,
        37,
        lambda q, r: frozenset((q + 11 * r + d) % 37 for d in deltas),
    )
    layer = Layer(
        grid=HexGrid(side=s), period_q=37, period_r=37, colour_map=table
    )
    c = PeriodicColouring(
        interval=Interval(1.0, 1.0),
        j=7,
        k=37,
        layers=(layer,),
        period_vectors=(_lattice(s, 4, 3), _lattice(s, -3, 7)),
        provenance=(("method", "fold7_thirtyseven"),),
    )
    return _maybe_scaled(c, a)


def nm_colour_count(b: float, n: int, m: int) -> int:
    """Colour count of construct_nm: ceil((2b/sqrt(3)+1)n) * ceil(.. m)."""
    factor = 2.0 * b / SQRT3 + 1.0
    return math.ceil(factor * n) * math.ceil(factor * m)


def construct_nm(
    b: float,
    n: int,
    m: int,
    a: float = 1.0,
    _periods: Optional[Tuple[int, int]] = None,
) -> PeriodicColouring:
    """(n*m)-fold colouring of the interval [a, a*b] graph.

    n*m side-(1/2) grids, shifted by (j/n)*(sqrt(3)/2, 0) and
    (i/m)*(sqrt(3)/4, -3/4).  All cell centres lie on a fine lattice with
    basis f1 = e1/n and f2 = (e1 - e2)/m; the colour of the cell at
    Q*f1 + R*f2 is (R mod rows) * cols + (Q mod cols) with
    cols = ceil((2b/sqrt(3)+1)*n) and rows = ceil((2b/sqrt(3)+1)*m).

    ``_periods`` overrides (cols, rows); it exists so tests can inject
    deliberately broken periods.
    """
    if b < 1.0:
        raise ValueError("b must be >= 1")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    factor = 2.0 * b / SQRT3 + 1.0
    if _periods is None:
        cols = math.ceil(factor * n)
        rows = math.ceil(factor * m)
    else:
        cols, rows = _periods
    s = 0.5

    def layer_for(i: int, j: int) -> Layer:
        # i, j are zero-based grid indices here
        off = Point(
            (j / n) * (SQRT3 / 2.0) + (i / m) * (SQRT3 / 4.0),
            -(i / m) * 0.75,
        )

        def colour(q: int, r: int) -> int:
            qq = j + n * (q + r)
            rr = i - m * r
            return (rr % rows) * cols + (qq % cols)

        period_r = _lcm(cols // math.gcd(n, cols), rows // math.gcd(m, rows))
        return Layer(
            grid=HexGrid(side=s, offset=off),
            period_q=cols,
            period_r=period_r,
            colour_map=_table(cols, period_r, colour),
        )

    layers = tuple(layer_for(i, j) for i in range(m) for j in range(n))
    f1 = Point(SQRT3 / (2.0 * n), 0.0)
    f2 = Point(SQRT3 / (4.0 * m), -0.75 / m)
    c = PeriodicColouring(
        interval=Interval(1.0, float(b)),
        j=n * m,
        k=cols * rows,
        layers=layers,
        period_vectors=(
            Point(cols * f1.x, cols * f1.y),
            Point(rows * f2.x, rows * f2.y),
        ),
        provenance=(("method", "nm"), ("b", float(b)), ("n", n), ("m", m)),
    )
    return _maybe_scaled(c, a)


def _lcm(x: int, y: int) -> int:
    return x * y // math.gcd(x, y)


def two_nm_colour_count(b: float, n: int, m: int) -> int:
    """Colour count of construct_2nm: 2*ceil((b+1)*2n)*ceil((b+1)*2m/3)."""
    return 2 * math.ceil((b + 1.0) * 2.0 * n) * math.ceil((b + 1.0) * 2.0 * m / 3.0)


def construct_2nm(
    b: float,
    n: int,
    m: int,
    a: float = 1.0,
    _counts: Optional[Tuple[int, int]] = None,
) -> PeriodicColouring:
    """(2*n*m)-fold colouring of the interval [a, a*b] graph.

    2*n*m side-(1/2) grids: W grids shifted by (j/n)*(sqrt(3)/2, 0) and
    (i/m)*(0, -3/2), plus V grids obtained by the half-period shift
    (cx*sqrt(3)/(4n), cy*3/(4m)) with cx = ceil((b+1)*2n) and
    cy = ceil((b+1)*2m/3).  All cell centres lie on the rectangular fine
    lattice (sqrt(3)/(4n) * U, 3/(4m) * T); equal colours form the coset
    lattice generated by (2*cx, 0) and (cx, cy) in (U, T) coordinates.

    For some parameters the half-period shift lands on the cell lattice
    of a W grid, making a V grid coincide with it cell-for-cell (and
    colour-for-colour).  Coinciding grids are collapsed, so the actual
    fold number j may be n*m instead of 2*n*m; k keeps the formula value
    and the colours-per-fold ratio is unchanged.
    """
    if b < 1.0:
        raise ValueError("b must be >= 1")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if _counts is None:
        cx = math.ceil((b + 1.0) * 2.0 * n)
        cy = math.ceil((b + 1.0) * 2.0 * m / 3.0)
    else:
        cx, cy = _counts
    s = 0.5
    ux = SQRT3 / (4.0 * n)  # fine lattice pitch along x
    ty = 0.75 / m  # fine lattice pitch along y

    def colour_of(u: int, t: int) -> int:
        tt = t % (2 * cy)
        if tt >= cy:
            tt -= cy
            u -= cx
        return tt * (2 * cx) + (u % (2 * cx))

    def grid_key(u0: int, t0: int) -> Tuple[int, int]:
        # canonical coset representative of (u0, t0) modulo the cell
        # lattice {(2nq + n r, m r)} of a single grid
        t_red = t0 % m
        r = (t0 - t_red) // m
        u_red = (u0 - n * r) % (2 * n)
        return (u_red, t_red)

    seen = {}
    layers = []
    for v in (0, 1):
        for i in range(m):
            for j in range(n):
                u0 = 2 * j + v * cx
                t0 = -2 * i + v * cy
                key = grid_key(u0, t0)
                if key in seen:
                    continue
                seen[key] = (v, i, j)

                def colour(q: int, r: int, u0=u0, t0=t0) -> int:
                    return colour_of(u0 + 2 * n * q + n * r, t0 + m * r)

                period_q = 2 * cx
                period_r = _lcm(
                    (2 * cx) // math.gcd(n, 2 * cx),
                    (2 * cy) // math.gcd(m, 2 * cy),
                )
                off = Point(u0 * ux, t0 * ty)
                layers.append(
                    Layer(
                        grid=HexGrid(side=s, offset=off),
                        period_q=period_q,
                        period_r=period_r,
                        colour_map=_table(period_q, period_r, colour),
                    )
                )
    collapsed = len(layers) < 2 * n * m
    c = PeriodicColouring(
        interval=Interval(1.0, float(b)),
        j=len(layers),
        k=2 * cx * cy,
        layers=tuple(layers),
        period_vectors=(Point(2 * cx * ux, 0.0), Point(cx * ux, cy * ty)),
        provenance=(
            ("method", "2nm"),
            ("b", float(b)),
            ("n", n),
            ("m", m),
            ("collapsed", collapsed),
        ),
    )
    return _maybe_scaled(c, a)


def construct_density(b: float, n: int, a: float = 1.0) -> PeriodicColouring:
    """h_n-fold colouring with n^2 colours of the interval [a, a*b] graph.

    Copies of the region A (disk of diameter 1 cut by a concentric
    hexagon) are placed on the triangular lattice spanned by s*(1, 0) and
    s*(1/2, sqrt(3)/2), s = b + sqrt(1-x^2), and shifted in steps of s/n
    to give n^2 translated systems.  The plane is tiled with hexagons of
    width s/n; a tile fully contained in a copy of system (i, j) receives
    colour i*n + j.  Every tile lies in the same number h_n of systems.
    """
    if b < 1.0:
        raise ValueError("b must be >= 1")
    min_n = math.ceil(4.0 * (b + 1.0))
    if n < min_n:
        raise InfeasibleParameterError(
            f"n must be at least ceil(4*(b+1)) = {min_n}, got {n}"
        )
    x = solve_x(b)
    c_len = math.sqrt(1.0 - x * x)
    s = b + c_len
    w = s / n
    grid = HexGrid(side=w / SQRT3, offset=Point(w / 2.0 - c_len / 2.0, 0.0))
    apothem = c_len / 2.0

    # kernel: all tiles fully contained in the copy of A centred at the
    # origin (which is a point of the tiling lattice shifted by -offset)
    tol = 1e-12
    kernel = []
    reach = 0.5 + 2.0 * grid.side
    for cell in grid.cells_in_disk(Point(0.0, 0.0), reach):
        ok = True
        for v in grid.cell_polygon(cell).vertices:
            if v.x * v.x + v.y * v.y > 0.25 + tol:
                ok = False
                break
            ax, ay = abs(v.x), abs(v.y)
            if ax > apothem + tol or 0.5 * ax + (SQRT3 / 2.0) * ay > apothem + tol:
                ok = False
                break
        if ok:
            kernel.append((cell.q, cell.r))
    if not kernel:
        raise InfeasibleParameterError(
            f"no tile of width s/{n} fits inside A for b={b}"
        )
    layer = Layer(
        grid=grid,
        period_q=n,
        period_r=n,
        colour_map=KernelColourMap(n, tuple(kernel)),
    )
    c = PeriodicColouring(
        interval=Interval(1.0, float(b)),
        j=len(kernel),
        k=n * n,
        layers=(layer,),
        period_vectors=(Point(s, 0.0), Point(s / 2.0, s * SQRT3 / 2.0)),
        provenance=(("method", "density"), ("b", float(b)), ("n", n)),
    )
    return _maybe_scaled(c, a)
