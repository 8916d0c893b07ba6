"""Command line interface.

Commands: bound, construct, verify, schedule, tables.  Exit codes:
0 success / verification passed, 1 verification failed, 2 usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import bounds as bounds_mod
from .bounds import InfeasibleParameterError, chi_f_upper, count_contained_hexagons
from .constructions import (
    PeriodicColouring,
    classic_seven,
    construct_2nm,
    construct_density,
    construct_nm,
    fold2_twelve,
    fold3_sixteen,
    fold7_thirtyseven,
    nm_colour_count,
    two_nm_colour_count,
)
from .geometry import Point
from .scheduler import (
    Transmitter,
    build_conflict_graph,
    schedule_from_colouring,
    validate_schedule,
)
from .specfile import SpecFileError, load_colouring, save_colouring
from .verifier import verify_exact, verify_sampled

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _build(method: str, b: float, n: Optional[int], m: Optional[int]) -> PeriodicColouring:
    if method == "classic7":
        return classic_seven()
    if method == "fold2":
        return fold2_twelve()
    if method == "fold3":
        return fold3_sixteen()
    if method == "fold7":
        return fold7_thirtyseven()
    if method == "nm":
        if n is None or m is None:
            raise CliError("--n and --m are required for method nm")
        return construct_nm(b, n, m)
    if method == "2nm":
        if n is None or m is None:
            raise CliError("--n and --m are required for method 2nm")
        return construct_2nm(b, n, m)
    if method == "density":
        if n is None:
            raise CliError("--n is required for method density")
        return construct_density(b, n)
    raise CliError(f"unknown method {method!r}")


def cmd_bound(args) -> int:
    if args.b < 1.0:
        raise CliError("--b must be >= 1")
    d = chi_f_upper(args.b)
    if args.json:
        print(json.dumps({
            "b": d.b, "x": d.x, "y": d.y, "s": d.s,
            "area_A": d.area_a, "bound": d.bound,
        }, indent=2, sort_keys=True))
    else:
        print(f"b        = {d.b:.6f}")
        print(f"x        = {d.x:.12f}")
        print(f"y        = {d.y:.12f}")
        print(f"s        = {d.s:.12f}")
        print(f"area(A)  = {d.area_a:.12f}")
        print(f"chi_f <= {d.bound:.6f}")
    return EXIT_OK


def cmd_construct(args) -> int:
    c = _build(args.method, args.b, args.n, args.m)
    save_colouring(c, args.out)
    print(f"wrote {args.out}: j={c.j} k={c.k} ratio={c.k / c.j:.4f}")
    if args.svg:
        render_svg(c, args.svg)
        print(f"wrote {args.svg}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        c = load_colouring(args.spec)
    except FileNotFoundError as exc:
        raise CliError(str(exc))
    if args.mode == "exact":
        report = verify_exact(c)
    else:
        report = verify_sampled(
            c, samples=args.samples, window=args.window, seed=args.seed
        )
    sep = report.min_same_colour_separation
    doc = {
        "valid": report.valid,
        "mode": args.mode,
        "pairs_checked": report.pairs_checked,
        "min_same_colour_separation": None if math.isinf(sep) else sep,
        "findings": [
            {
                "status": f.status,
                "layers": [f.layer_a, f.layer_b],
                "cells": [[f.cell_a.q, f.cell_a.r], [f.cell_b.q, f.cell_b.r]],
                "colour": f.colour,
                "d_min": f.d_min,
                "d_max": f.d_max,
                "witness": (
                    [[f.witness[0].x, f.witness[0].y],
                     [f.witness[1].x, f.witness[1].y]]
                    if f.witness else None
                ),
            }
            for f in report.findings[: args.max_findings]
        ],
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK if report.valid else EXIT_INVALID


def _read_transmitters(path: str) -> List[Transmitter]:
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["id", "x", "y"]:
            raise CliError(f"{path}: expected CSV header 'id,x,y'")
        for lineno, row in enumerate(reader, start=2):
            try:
                out.append(
                    Transmitter(
                        id=row["id"].strip(),
                        position=Point(float(row["x"]), float(row["y"])),
                    )
                )
            except (TypeError, ValueError, AttributeError) as exc:
                raise CliError(f"{path}:{lineno}: bad row: {exc}")
    return out


def cmd_schedule(args) -> int:
    transmitters = _read_transmitters(args.transmitters)
    c = _build(args.method, args.b, args.n, args.m)
    graph = build_conflict_graph(transmitters)
    schedule = schedule_from_colouring(graph, c)
    if not validate_schedule(schedule, graph):
        print("internal error: produced schedule failed validation", file=sys.stderr)
        return EXIT_INVALID
    doc = {
        "j": schedule.j,
        "k": schedule.k,
        "cycle_length": str(schedule.cycle_length),
        "conflicts": sorted(list(e) for e in graph.edges),
        "slots": {tid: sorted(slot) for tid, slot in schedule.slots.items()},
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}: {len(transmitters)} transmitters, "
              f"{len(graph.edges)} conflicts, cycle length {schedule.cycle_length}")
    else:
        print(text)
    return EXIT_OK


def _best_nm(b: float, j: int) -> Tuple[int, int, int]:
    best = None
    for n in range(1, j + 1):
        if j % n:
            continue
        m = j // n
        k = nm_colour_count(b, n, m)
        if best is None or k < best[0]:
            best = (k, n, m)
    return best


def _best_2nm(b: float, j: int) -> Tuple[int, int, int]:
    assert j % 2 == 0
    half = j // 2
    best = None
    for n in range(1, half + 1):
        if half % n:
            continue
        m = half // n
        k = two_nm_colour_count(b, n, m)
        if best is None or k < best[0]:
            best = (k, n, m)
    return best


def build_tables_text() -> str:
    lines = []
    lines.append("Upper bounds on the fractional chromatic number for [1, b]:")
    lines.append("  b      bound")
    for b in (1.0, 1.5, 2.0, 3.0, 4.0):
        lines.append(f"  {b:<5.2f}  {chi_f_upper(b).bound:.2f}")
    lines.append("")
    lines.append("j-fold colourings of the unit-distance graph (b = 1):")
    lines.append("  j   k(nm)  n x m    k(2nm)  n x m    k/j")
    for j in (2, 4, 6, 8, 10, 12):
        k1, n1, m1 = _best_nm(1.0, j)
        k2, n2, m2 = _best_2nm(1.0, j)
        best = min(k1, k2)
        lines.append(
            f"  {j:<3d} {k1:<6d} {n1}x{m1:<6} {k2:<7d} {n2}x{m2:<6} "
            f"{Fraction(best, j)!s:>6} = {best / j:.2f}"
        )
    lines.append("")
    lines.append("Best known small j-fold colourings of the unit-distance graph:")
    lines.append("  j   k    k/j     construction")
    selected = (
        (1, 7, "7 hexagon colouring"),
        (2, 12, "two shifted row-block grids"),
        (3, 16, "three shifted row-block grids"),
        (4, 24, "2nm with n=1, m=2"),
        (5, 32, "restriction of the 6-fold colouring"),
        (6, 32, "2nm with n=1, m=3"),
        (7, 37, "37 flower colouring"),
    )
    for j, k, how in selected:
        lines.append(f"  {j:<3d} {k:<4d} {k / j:<7.3f} {how}")
    lines.append("")
    lines.append("j-fold colourings for the interval [1, 2]:")
    lines.append("  j    k     n x m    k/j")
    for j in (1, 6, 9, 84, 87):
        k, n, m = _best_nm(2.0, j)
        note = ""
        if j == 1:
            # published value 12 is not reproduced by the nm formula,
            # which gives ceil(2b/sqrt(3)+1)^2 = 16
            note = "  [published: 12; formula disagrees]"
        lines.append(
            f"  {j:<4d} {k:<5d} {n}x{m:<6} {Fraction(k, j)!s:>8} = {k / j:.2f}{note}"
        )
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> int:
    text = build_tables_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def render_svg(c: PeriodicColouring, path: str, scale: float = 100.0) -> None:
    """Draw one fundamental domain; colour class 0 is filled."""
    v1, v2 = c.period_vectors
    anchor = c.layers[0].grid.offset
    corners = [
        (anchor.x + s1 * v1.x + s2 * v2.x, anchor.y + s1 * v1.y + s2 * v2.y)
        for s1 in (0.0, 1.0)
        for s2 in (0.0, 1.0)
    ]
    margin = 2.0 * max(layer.grid.side for layer in c.layers)
    x0 = min(p[0] for p in corners) - margin
    x1 = max(p[0] for p in corners) + margin
    y0 = min(p[1] for p in corners) - margin
    y1 = max(p[1] for p in corners) + margin

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return (y1 - y) * scale

    cx = 0.5 * (x0 + x1)
    cy = 0.5 * (y0 + y1)
    radius = math.hypot(x1 - x0, y1 - y0) / 2.0 + margin
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{(x1 - x0) * scale:.1f}" height="{(y1 - y0) * scale:.1f}">'
    ]
    palette_fill = "#4878cf"
    for layer in c.layers:
        for cell in layer.grid.cells_in_disk(Point(cx, cy), radius):
            poly = layer.grid.cell_polygon(cell)
            pts = " ".join(f"{sx(v.x):.2f},{sy(v.y):.2f}" for v in poly.vertices)
            cols = layer.colour_set(cell.q, cell.r)
            if 0 in cols:
                parts.append(
                    f'<polygon points="{pts}" fill="{palette_fill}" '
                    f'fill-opacity="0.5" stroke="black" stroke-width="0.5"/>'
                )
            else:
                parts.append(
                    f'<polygon points="{pts}" fill="none" stroke="#999" '
                    f'stroke-width="0.5"/>'
                )
    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in
                   (corners[0], corners[1], corners[3], corners[2]))
    parts.append(
        f'<polygon points="{pts}" fill="none" stroke="red" stroke-width="1.5"/>'
    )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexfold",
        description="Multi-fold colourings of plane distance-interval graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="fractional chromatic number upper bound")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build a colouring and save it")
    p.add_argument("--method", required=True,
                   choices=["classic7", "fold2", "fold3", "fold7", "nm", "2nm", "density"])
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a saved colouring")
    p.add_argument("--spec", required=True)
    p.add_argument("--mode", choices=["exact", "sampled"], default="exact")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", type=float, default=20.0)
    p.add_argument("--max-findings", type=int, default=50)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schedule", help="slot assignment for transmitters")
    p.add_argument("--transmitters", required=True, help="CSV with header id,x,y")
    p.add_argument("--method", default="nm")
    p.add_argument("--b", type=float, default=2.0)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("tables", help="print the summary tables")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, SpecFileError, InfeasibleParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
