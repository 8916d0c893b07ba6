"""Lossless JSON serialisation of periodic colourings.

Real numbers are written as decimal strings with 17 significant digits,
enough to round-trip IEEE doubles exactly; save -> load -> save is
byte-identical because keys are sorted and formatting is canonical.
"""

from __future__ import annotations

import json
from typing import Tuple

from .constructions import (
    Interval,
    KernelColourMap,
    Layer,
    PeriodicColouring,
)
from .geometry import HexGrid, Point

FORMAT_VERSION = 1


class SpecFileError(ValueError):
    """Malformed or inconsistent colouring file."""


def _real(x: float) -> str:
    return format(float(x), ".17g")


def _parse_real(s) -> float:
    try:
        return float(s)
    except (TypeError, ValueError) as exc:
        raise SpecFileError(f"bad real value {s!r}") from exc


def _layer_dict(layer: Layer) -> dict:
    d = {
        "side": _real(layer.grid.side),
        "offset": [_real(layer.grid.offset.x), _real(layer.grid.offset.y)],
        "period_q": layer.period_q,
        "period_r": layer.period_r,
    }
    cmap = layer.colour_map
    if isinstance(cmap, KernelColourMap):
        d["colour_map"] = {
            "type": "density_kernel",
            "n": cmap.n,
            "cells": [list(c) for c in cmap.cells],
        }
    else:
        d["colour_map"] = {
            "type": "table",
            "entries": {
                f"{q},{r}": sorted(cols)
                for (q, r), cols in sorted(cmap.items())
            },
        }
    return d


def to_json_text(c: PeriodicColouring) -> str:
    doc = {
        "version": FORMAT_VERSION,
        "interval": {"a": _real(c.interval.a), "b": _real(c.interval.b)},
        "j": c.j,
        "k": c.k,
        "period_vectors": [
            [_real(v.x), _real(v.y)] for v in c.period_vectors
        ],
        "provenance": {str(k): v for k, v in c.provenance},
        "layers": [_layer_dict(layer) for layer in c.layers],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def save_colouring(c: PeriodicColouring, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json_text(c))


def _layer_from_dict(d: dict, k: int) -> Layer:
    try:
        side = _parse_real(d["side"])
        off = d["offset"]
        grid = HexGrid(side=side, offset=Point(_parse_real(off[0]), _parse_real(off[1])))
        period_q = int(d["period_q"])
        period_r = int(d["period_r"])
        cmap = d["colour_map"]
        kind = cmap["type"]
    except (KeyError, IndexError, TypeError) as exc:
        raise SpecFileError(f"malformed layer: {exc}") from exc
    if side <= 0 or period_q <= 0 or period_r <= 0:
        raise SpecFileError("layer side and periods must be positive")
    if kind == "table":
        entries = {}
        for key, cols in cmap["entries"].items():
            try:
                q_s, r_s = key.split(",")
                qr = (int(q_s), int(r_s))
            except ValueError as exc:
                raise SpecFileError(f"bad cell key {key!r}") from exc
            colset = frozenset(int(x) for x in cols)
            if any(not (0 <= x < k) for x in colset):
                raise SpecFileError(f"colour id out of range in cell {key}")
            entries[qr] = colset
        if len(entries) != period_q * period_r:
            raise SpecFileError("colour table does not cover one full period")
        colour_map = entries
    elif kind == "density_kernel":
        n = int(cmap["n"])
        cells = tuple((int(a), int(b)) for a, b in cmap["cells"])
        if n != period_q or n != period_r:
            raise SpecFileError("kernel block size must equal the periods")
        colour_map = KernelColourMap(n, cells)
    else:
        raise SpecFileError(f"unknown colour map type {kind!r}")
    return Layer(grid=grid, period_q=period_q, period_r=period_r, colour_map=colour_map)


def from_json_text(text: str) -> PeriodicColouring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise SpecFileError("missing or unsupported format version")
    try:
        interval = Interval(
            _parse_real(doc["interval"]["a"]), _parse_real(doc["interval"]["b"])
        )
        j = int(doc["j"])
        k = int(doc["k"])
        pv = doc["period_vectors"]
        period_vectors: Tuple[Point, Point] = (
            Point(_parse_real(pv[0][0]), _parse_real(pv[0][1])),
            Point(_parse_real(pv[1][0]), _parse_real(pv[1][1])),
        )
        layers = tuple(_layer_from_dict(d, k) for d in doc["layers"])
        provenance = tuple(sorted(doc.get("provenance", {}).items()))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, SpecFileError):
            raise
        raise SpecFileError(f"malformed colouring file: {exc}") from exc
    if j < 1 or k < 1 or not layers:
        raise SpecFileError("j, k must be positive and layers non-empty")
    c = PeriodicColouring(
        interval=interval,
        j=j,
        k=k,
        layers=layers,
        period_vectors=period_vectors,
        provenance=provenance,
    )
    _check_fold(c)
    return c


def _check_fold(c: PeriodicColouring) -> None:
    """Probe a few deterministic points: every point needs j colours."""
    v1, v2 = c.period_vectors
    for i in range(4):
        for jj in range(4):
            p = Point(
                (0.137 + i / 4.0) * v1.x + (0.251 + jj / 4.0) * v2.x,
                (0.137 + i / 4.0) * v1.y + (0.251 + jj / 4.0) * v2.y,
            )
            cols = c.colours_at(p)
            if len(cols) != c.j:
                raise SpecFileError(
                    f"point ({p.x:.6f}, {p.y:.6f}) has {len(cols)} colours, "
                    f"expected j={c.j}"
                )
            if any(not (0 <= x < c.k) for x in cols):
                raise SpecFileError("colour id out of range at probe point")


def load_colouring(path: str) -> PeriodicColouring:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_text(fh.read())
