"""Frequency scheduling for transmitters from a plane colouring.

Two transmitters interfere when they are 1 to 2 units apart and some
third transmitter lies within distance 1 of both (it would hear both).
A colouring of the [1, 2]-interval graph assigns every transmitter the
j-element colour set of its position; interfering transmitters get
disjoint sets, so the colours can serve as time/frequency slots with a
slot reuse ratio of k/j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Set, Tuple

import numpy as np

from .constructions import PeriodicColouring
from .geometry import Point


@dataclass(frozen=True)
class Transmitter:
    id: str
    position: Point


@dataclass
class ConflictGraph:
    transmitters: Tuple[Transmitter, ...]
    edges: Set[Tuple[str, str]] = field(default_factory=set)

    def neighbours(self, tid: str) -> List[str]:
        out = []
        for u, v in self.edges:
            if u == tid:
                out.append(v)
            elif v == tid:
                out.append(u)
        return out


def _edge(u: str, v: str) -> Tuple[str, str]:
    return (u, v) if u <= v else (v, u)


def build_conflict_graph(transmitters: List[Transmitter]) -> ConflictGraph:
    """Conflict edges: distance in (1, 2] plus a common unit-range witness."""
    ids = [t.id for t in transmitters]
    if len(set(ids)) != len(ids):
        raise ValueError("transmitter ids must be unique")
    n = len(transmitters)
    graph = ConflictGraph(transmitters=tuple(transmitters))
    if n == 0:
        return graph
    pos = np.array([[t.position.x, t.position.y] for t in transmitters])
    diff = pos[:, None, :] - pos[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    near = (d2 <= 1.0).astype(np.int64)
    common = near @ near
    cand = (d2 > 1.0) & (d2 <= 4.0) & (common > 0)
    for i, j in zip(*np.nonzero(np.triu(cand, k=1))):
        graph.edges.add(_edge(ids[i], ids[j]))
    return graph


@dataclass
class Schedule:
    j: int
    k: int
    cycle_length: Fraction
    slots: Dict[str, FrozenSet[int]]


def schedule_from_colouring(
    graph: ConflictGraph, colouring: PeriodicColouring
) -> Schedule:
    """Slot assignment: each transmitter gets the colours of its position.

    The colouring must cover the conflict distances, i.e. its interval
    must contain [1, 2].
    """
    a, b = colouring.interval.a, colouring.interval.b
    if not (a <= 1.0 and b >= 2.0):
        raise ValueError(
            f"colouring interval [{a}, {b}] does not cover distances [1, 2]"
        )
    slots = {
        t.id: frozenset(colouring.colours_at(t.position))
        for t in graph.transmitters
    }
    return Schedule(
        j=colouring.j,
        k=colouring.k,
        cycle_length=Fraction(colouring.k, colouring.j),
        slots=slots,
    )


def validate_schedule(schedule: Schedule, graph: ConflictGraph) -> bool:
    """True iff slot sets are well-formed and disjoint across conflicts."""
    for t in graph.transmitters:
        slot = schedule.slots.get(t.id)
        if slot is None or len(slot) != schedule.j:
            return False
        if any(not (0 <= s < schedule.k) for s in slot):
            return False
    for u, v in graph.edges:
        if schedule.slots[u] & schedule.slots[v]:
            return False
    return True
