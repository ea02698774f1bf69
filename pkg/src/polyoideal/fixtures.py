"""Named fixtures and the seeded closed-path generator.

Fixtures are plain data (lists of intervals or cells); :func:`load`
turns a name into a validated :class:`Polyocollection` or
:class:`CellComplex`, and :func:`fixture_json` gives the JSON form read by
the command line.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterator

from .geometry import (CellComplex, InputError, Interval, Polyocollection, closed_path,
                       enumerate_zigzag_walks, find_L_configurations, find_ladders,
                       validate_polyocollection)

IntervalData = tuple[tuple[int, int], tuple[int, int]]

INTERVAL_FIXTURES: dict[str, list[IntervalData]] = {
    # a valid collection mixing cells and longer strips
    "C1": [((1, 1), (2, 2)), ((1, 2), (2, 3)), ((2, 1), (5, 2)), ((2, 2), (5, 3)),
           ((5, 3), (7, 4))],
    # two crossing "plus" shapes built from strips
    "C2": [((3, 1), (4, 2)), ((4, 1), (5, 2)), ((3, 2), (4, 6)), ((4, 2), (5, 6)),
           ((3, 6), (4, 7)), ((4, 6), (5, 7)), ((1, 3), (2, 4)), ((1, 4), (2, 5)),
           ((2, 3), (6, 4)), ((2, 4), (6, 5)), ((6, 3), (7, 4)), ((6, 4), (7, 5))],
    # violates the edge-overlap axiom
    "C3": [((1, 2), (3, 4)), ((2, 1), (4, 3)), ((4, 1), (5, 2)), ((4, 2), (5, 3))],
    # four 2x2 squares plus an overlapping middle square
    "C4": [((1, 1), (3, 3)), ((1, 3), (3, 5)), ((3, 1), (5, 3)), ((3, 3), (5, 5)),
           ((2, 2), (4, 4))],
    # smallest non-prime example: 14 vertices, height 5, two minimal primes
    "D": [((2, 1), (4, 2)), ((1, 2), (2, 3)), ((4, 2), (5, 3)), ((2, 3), (3, 4)),
          ((3, 3), (4, 4))],
    "unit": [((0, 0), (1, 1))],
    "two-points-apart": [((0, 0), (1, 1)), ((10, 10), (11, 11))],
}

CELL_FIXTURES: dict[str, list[tuple[int, int]]] = {
    "square2": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "ring8": [(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3), (1, 2)],
    "row6": [(x, 0) for x in range(6)],
    "row5": [(x, 0) for x in range(5)],
    # four rank-2 blocks in a staircase
    "staircase4": [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3)],
    # smallest non-prime closed path (16 cells), found by exhaustive search
    "nonprime16": [(0, 0), (0, 1), (0, 2), (1, -1), (1, 0), (1, 2), (1, 3), (2, -1), (2, 3),
                   (3, -1), (3, 0), (3, 2), (3, 3), (4, 0), (4, 1), (4, 2)],
    # 26-cell closed path with four step and two switchback junctions and
    # exactly four zig-zag walks; transcribed from a published drawing
    "walk4": [(x, 0) for x in range(1, 8)] + [
        (0, 1), (1, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (3, 4), (3, 3), (4, 3),
        (5, 3), (5, 4), (6, 4), (7, 4), (7, 3), (8, 3), (7, 1), (8, 1), (8, 2)],
}


def names() -> list[str]:
    return sorted(INTERVAL_FIXTURES) + sorted(CELL_FIXTURES)


def intervals(name: str) -> list[Interval]:
    return [Interval(a, b) for a, b in INTERVAL_FIXTURES[name]]


def load(name: str):
    """Validated fixture: a Polyocollection (or ViolationList) or a CellComplex."""
    if name in INTERVAL_FIXTURES:
        return validate_polyocollection(intervals(name))
    if name in CELL_FIXTURES:
        return CellComplex(CELL_FIXTURES[name])
    raise InputError(f"unknown fixture {name!r}; known: {', '.join(names())}")


def fixture_json(name: str) -> dict:
    if name in INTERVAL_FIXTURES:
        return {"type": "polyocollection",
                "intervals": [{"ll": list(a), "ur": list(b)} for a, b in INTERVAL_FIXTURES[name]]}
    if name in CELL_FIXTURES:
        return {"type": "cells", "cells": [list(c) for c in sorted(CELL_FIXTURES[name])]}
    raise InputError(f"unknown fixture {name!r}")


def parse_fixture(data) -> Polyocollection | CellComplex:
    """Build a collection from the JSON fixture schema.

    Interval fixtures are validated; a violating collection raises
    nothing here and is returned as the ``ViolationList``.
    """
    if not isinstance(data, dict) or "type" not in data:
        raise InputError("fixture must be an object with a 'type' field")
    kind = data["type"]
    try:
        if kind == "polyocollection":
            ivs = []
            for item in data["intervals"]:
                ll, ur = item["ll"], item["ur"]
                ivs.append(Interval(_point(ll), _point(ur)))
            if len(set(ivs)) != len(ivs):
                raise InputError("duplicate interval in fixture")
            return validate_polyocollection(ivs)
        if kind == "cells":
            cells = [_point(c) for c in data["cells"]]
            if len(set(cells)) != len(cells):
                raise InputError("duplicate cell in fixture")
            return CellComplex(cells)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed fixture: missing or bad field {exc}") from None
    raise InputError(f"unknown fixture type {kind!r}")


def _point(v) -> tuple[int, int]:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in v)):
        raise InputError(f"bad point {v!r}")
    return (v[0], v[1])


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# closed-path generator


@dataclass(frozen=True)
class ClosedPathSample:
    cells: CellComplex
    sequence: tuple[tuple[int, int], ...]
    nonprime: bool  # a zig-zag walk exists
    structural_prime: bool  # an L-configuration or a ladder of >= 3 steps exists

    def to_json(self) -> dict:
        return {"type": "cells", "cells": [list(c) for c in self.sequence],
                "label": "non-prime" if self.nonprime else "prime"}


def _cell_vertices(c):
    return {(c[0], c[1]), (c[0] + 1, c[1]), (c[0], c[1] + 1), (c[0] + 1, c[1] + 1)}


_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def generate_closed_paths(seed: int, max_cells: int, kind: str = "any", min_cells: int = 6,
                          rate: float = 1.0) -> Iterator[ClosedPathSample]:
    """Reproducible stream of closed paths with at most ``max_cells`` cells.

    Depth-first search over cycles anchored at their lowest-leftmost cell,
    with direction choices shuffled by ``random.Random(seed)``. Each cycle
    is validated as a closed path and labelled by both detectors (zig-zag
    walks, and L-configurations or ladders); every closed path within the size bound appears at most
    once, and exactly once when ``rate == 1``.

    Parameters
    ----------
    seed : int
    max_cells : int
        At least 6.
    kind : {"any", "prime", "nonprime"}
        For "nonprime" the search is pruned to paths whose turning runs all
        have length 2 or 3, which every path with a zig-zag walk satisfies.
    min_cells : int
    rate : float
        Probability of emitting each found path (thins the stream).
    """
    if max_cells < 6:
        raise InputError("max_cells must be at least 6")
    if kind not in ("any", "prime", "nonprime"):
        raise InputError(f"unknown kind {kind!r}")
    rng = random.Random(seed)
    prune = kind == "nonprime"
    start, first, end = (0, 0), (0, 1), (1, 0)
    seq = [start, first]
    used = {start, first, end}
    verts = [_cell_vertices(start), _cell_vertices(first)]

    def emit():
        n = len(seq) + 1
        if n < min_cells:
            return None
        if rate < 1.0 and rng.random() >= rate:
            return None
        cells = tuple(seq) + (end,)
        P = CellComplex(cells)
        if not closed_path(P).ok:
            return None
        nonprime = bool(enumerate_zigzag_walks(P))
        if kind == "prime" and nonprime or kind == "nonprime" and not nonprime:
            return None
        structural = bool(find_L_configurations(P)) or bool(find_ladders(P, 3))
        return ClosedPathSample(P, cells, nonprime, structural)

    def dfs(first_run, run):
        k = len(seq)
        c = seq[-1]
        prev = (c[0] - seq[-2][0], c[1] - seq[-2][1])
        order = list(_DIRS)
        rng.shuffle(order)
        for d in order:
            nxt = (c[0] + d[0], c[1] + d[1])
            fr, r = first_run, run
            if prune:
                # turning status of c is now known
                if d != prev:
                    r += 1
                    if r > 3:
                        continue
                else:
                    if fr is None:
                        fr = r
                    elif r == 1 or r > 3:
                        continue
                    r = 0
            if nxt == end:
                s = emit()
                if s is not None:
                    yield s
                continue
            if nxt == start or nxt in used or nxt < start:
                continue
            if k + 1 >= max_cells:
                continue
            if abs(nxt[0] - end[0]) + abs(nxt[1] - end[1]) + k + 1 > max_cells:
                continue
            vn = _cell_vertices(nxt)
            if any(vn & verts[j] for j in range(2, k - 2)):
                continue
            used.add(nxt)
            seq.append(nxt)
            verts.append(vn)
            yield from dfs(fr, r)
            seq.pop()
            verts.pop()
            used.discard(nxt)

    yield from dfs(None, 1)


# ---------------------------------------------------------------------------
# random polyocollections


def random_polyocollection(rng: random.Random, max_members: int = 4, grid: int = 5,
                           max_side: int = 3, cell_bias: float = 0.5,
                           seed_members: list[Interval] | None = None) -> Polyocollection:
    """A random non-empty polyocollection built by rejection.

    Candidate intervals with corners in ``[0, grid]^2`` are added one at a
    time when the enlarged collection still satisfies the axioms. With
    probability ``cell_bias`` a candidate is a unit cell adjacent to an
    existing member, which makes connected, non-trivial shapes common.
    ``seed_members`` (a valid collection) are kept and extended by up to
    ``max_members`` further intervals.
    """
    members: list[Interval] = list(seed_members or [])
    target = len(members) + rng.randint(0 if members else 1, max_members)
    tries = 0
    while len(members) < target and tries < 50 * target:
        tries += 1
        if members and rng.random() < cell_bias:
            base = rng.choice(members)
            x = rng.randint(base.ll[0] - 1, base.ur[0])
            y = rng.randint(base.ll[1] - 1, base.ur[1])
            cand = Interval((x, y), (x + 1, y + 1))
        else:
            x, y = rng.randint(0, grid - 1), rng.randint(0, grid - 1)
            w, h = rng.randint(1, max_side), rng.randint(1, max_side)
            cand = Interval((x, y), (x + w, y + h))
        if cand in members:
            continue
        if isinstance(validate_polyocollection(members + [cand]), Polyocollection):
            members.append(cand)
    return validate_polyocollection(members)
