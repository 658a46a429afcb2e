"""Whirling-tour verification, winding counts, and budgeted search.

A whirling tour is a Hamiltonian directed cycle of the digraph; its coil
count is the number of tour arcs crossing the north plumb-line, which
(all arcs being CCW) equals the winding number of the cycle about the
pivot.  Search is depth-first backtracking with forced-arc propagation,
dead-vertex pruning and Warnsdorff-style successor ordering; it is
explicitly budgeted, and a not-found result never means nonexistence.
Nonexistence claims belong to the certificate and LP modules.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from typing import Callable

from .digraph import WhirlDigraph
from .geometry import RAYS, Cell, crosses_axis_ray
from .polytope import CycleCover

__all__ = [
    "Tour",
    "SearchStats",
    "CapExceededError",
    "verify_tour",
    "winding_by_ray",
    "search_tour",
    "enumerate_cycle_covers",
    "tour_to_json",
    "tour_from_json",
]


class CapExceededError(RuntimeError):
    """Cycle-cover enumeration found more covers than the caller's cap."""


@dataclass(frozen=True)
class Tour:
    """A verified Hamiltonian cycle, as the cyclic cell sequence plus coil count."""

    cells: tuple[Cell, ...]
    coil: int


@dataclass
class SearchStats:
    """Filled in by search_tour: expansions used and whether the space closed.

    ``exhausted`` True means the depth-first search ran out of branches
    before running out of budget, i.e. no tour satisfying the constraints
    exists from the canonical start vertex (which is every tour, since a
    Hamiltonian cycle visits it).
    """

    nodes: int = 0
    exhausted: bool = False


def verify_tour(g: WhirlDigraph, cells) -> Tour:
    """Validate a cell sequence as a whirling tour and compute its coil count.

    Checks that every vertex appears exactly once and that each cyclically
    consecutive pair is an arc; reports the first offending pair.
    """
    cells = tuple(Cell(*c) for c in cells)
    seen: set[Cell] = set()
    for c in cells:
        if c not in g.vertex_index:
            raise ValueError(f"{tuple(c)} is not a vertex of the n={g.n} digraph")
        if c in seen:
            raise ValueError(f"vertex {tuple(c)} is visited twice")
        seen.add(c)
    if len(cells) != len(g.vertices):
        missing = sorted(set(g.vertices) - seen)[:3]
        raise ValueError(f"not Hamiltonian: {len(g.vertices) - len(cells)} vertices missing, e.g. {missing}")
    coil = 0
    for k, t in enumerate(cells):
        h = cells[(k + 1) % len(cells)]
        a = g.arc_between(t, h)
        if a is None:
            raise ValueError(f"step {tuple(t)} -> {tuple(h)} is not an arc of the digraph")
        coil += a.w
    return Tour(cells=cells, coil=coil)


def winding_by_ray(g: WhirlDigraph, tour: Tour, ray: str = "north") -> int:
    """Count tour arcs crossing one of the four open axis rays from the pivot.

    All arcs are CCW, so every crossing contributes +1 and the four totals
    agree (they all equal the winding number).  Odd boards support the
    north ray only.
    """
    if ray not in RAYS:
        raise ValueError(f"unknown ray {ray!r}; expected one of {RAYS}")
    geom = g.geometry
    n = len(tour.cells)
    return sum(
        crosses_axis_ray(geom, tour.cells[k], tour.cells[(k + 1) % n], ray)
        for k in range(n)
    )


def search_tour(
    g: WhirlDigraph,
    coil_target: int | None = None,
    budget: int = 1_000_000,
    seed: int = 0,
    progress: Callable[[int, int], None] | None = None,
    progress_every: int = 100_000,
    stats: SearchStats | None = None,
) -> Tour | None:
    """Budgeted depth-first search for a whirling tour, optionally at a coil count.

    The cycle is grown from vertex (0, 0)-side anchor (the first vertex),
    which every tour visits, so fixing it loses nothing.  At each node:

    * dead-vertex pruning: any unvisited vertex with no remaining in- or
      out-option kills the branch;
    * forced arcs: an unvisited vertex whose only remaining in-option is
      the current path head must be visited next (two such vertices kill
      the branch);
    * ordering: fewest onward successors first, arc id as tie-break; a
      nonzero seed shuffles equal-priority candidates reproducibly;
    * coil pruning (with a target): the running crossing count must never
      exceed the target, and an admissible upper bound on the remaining
      crossings (one per future tail with a crossing out-arc still open)
      must keep the target reachable.

    Every pruning rule only discards branches with no valid completion,
    so returning None with budget to spare means the (start-anchored)
    space was exhausted; returning None at budget means "not found".
    A returned tour is re-verified before being handed back.  n must be
    even, except n = 3 which hosts the classic 3x3 fixture.
    """
    if g.n % 2 and g.n != 3:
        raise ValueError("search supports even boards (and the n=3 fixture)")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    nv = len(g.vertices)
    out_opts = [
        [(g.vertex_index[a.head], a.w, a.id) for a in g.out_arcs(v)] for v in g.vertices
    ]
    in_tails = [[g.vertex_index[a.tail] for a in g.in_arcs(v)] for v in g.vertices]
    has_cross_out = [any(w for _, w, _ in opts) for opts in out_opts]
    rng = random.Random(seed) if seed else None
    if stats is None:
        stats = SearchStats()
    start = 0
    visited = bytearray(nv)
    visited[start] = 1
    path = [start]
    budget_left = budget

    sys.setrecursionlimit(max(sys.getrecursionlimit(), nv + 200))

    def dfs(current: int, coil: int) -> list[int] | None:
        nonlocal budget_left
        if budget_left <= 0:
            return None
        budget_left -= 1
        stats.nodes += 1
        if progress is not None and stats.nodes % progress_every == 0:
            progress(stats.nodes, len(path))

        if len(path) == nv:
            for head, w, _ in out_opts[current]:
                if head == start and (coil_target is None or coil + w == coil_target):
                    return path + []
            return None

        # Pruning sweep over unvisited vertices: liveness, forcing, coil bound.
        forced = -1
        cross_bound = 1 if (coil_target is not None and has_cross_out[current]) else 0
        for u in range(nv):
            if visited[u]:
                continue
            in_ok = 0
            in_from_current = False
            for t in in_tails[u]:
                if not visited[t]:
                    in_ok += 1
                elif t == current:
                    in_ok += 1
                    in_from_current = True
            if in_ok == 0:
                return None
            out_ok = 0
            cross_ok = False
            for head, w, _ in out_opts[u]:
                if not visited[head] or head == start:
                    out_ok += 1
                    if w:
                        cross_ok = True
            if out_ok == 0:
                return None
            if cross_ok:
                cross_bound += 1
            if in_ok == 1 and in_from_current:
                if forced >= 0 and forced != u:
                    return None
                forced = u
        if coil_target is not None and coil + cross_bound < coil_target:
            return None

        candidates = []
        for head, w, aid in out_opts[current]:
            if visited[head]:
                continue
            if forced >= 0 and head != forced:
                continue
            if coil_target is not None and coil + w > coil_target:
                continue
            onward = sum(
                1 for h2, _, _ in out_opts[head] if not visited[h2] or h2 == start
            )
            candidates.append((onward, aid, head, w))
        if rng is not None:
            rng.shuffle(candidates)
            candidates.sort(key=lambda t: t[0])
        else:
            candidates.sort()

        for _, _, head, w in candidates:
            visited[head] = 1
            path.append(head)
            found = dfs(head, coil + w)
            if found is not None:
                return found
            path.pop()
            visited[head] = 0
        return None

    result = dfs(start, 0)
    if result is None and budget_left > 0:
        stats.exhausted = True
    if result is None:
        return None
    return verify_tour(g, [g.vertices[k] for k in result])


def enumerate_cycle_covers(g: WhirlDigraph, cap: int = 10_000) -> list[CycleCover]:
    """All cycle covers of a tiny digraph, by successor-choice DFS.

    Guarded to n <= 4 (the state space explodes beyond that); raises
    CapExceededError as soon as more than ``cap`` covers are found.
    """
    if g.n > 4:
        raise ValueError(f"enumeration is intended for n <= 4, got n={g.n}")
    nv = len(g.vertices)
    out_opts = [[g.vertex_index[a.head] for a in g.out_arcs(v)] for v in g.vertices]
    used = bytearray(nv)
    succ = [0] * nv
    covers: list[CycleCover] = []

    def rec(k: int) -> None:
        if k == nv:
            if len(covers) >= cap:
                raise CapExceededError(f"more than cap={cap} cycle covers")
            covers.append(
                CycleCover(succ={g.vertices[t]: g.vertices[succ[t]] for t in range(nv)})
            )
            return
        for head in out_opts[k]:
            if not used[head]:
                used[head] = 1
                succ[k] = head
                rec(k + 1)
                used[head] = 0

    rec(0)
    return covers


def tour_to_json(n: int, tour: Tour) -> str:
    doc = {"n": n, "cells": [[c.i, c.j] for c in tour.cells], "coil": tour.coil}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def tour_from_json(text: str) -> tuple[int, list[Cell]]:
    """Parse a tour file; returns (n, cells).  Verification is separate."""
    doc = json.loads(text)
    try:
        n = int(doc["n"])
        cells = [Cell(int(i), int(j)) for i, j in doc["cells"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed tour JSON: {exc}") from exc
    return n, cells
