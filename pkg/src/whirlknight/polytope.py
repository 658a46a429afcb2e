"""Exact feasibility decisions for the cycle-cover LP.

Dropping the coil row from the LP leaves the assignment polytope of the
digraph's arcs, which is integral: the minimum and maximum of the integer
coil functional sum(w_e x_e) over it are attained at cycle covers, and
the functional's range is the whole interval between them.  Feasibility
of the LP at coil count c is therefore exactly min_coil <= c <= max_coil,
decided by two perfect-matching solves (out-copies vs in-copies of the
vertices, one edge per arc).

The Hungarian solver below uses integer potentials on int64 arrays, so
every comparison is exact; there is no floating point in this module.
Feasible decisions come with an exact rational witness: the convex
combination of the two extreme covers that meets the coil row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from .digraph import WhirlDigraph
from .geometry import Cell

if TYPE_CHECKING:  # pragma: no cover
    from .tours import Tour

__all__ = [
    "NoCycleCoverError",
    "CycleCover",
    "CoilInterval",
    "FractionalAssignment",
    "LpDecision",
    "coil_interval",
    "lp_feasible",
    "coil_of_cover",
    "check_reduction",
    "validate_assignment",
    "cover_to_json",
    "cover_from_json",
    "lp_decision_to_json",
]


class NoCycleCoverError(ValueError):
    """The digraph admits no cycle cover (no perfect matching exists)."""


@dataclass(frozen=True)
class CycleCover:
    """Successor permutation along arcs: vertex-disjoint cycles covering V."""

    succ: dict[Cell, Cell]

    def cycles(self) -> list[list[Cell]]:
        """The cycles of the cover, each starting at its smallest cell."""
        seen: set[Cell] = set()
        out = []
        for start in sorted(self.succ):
            if start in seen:
                continue
            cyc = []
            v = start
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self.succ[v]
            out.append(cyc)
        return out


@dataclass(frozen=True)
class CoilInterval:
    min_coil: int
    max_coil: int
    argmin: CycleCover
    argmax: CycleCover


@dataclass(frozen=True)
class FractionalAssignment:
    """Arc-id -> value map with exact rational entries; omitted ids are 0."""

    x: dict[int, Fraction]


@dataclass(frozen=True)
class LpDecision:
    n: int
    c: int
    feasible: bool
    min_coil: int
    max_coil: int
    witness: FractionalAssignment | None


_FORBIDDEN = np.int64(1) << 40
_INFEASIBLE_DELTA = int(np.int64(1) << 39)


def _min_assignment(cost: np.ndarray) -> np.ndarray:
    """Exact minimum-cost perfect matching on a square int64 cost matrix.

    Hungarian algorithm with integer potentials (shortest augmenting
    paths); non-edges carry _FORBIDDEN.  Ties break toward the lowest
    column index, so the result is deterministic.  Returns the matched
    column of each row; raises NoCycleCoverError when completion is
    impossible without a forbidden pair.
    """
    n = cost.shape[0]
    big = np.int64(1) << 60
    u = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(n + 1, dtype=np.int64)
    match = np.zeros(n + 1, dtype=np.int64)  # match[j]: 1-based row on column j, 0 = free
    way = np.zeros(n + 1, dtype=np.int64)

    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = np.full(n + 1, big, dtype=np.int64)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = int(match[j0])
            mv = minv[1:]
            wy = way[1:]
            unused = ~used[1:]
            cur = cost[i0 - 1] - u[i0] - v[1:]
            improve = unused & (cur < mv)
            mv[improve] = cur[improve]
            wy[improve] = j0
            reach = np.where(unused, mv, big)
            jrel = int(np.argmin(reach))
            delta = int(reach[jrel])
            if delta >= _INFEASIBLE_DELTA:
                raise NoCycleCoverError(
                    "no cycle cover exists: some vertex cannot be matched"
                )
            u[match[used]] += delta
            v[used] -= delta
            minv[~used] -= delta
            j0 = jrel + 1
            if match[j0] == 0:
                break
        while j0:
            j1 = int(way[j0])
            match[j0] = match[j1]
            j0 = j1

    cols = np.empty(n, dtype=np.int64)
    cols[match[1:] - 1] = np.arange(n)
    return cols


def _weight_matrix(g: WhirlDigraph) -> np.ndarray:
    n = len(g.vertices)
    w = np.full((n, n), _FORBIDDEN, dtype=np.int64)
    for a in g.arcs:
        w[g.vertex_index[a.tail], g.vertex_index[a.head]] = a.w
    return w


def _cover_from_columns(g: WhirlDigraph, cols: np.ndarray) -> CycleCover:
    succ = {g.vertices[i]: g.vertices[int(j)] for i, j in enumerate(cols)}
    return CycleCover(succ=succ)


def coil_interval(g: WhirlDigraph) -> CoilInterval:
    """Extreme coil counts over all cycle covers, with witnessing covers.

    One min-weight and one max-weight matching solve.  The returned
    endpoints are recounted from the witness covers' arc weights, which
    doubles as the runtime check of the integrality premise.
    """
    w = _weight_matrix(g)
    lo_cover = _cover_from_columns(g, _min_assignment(w))
    hi_cover = _cover_from_columns(g, _min_assignment(np.where(w >= _FORBIDDEN, w, -w)))
    lo = coil_of_cover(g, lo_cover)
    hi = coil_of_cover(g, hi_cover)
    if lo > hi:
        raise AssertionError(f"matching solves disagree: min {lo} > max {hi}")
    return CoilInterval(min_coil=lo, max_coil=hi, argmin=lo_cover, argmax=hi_cover)


def coil_of_cover(g: WhirlDigraph, cover: CycleCover) -> int:
    """Total plumb-line crossing weight of a cover; validates it first."""
    succ = cover.succ
    if set(succ) != set(g.vertices):
        raise ValueError("cover does not assign a successor to every vertex")
    if len(set(succ.values())) != len(succ):
        raise ValueError("cover successors are not a permutation")
    total = 0
    for t, h in succ.items():
        a = g.arc_between(t, h)
        if a is None:
            raise ValueError(f"cover step {tuple(t)} -> {tuple(h)} is not an arc")
        total += a.w
    return total


def _convex_witness(g: WhirlDigraph, iv: CoilInterval, c: int) -> FractionalAssignment:
    lam = Fraction(1) if iv.max_coil == iv.min_coil else Fraction(
        iv.max_coil - c, iv.max_coil - iv.min_coil
    )
    arc_of = {(a.tail, a.head): a for a in g.arcs}
    x: dict[int, Fraction] = {}
    for cover, coef in ((iv.argmin, lam), (iv.argmax, 1 - lam)):
        if coef == 0:
            continue
        for t, h in cover.succ.items():
            aid = arc_of[(t, h)].id
            x[aid] = x.get(aid, Fraction(0)) + coef
    return FractionalAssignment(x=x)


def validate_assignment(g: WhirlDigraph, fa: FractionalAssignment, c: int) -> None:
    """Check every LP row of an assignment exactly; raise on any residual."""
    for aid, val in fa.x.items():
        if not (0 <= val <= 1):
            raise ValueError(f"arc {aid} value {val} violates the box bounds")
        if not (0 <= aid < len(g.arcs)):
            raise ValueError(f"unknown arc id {aid}")
    for k, v in enumerate(g.vertices):
        into = sum(fa.x.get(a, Fraction(0)) for a in g.in_adj[k])
        out = sum(fa.x.get(a, Fraction(0)) for a in g.out_adj[k])
        if into != 1 or out != 1:
            raise ValueError(f"degree rows at {tuple(v)} sum to in={into}, out={out}")
    coil = sum(g.arcs[aid].w * val for aid, val in fa.x.items())
    if coil != c:
        raise ValueError(f"coil row sums to {coil}, expected {c}")


def lp_feasible(g: WhirlDigraph, c: int) -> LpDecision:
    """Decide the cycle-cover LP at coil count c, with an exact witness.

    Feasible iff min_coil <= c <= max_coil.  The witness is the convex
    combination lam*argmin + (1-lam)*argmax with lam chosen so the coil
    row holds exactly; it is validated before being returned.
    """
    iv = coil_interval(g)
    feasible = iv.min_coil <= c <= iv.max_coil
    witness = None
    if feasible:
        witness = _convex_witness(g, iv, c)
        validate_assignment(g, witness, c)
    return LpDecision(
        n=g.n,
        c=c,
        feasible=feasible,
        min_coil=iv.min_coil,
        max_coil=iv.max_coil,
        witness=witness,
    )


def check_reduction(g: WhirlDigraph, tour: "Tour") -> bool:
    """Check the tour-to-LP reduction row by row.

    Converts the tour to its 0/1 arc indicator and verifies the degree
    rows, the coil row against the tour's coil count, and the box bounds.
    Raises on inputs that are not Hamiltonian cycles of g at all.
    """
    cells = [Cell(*c) for c in tour.cells]
    if len(cells) != len(g.vertices) or set(cells) != set(g.vertices):
        raise ValueError("not a Hamiltonian cycle: vertex set mismatch")
    x = [0] * len(g.arcs)
    for k, t in enumerate(cells):
        a = g.arc_between(t, cells[(k + 1) % len(cells)])
        if a is None:
            raise ValueError(f"tour step from {tuple(t)} is not an arc")
        x[a.id] = 1
    ok = all(sum(x[a] for a in g.in_adj[k]) == 1 for k in range(len(g.vertices)))
    ok = ok and all(sum(x[a] for a in g.out_adj[k]) == 1 for k in range(len(g.vertices)))
    ok = ok and all(val in (0, 1) for val in x)
    coil_row = sum(a.w * x[a.id] for a in g.arcs)
    return ok and coil_row == tour.coil


def cover_to_json(n: int, cover: CycleCover) -> str:
    steps = [[t.i, t.j, h.i, h.j] for t, h in sorted(cover.succ.items())]
    return json.dumps({"n": n, "succ": steps}, separators=(",", ":")) + "\n"


def cover_from_json(text: str) -> tuple[int, CycleCover]:
    doc = json.loads(text)
    try:
        n = int(doc["n"])
        succ = {Cell(int(a), int(b)): Cell(int(c), int(d)) for a, b, c, d in doc["succ"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed cycle-cover JSON: {exc}") from exc
    return n, CycleCover(succ=succ)


def lp_decision_to_json(d: LpDecision) -> str:
    doc = {
        "n": d.n,
        "c": d.c,
        "feasible": d.feasible,
        "min_coil": d.min_coil,
        "max_coil": d.max_coil,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
