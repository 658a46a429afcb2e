"""Exact integer geometry for whirling-knight boards.

Cells are (row, col) pairs with row 0 at the top and column 0 at the left.
The pivot is the board centre ((n-1)/2, (n-1)/2).  Orientation predicates
work in doubled coordinates (2i - (n-1), 2j - (n-1)), which put the pivot
at the origin and keep every comparison in plain integers; plumb-line
crossing heights are exact ``Fraction`` values.  There is no floating
point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "Cell",
    "KnightStep",
    "BoardGeometry",
    "KNIGHT_STEPS",
    "RAYS",
    "knight_steps",
    "is_knight_displacement",
    "ccw_cross",
    "is_ccw",
    "crossing_weight",
    "crossing_height",
    "crosses_axis_ray",
]


class Cell(NamedTuple):
    """Board cell; ``i`` is the row from the top, ``j`` the column from the left."""

    i: int
    j: int


class KnightStep(NamedTuple):
    """One of the eight knight displacements (di² + dj² = 5)."""

    di: int
    dj: int


#: The eight knight steps in row-major order on (di, dj).  Arc enumeration
#: follows this order, so it is part of the serialized digraph format.
KNIGHT_STEPS: tuple[KnightStep, ...] = tuple(
    KnightStep(di, dj)
    for di in (-2, -1, 1, 2)
    for dj in (-2, -1, 1, 2)
    if di * di + dj * dj == 5
)

#: Axis-aligned open rays from the pivot, named from the board's viewpoint:
#: north points toward row 0, west toward column 0.
RAYS = ("north", "east", "south", "west")


def knight_steps() -> list[KnightStep]:
    """The eight knight steps, row-major on (di, dj)."""
    return list(KNIGHT_STEPS)


def is_knight_displacement(u: Cell, v: Cell) -> bool:
    di, dj = v[0] - u[0], v[1] - u[1]
    return di * di + dj * dj == 5


@dataclass(frozen=True)
class BoardGeometry:
    """An n x n board together with its pivot.

    ``pivot2`` is the pivot in doubled coordinates, always (n-1, n-1).
    For even n the pivot lies between cells; ``h = n/2`` is the number of
    rows (or columns) on each side of it.  ``h`` is undefined for odd n.
    """

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 3:
            raise ValueError(f"board side must be an integer >= 3, got {self.n!r}")

    @property
    def pivot2(self) -> tuple[int, int]:
        return (self.n - 1, self.n - 1)

    @property
    def pivot(self) -> tuple[Fraction, Fraction]:
        p = Fraction(self.n - 1, 2)
        return (p, p)

    @property
    def h(self) -> int:
        if self.n % 2:
            raise ValueError(f"h = n/2 requires an even board, got n={self.n}")
        return self.n // 2

    def on_board(self, c: Cell) -> bool:
        return 0 <= c[0] < self.n and 0 <= c[1] < self.n

    def centre_cell(self) -> Cell | None:
        """The centre cell of an odd board (excluded from the digraph), else None."""
        if self.n % 2:
            return Cell((self.n - 1) // 2, (self.n - 1) // 2)
        return None


def ccw_cross(geom: BoardGeometry, u: Cell, v: Cell) -> int:
    """Doubled cross product (u - pivot) x (v - pivot).

    Positive means the step u -> v turns counter-clockwise about the pivot.
    No board-membership check: callers such as the step-census sweep
    evaluate the inequality for off-board tails on purpose.
    """
    m = geom.n - 1
    ui, uj = 2 * u[0] - m, 2 * u[1] - m
    vi, vj = 2 * v[0] - m, 2 * v[1] - m
    return ui * vj - vi * uj


def _check_knight_pair(geom: BoardGeometry, u: Cell, v: Cell) -> None:
    if not (geom.on_board(u) and geom.on_board(v)):
        raise ValueError(f"{tuple(u)} -> {tuple(v)} is not on a {geom.n}x{geom.n} board")
    if not is_knight_displacement(u, v):
        raise ValueError(f"{tuple(u)} -> {tuple(v)} is not a knight displacement")


def is_ccw(geom: BoardGeometry, u: Cell, v: Cell) -> bool:
    """Is the knight arc u -> v counter-clockwise about the pivot?

    Exact integer test: the doubled cross product must be strictly
    positive.  A cross product of zero (u, pivot, v collinear; possible
    only on odd boards) counts as not CCW, so such arcs never enter the
    digraph.
    """
    _check_knight_pair(geom, u, v)
    return ccw_cross(geom, u, v) > 0


def crossing_height(geom: BoardGeometry, u: Cell, v: Cell) -> Fraction | None:
    """Row coordinate where the segment u -> v meets the pivot column.

    Exact rational interpolation.  Returns None when the columns of u and
    v do not strictly straddle the pivot column.
    """
    _check_knight_pair(geom, u, v)
    q = Fraction(geom.n - 1, 2)
    if (u[1] - q) * (v[1] - q) >= 0:
        return None
    return u[0] + Fraction(v[0] - u[0], v[1] - u[1]) * (q - u[1])


def crosses_axis_ray(geom: BoardGeometry, u: Cell, v: Cell, ray: str = "north") -> bool:
    """Does the open segment u -> v cross the given open axis ray from the pivot?

    On even boards every ray runs strictly between cells, so a segment
    either misses the ray or crosses it transversally.  On odd boards only
    the north ray is supported; it passes through cell centres and the
    convention is half-open: a segment departing from a cell on the ray
    counts as crossing, one arriving there does not.  Each pass of a path
    through a ray cell is then credited exactly once (to the departing
    arc), which keeps per-ray crossing totals of closed CCW cycles equal
    to their winding numbers.
    """
    if ray not in RAYS:
        raise ValueError(f"unknown ray {ray!r}; expected one of {RAYS}")
    _check_knight_pair(geom, u, v)
    odd = geom.n % 2 == 1
    if odd and ray != "north":
        raise ValueError("only the north ray is supported on odd boards")
    p, q = geom.pivot

    if ray in ("north", "south"):
        if odd and u[1] == q:
            return ray == "north" and u[0] < p
        if (u[1] - q) * (v[1] - q) >= 0:
            return False
        hrow = u[0] + Fraction(v[0] - u[0], v[1] - u[1]) * (q - u[1])
        return hrow < p if ray == "north" else hrow > p

    if (u[0] - p) * (v[0] - p) >= 0:
        return False
    hcol = u[1] + Fraction(v[1] - u[1], v[0] - u[0]) * (p - u[0])
    return hcol < q if ray == "west" else hcol > q


def crossing_weight(geom: BoardGeometry, u: Cell, v: Cell) -> int:
    """1 if the CCW arc u -> v crosses the north plumb-line, else 0.

    The north plumb-line is the open ray of points (x, q) with x < p,
    extending upward from the pivot (p, q).  Rejects pairs that are not
    arcs of the CCW digraph.
    """
    if not is_ccw(geom, u, v):
        raise ValueError(f"{tuple(u)} -> {tuple(v)} is not an arc of the CCW digraph")
    return int(crosses_axis_ray(geom, u, v, "north"))
