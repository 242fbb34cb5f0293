"""Alternating chains through middle entries and their exact perturbations.

A chain is a sequence of distinct middle entries (entries strictly between
0 and the cap 1/k) in which consecutive cells share alternately a row and a
column.  Assigning alternating +1/-1 signs along a chain gives a direction
in which the matrix can be moved both ways while staying inside the
polytope:

* a loop closes back on itself, so every line picks up equally many +1s
  and -1s and no line sum changes;
* an open chain starts and ends on lines that contain a single middle
  entry, so only those two endpoint line sums move, and they sit strictly
  between 0 and 1 (a line with exactly one middle entry cannot sum to a
  multiple of 1/k).

``step_limits`` replaces "some small enough step" with the exact largest
steps in both directions.  At the largest step an entry bound always binds
no later than any line-sum bound, so at least one middle entry reaches 0 or
1/k and the count of middle entries strictly drops; that is what makes the
vertex walk in :mod:`substochastic.decompose` terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .errors import DirectionError, StepTooLargeError
from .matrix import (
    Cell,
    Matrix,
    as_fraction,
    entry_cap,
    interior_cells,
    is_bounded_substochastic,
    line_sums,
    require_bounded,
)


class MiddleLineCase(Enum):
    """Shape of the middle-entry structure, which fixes where a walk starts."""

    NO_MIDDLE = "no-middle"
    ALL_MULTIPLE = "all-multiple"
    HAS_SINGLETON = "has-singleton"


class ChainKind(Enum):
    LOOP = "loop"
    OPEN = "open"


@dataclass(frozen=True)
class Chain:
    """An alternating walk over middle entries.

    Loops have an even number (>= 4) of cells and close cyclically; open
    chains may have any length >= 1 and end on singleton middle lines.
    """

    kind: ChainKind
    cells: tuple[Cell, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("chain needs at least one cell")
        if self.kind is ChainKind.LOOP and (len(self.cells) < 4 or len(self.cells) % 2):
            raise ValueError("a loop has an even number of cells, at least 4")

    @property
    def is_loop(self) -> bool:
        return self.kind is ChainKind.LOOP


@dataclass(frozen=True)
class DirectionMatrix:
    """A -1/0/+1 sign pattern, nonzero exactly on a chain's cells."""

    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.signs or not self.signs[0]:
            raise ValueError("direction needs at least one row and one column")
        width = len(self.signs[0])
        for row in self.signs:
            if len(row) != width:
                raise ValueError("all sign rows must have the same length")
            for value in row:
                if value not in (-1, 0, 1):
                    raise ValueError(f"signs must be -1, 0, or +1, got {value!r}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.signs), len(self.signs[0]))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.signs)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.signs))


class StepLimits(NamedTuple):
    """Largest exact steps keeping matrix +/- step * direction in the polytope."""

    plus: Fraction
    minus: Fraction


def _middle_maps(matrix: Matrix, k: int) -> tuple[list[list[int]], list[list[int]]]:
    """Middle columns per row and middle rows per column, ascending."""
    by_row: list[list[int]] = [[] for _ in range(matrix.m)]
    by_col: list[list[int]] = [[] for _ in range(matrix.n)]
    for i, j in interior_cells(matrix, k):
        by_row[i].append(j)
        by_col[j].append(i)
    return by_row, by_col


def classify_middle_lines(matrix: Matrix, k: int) -> MiddleLineCase:
    """Whether there are no middle entries, a singleton middle line, or neither.

    A singleton middle line (a row or column containing exactly one middle
    entry) forces any chain through it to stop there, so walks start from
    one when it exists; otherwise every middle line branches and the walk
    must close into a loop.
    """
    require_bounded(matrix, k)
    by_row, by_col = _middle_maps(matrix, k)
    counts = [len(cells) for cells in by_row + by_col if cells]
    if not counts:
        return MiddleLineCase.NO_MIDDLE
    if any(count == 1 for count in counts):
        return MiddleLineCase.HAS_SINGLETON
    return MiddleLineCase.ALL_MULTIPLE


def find_chain(matrix: Matrix, k: int) -> Chain | None:
    """Find a loop or open chain of middle entries, or None on a vertex.

    The walk is deterministic: it starts at the unique middle entry of the
    lowest-index singleton middle column (then singleton row) when one
    exists, otherwise at the row-major-first middle entry; it scans rows
    and columns alternately, always moving to the unvisited middle entry
    with the smallest index.  The first time a scanned line contains an
    already-visited entry other than the current one, the walk closes a
    loop anchored at the latest-visited such entry; scanning a line with
    no other middle entries ends an open chain.
    """
    require_bounded(matrix, k)
    by_row, by_col = _middle_maps(matrix, k)
    if not any(by_row):
        return None

    singleton_col = next((j for j, rows in enumerate(by_col) if len(rows) == 1), None)
    singleton_row = next((i for i, cols in enumerate(by_row) if len(cols) == 1), None)
    if singleton_col is not None:
        start = (by_col[singleton_col][0], singleton_col)
        scan_row = True
    elif singleton_row is not None:
        start = (singleton_row, by_row[singleton_row][0])
        scan_row = False
    else:
        first_row = next(i for i, cols in enumerate(by_row) if cols)
        start = (first_row, by_row[first_row][0])
        scan_row = True

    visited = [start]
    position = {start: 0}
    while True:
        r, c = visited[-1]
        if scan_row:
            candidates = [(r, j) for j in by_row[r] if j != c]
        else:
            candidates = [(i, c) for i in by_col[c] if i != r]
        seen = [cell for cell in candidates if cell in position]
        if seen:
            anchor = max(seen, key=position.__getitem__)
            return Chain(ChainKind.LOOP, tuple(visited[position[anchor]:]))
        if candidates:
            nxt = candidates[0]
            position[nxt] = len(visited)
            visited.append(nxt)
            scan_row = not scan_row
            continue
        return Chain(ChainKind.OPEN, tuple(visited))


def direction(chain: Chain, shape: tuple[int, int]) -> DirectionMatrix:
    """Alternating sign pattern for the chain, +1 on its first cell."""
    m, n = shape
    signs = [[0] * n for _ in range(m)]
    sign = 1
    for r, c in chain.cells:
        if not (0 <= r < m and 0 <= c < n):
            raise ValueError(f"chain cell {(r, c)} outside a {m}x{n} matrix")
        if signs[r][c] != 0:
            raise ValueError(f"chain revisits cell {(r, c)}")
        signs[r][c] = sign
        sign = -sign
    return DirectionMatrix(tuple(tuple(row) for row in signs))


def step_limits(matrix: Matrix, k: int, direction_matrix: DirectionMatrix) -> StepLimits:
    """Exact largest steps in both orientations of the direction.

    ``plus`` is the largest eps with matrix + eps * direction still in the
    polytope, ``minus`` the largest eps for the opposite orientation.  Both
    are strictly positive for any direction built from a real chain.
    """
    require_bounded(matrix, k)
    if direction_matrix.shape != matrix.shape:
        raise ValueError(f"shape mismatch: {direction_matrix.shape} vs {matrix.shape}")
    cap = entry_cap(k)
    signs = direction_matrix.signs
    nonzero = [
        (i, j) for i in range(matrix.m) for j in range(matrix.n) if signs[i][j] != 0
    ]
    if not nonzero:
        raise DirectionError("direction has no nonzero signs")
    for i, j in nonzero:
        if not 0 < matrix.rows[i][j] < cap:
            raise DirectionError(f"direction is nonzero at {(i, j)}, which is not a middle entry")

    sums = line_sums(matrix)
    sign_rows = direction_matrix.row_sums()
    sign_cols = direction_matrix.col_sums()

    def largest(orientation: int) -> Fraction:
        caps = []
        for i, j in nonzero:
            if signs[i][j] * orientation > 0:
                caps.append(cap - matrix.rows[i][j])
            else:
                caps.append(matrix.rows[i][j])
        for total, rate in zip(sums.row_sums + sums.col_sums, sign_rows + sign_cols):
            rate *= orientation
            if rate > 0:
                caps.append(Fraction(1 - total, rate))
        return min(caps)

    return StepLimits(largest(1), largest(-1))


def perturb(matrix: Matrix, direction_matrix: DirectionMatrix, eps, k: int) -> Matrix:
    """matrix + eps * direction, entrywise; eps may be negative.

    Raises StepTooLargeError when the result leaves the polytope, i.e. when
    eps is outside [-minus, +plus] of ``step_limits``.
    """
    if direction_matrix.shape != matrix.shape:
        raise ValueError(f"shape mismatch: {direction_matrix.shape} vs {matrix.shape}")
    eps = as_fraction(eps)
    moved = Matrix(
        [
            [value + eps * sign for value, sign in zip(row, sign_row)]
            for row, sign_row in zip(matrix.rows, direction_matrix.signs)
        ]
    )
    if not is_bounded_substochastic(moved, k):
        raise StepTooLargeError(f"step {eps} leaves the polytope")
    return moved
