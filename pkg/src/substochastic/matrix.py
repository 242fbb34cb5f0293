"""Exact rational matrices and the membership predicates of the polytope.

The objects of interest are m x n matrices with nonnegative entries whose
row and column sums are at most 1 (doubly substochastic), optionally with
every entry capped at 1/k for a positive integer k.  All arithmetic is done
with arbitrary-precision fractions so that membership, perturbation steps,
and decomposition certificates are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DomainError

Cell = tuple[int, int]


def as_fraction(value) -> Fraction:
    """Coerce ints, 'p/q' strings, and Fractions to an exact Fraction.

    Floats are rejected: a binary float is almost never the rational the
    caller meant, and the whole library is exact-only.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


class Matrix:
    """An immutable m x n grid of exact fractions.

    Instances compare by value and are hashable, so they can key dicts
    (the decomposer merges duplicate vertices that way).  Rows are stored
    as a tuple of tuples of Fraction.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(as_fraction(value) for value in row) for row in rows)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("all rows must have the same length")
        self.rows = grid

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)])

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows)
        return f"Matrix([{body}])"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def scale(self, factor) -> "Matrix":
        factor = as_fraction(factor)
        return Matrix([[value * factor for value in row] for row in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def _require_same_shape(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")


class LineSums(NamedTuple):
    row_sums: tuple[Fraction, ...]
    col_sums: tuple[Fraction, ...]


def line_sums(matrix: Matrix) -> LineSums:
    """Exact row and column sums of the matrix."""
    row_sums = tuple(sum(row, Fraction(0)) for row in matrix.rows)
    col_sums = tuple(sum(col, Fraction(0)) for col in zip(*matrix.rows))
    return LineSums(row_sums, col_sums)


def is_doubly_substochastic(matrix: Matrix) -> bool:
    """True iff every entry is >= 0 and every line sum is <= 1."""
    if any(value < 0 for row in matrix.rows for value in row):
        return False
    sums = line_sums(matrix)
    return all(s <= 1 for s in sums.row_sums) and all(s <= 1 for s in sums.col_sums)


def entry_cap(k: int) -> Fraction:
    """The per-entry cap 1/k for a validated positive integer k."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return Fraction(1, k)


def is_bounded_substochastic(matrix: Matrix, k: int) -> bool:
    """True iff the matrix is doubly substochastic with every entry in [0, 1/k]."""
    cap = entry_cap(k)
    if any(value > cap for row in matrix.rows for value in row):
        return False
    return is_doubly_substochastic(matrix)


def is_vertex(matrix: Matrix, k: int) -> bool:
    """True iff the matrix is doubly substochastic and every entry is 0 or 1/k.

    Equivalently the matrix is a 0/1 pattern scaled by 1/k with at most k
    nonzeros in any line; these patterns are exactly the extreme points of
    the capped polytope.
    """
    cap = entry_cap(k)
    if any(value != 0 and value != cap for row in matrix.rows for value in row):
        return False
    return is_doubly_substochastic(matrix)


def require_bounded(matrix: Matrix, k: int) -> None:
    """Raise DomainError unless the matrix lies in the capped polytope."""
    if not is_bounded_substochastic(matrix, k):
        raise DomainError(f"matrix is not doubly substochastic with entries in [0, 1/{k}]")


def middle_entries(matrix: Matrix, k: int) -> tuple[Cell, ...]:
    """Positions whose entry lies strictly between 0 and 1/k, in row-major order.

    The matrix must lie in the capped polytope.  A middle line is a row or
    column containing at least one such position; the result is empty
    exactly when the matrix is a vertex.
    """
    require_bounded(matrix, k)
    return interior_cells(matrix, k)


def interior_cells(matrix: Matrix, k: int) -> tuple[Cell, ...]:
    """Row-major positions with 0 < entry < 1/k, without the membership check."""
    cap = entry_cap(k)
    return tuple(
        (i, j)
        for i, row in enumerate(matrix.rows)
        for j, value in enumerate(row)
        if 0 < value < cap
    )
