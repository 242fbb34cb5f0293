"""Independent brute-force verification machinery for desk-scale instances.

Everything here deliberately avoids the chain machinery so it can serve as
a second opinion on it:

* ``enumerate_vertices`` lists every 0-or-1/k pattern with at most k
  nonzeros per line, by direct enumeration;
* ``hull_membership`` decides, with an exact phase-one simplex over
  fractions, whether a matrix is a convex combination of a given vertex
  list, and returns a witness when it is;
* ``extreme_by_nullspace`` applies the definition of an extreme point:
  a member is extreme iff the homogeneous system "move only on middle
  entries, keep every full line sum fixed" has only the zero solution;
* the samplers generate reproducible members and vertices for tests.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import NamedTuple

from .errors import TooLargeError
from .matrix import Matrix, entry_cap, interior_cells, line_sums, require_bounded

ENUMERATION_CELL_LIMIT = 20

STRATEGIES = ("convex", "clamp")


class FeasibilityResult(NamedTuple):
    """Outcome of an exact hull-membership query.

    ``weights`` is a tuple of (vertex index, weight) pairs with positive
    weights summing to 1 when feasible, else None.
    """

    feasible: bool
    weights: tuple[tuple[int, Fraction], ...] | None


def _check_dims(m: int, n: int) -> None:
    for name, value in (("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def enumerate_vertices(m: int, n: int, k: int) -> tuple[Matrix, ...]:
    """All 0-or-1/k patterns with at most k nonzeros per row and column.

    Guarded to m*n <= 20 cells; the output order is lexicographic over the
    row-major 0/1 pattern.
    """
    _check_dims(m, n)
    cap = entry_cap(k)
    if m * n > ENUMERATION_CELL_LIMIT:
        raise TooLargeError(f"{m}x{n} exceeds the {ENUMERATION_CELL_LIMIT}-cell enumeration guard")
    row_patterns = [
        pattern for pattern in itertools.product((0, 1), repeat=n) if sum(pattern) <= k
    ]
    vertices: list[Matrix] = []

    def extend(rows: list[tuple[int, ...]], col_counts: tuple[int, ...]) -> None:
        if len(rows) == m:
            vertices.append(Matrix([[cap * bit for bit in row] for row in rows]))
            return
        for pattern in row_patterns:
            counts = tuple(c + bit for c, bit in zip(col_counts, pattern))
            if all(c <= k for c in counts):
                extend(rows + [pattern], counts)

    extend([], (0,) * n)
    return tuple(vertices)


def _phase_one_solve(
    columns: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Exact feasibility of columns @ x = rhs, x >= 0; returns x or None.

    Phase-one simplex over fractions: one artificial variable per row,
    minimize their sum, Bland's smallest-index rule for both the entering
    column and the leaving row, which rules out cycling.
    """
    height = len(rhs)
    width = len(columns)
    tableau: list[list[Fraction]] = []
    for i in range(height):
        row = [columns[j][i] for j in range(width)]
        b = rhs[i]
        if b < 0:
            row = [-value for value in row]
            b = -b
        row.extend(Fraction(int(i == a)) for a in range(height))
        row.append(b)
        tableau.append(row)
    basis = [width + i for i in range(height)]
    total_cols = width + height

    # Reduced costs for minimizing the artificial sum; artificial columns
    # start at zero (their column sum is 1, their cost is 1).
    cost = [Fraction(int(j >= width)) for j in range(total_cols)]
    objective = [
        sum(tableau[i][j] for i in range(height)) - cost[j] for j in range(total_cols)
    ]

    while True:
        entering = next((j for j in range(total_cols) if objective[j] > 0), None)
        if entering is None:
            break
        pivot_row = None
        best = None
        for i in range(height):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    pivot_row = i
        if pivot_row is None:
            raise AssertionError("phase-one objective cannot be unbounded")
        pivot = tableau[pivot_row][entering]
        tableau[pivot_row] = [value / pivot for value in tableau[pivot_row]]
        for i in range(height):
            if i != pivot_row and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [
                    value - factor * pivot_value
                    for value, pivot_value in zip(tableau[i], tableau[pivot_row])
                ]
        factor = objective[entering]
        objective = [
            value - factor * pivot_value
            for value, pivot_value in zip(objective, tableau[pivot_row][:-1])
        ]
        basis[pivot_row] = entering

    if any(basis[i] >= width and tableau[i][-1] != 0 for i in range(height)):
        return None
    solution = [Fraction(0)] * width
    for i in range(height):
        if basis[i] < width:
            solution[basis[i]] = tableau[i][-1]
    return solution


def hull_membership(matrix: Matrix, vertices: tuple[Matrix, ...]) -> FeasibilityResult:
    """Exact test whether the matrix is a convex combination of the vertices."""
    for vertex in vertices:
        if vertex.shape != matrix.shape:
            raise ValueError(f"dimension mismatch: vertex {vertex.shape} vs matrix {matrix.shape}")
    columns = [
        [value for row in vertex.rows for value in row] + [Fraction(1)]
        for vertex in vertices
    ]
    rhs = [value for row in matrix.rows for value in row] + [Fraction(1)]
    solution = _phase_one_solve(columns, rhs)
    if solution is None:
        return FeasibilityResult(False, None)
    weights = tuple((j, value) for j, value in enumerate(solution) if value != 0)
    return FeasibilityResult(True, weights)


def extreme_by_nullspace(matrix: Matrix, k: int) -> bool:
    """Definitional extremality check, independent of the chain machinery.

    A displacement d keeps matrix +/- eps*d inside the polytope for small
    eps iff d vanishes on every entry at 0 or 1/k and has zero sum along
    every row and column whose sum is exactly 1.  The matrix is extreme
    iff that homogeneous system forces d = 0.
    """
    require_bounded(matrix, k)
    cells = interior_cells(matrix, k)
    if not cells:
        return True
    index = {cell: pos for pos, cell in enumerate(cells)}
    sums = line_sums(matrix)
    equations: list[list[Fraction]] = []
    for i, total in enumerate(sums.row_sums):
        if total == 1:
            equation = [Fraction(0)] * len(cells)
            for (r, c), pos in index.items():
                if r == i:
                    equation[pos] = Fraction(1)
            equations.append(equation)
    for j, total in enumerate(sums.col_sums):
        if total == 1:
            equation = [Fraction(0)] * len(cells)
            for (r, c), pos in index.items():
                if c == j:
                    equation[pos] = Fraction(1)
            equations.append(equation)
    return _rank(equations, len(cells)) == len(cells)


def _rank(rows: list[list[Fraction]], width: int) -> int:
    """Rank by exact Gaussian elimination."""
    rows = [row[:] for row in rows]
    rank = 0
    for col in range(width):
        pivot_row = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [value / pivot for value in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [value - factor * p for value, p in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def sample_vertex(m: int, n: int, k: int, seed: int) -> Matrix:
    """Reproducible random vertex: visit cells in seeded random order and
    place 1/k with probability 1/2 wherever both line counts allow it."""
    _check_dims(m, n)
    cap = entry_cap(k)
    rng = random.Random(seed)
    order = [(i, j) for i in range(m) for j in range(n)]
    rng.shuffle(order)
    row_counts = [0] * m
    col_counts = [0] * n
    chosen = set()
    for i, j in order:
        if row_counts[i] < k and col_counts[j] < k and rng.getrandbits(1):
            chosen.add((i, j))
            row_counts[i] += 1
            col_counts[j] += 1
    return Matrix([[cap if (i, j) in chosen else 0 for j in range(n)] for i in range(m)])


def sample_member(m: int, n: int, k: int, seed: int, strategy: str = "convex") -> Matrix:
    """Reproducible random polytope member.

    ``convex`` draws up to 8 vertices and combines them with random
    positive weights on a 1/64 grid, so hull membership holds by
    construction.  ``clamp`` draws entries uniformly from the 1/(64k) grid
    up to the cap, then rescales rows and columns onto sum <= 1, which
    produces members with exactly tight lines.
    """
    _check_dims(m, n)
    cap = entry_cap(k)
    rng = random.Random(seed)
    if strategy == "convex":
        count = rng.randint(1, 8)
        if count == 1:
            weights = [Fraction(1)]
        else:
            cuts = sorted(rng.sample(range(1, 64), count - 1))
            bounds = [0] + cuts + [64]
            weights = [Fraction(b - a, 64) for a, b in zip(bounds, bounds[1:])]
        total = Matrix.zeros(m, n)
        for weight in weights:
            vertex = sample_vertex(m, n, k, rng.randrange(2**32))
            total = total + vertex.scale(weight)
        return total
    if strategy == "clamp":
        grid = [[Fraction(rng.randint(0, 64)) * cap / 64 for _ in range(n)] for _ in range(m)]
        for row in grid:
            total = sum(row)
            if total > 1:
                for j in range(n):
                    row[j] /= total
        for j in range(n):
            total = sum(row[j] for row in grid)
            if total > 1:
                for row in grid:
                    row[j] /= total
        return Matrix(grid)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
