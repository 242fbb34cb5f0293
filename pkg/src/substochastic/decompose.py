"""Walks to vertices, extremality, and exact convex-combination certificates.

Any matrix in the capped polytope can be written as a convex combination of
0-or-1/k patterns.  The constructive route implemented here:

1.  ``walk_to_vertex`` repeatedly finds a chain and applies the largest
    forward step; each step clears at least one middle entry, so a vertex
    is reached in at most m*n steps.
2.  ``decompose`` peels that vertex off: it extends the ray from the
    vertex through the matrix until a new constraint of the polytope
    becomes tight, splits the matrix as a convex combination of the vertex
    and the landing point, and repeats on the landing point.  Constraints
    that are tight never come loose along the way, so each round pins at
    least one more and the term count stays at most m*n + m + n + 1.

``verify`` re-checks a finished certificate using only the membership
predicates and exact arithmetic; ``decompose`` runs it before returning so
a latent bug fails loudly instead of producing a bad certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import Chain, direction, find_chain, perturb, step_limits
from .errors import InternalError
from .matrix import Matrix, entry_cap, is_vertex, line_sums, require_bounded


@dataclass(frozen=True)
class WalkStep:
    chain: Chain
    eps: Fraction


@dataclass(frozen=True)
class WalkTrace:
    """Audit trail of a vertex walk; replaying the steps reproduces terminal."""

    steps: tuple[WalkStep, ...]
    terminal: Matrix


@dataclass(frozen=True)
class Decomposition:
    """A weighted list of vertices whose exact sum is the base matrix."""

    base: Matrix
    terms: tuple[tuple[Fraction, Matrix], ...]


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_extreme(matrix: Matrix, k: int) -> bool:
    """True iff the matrix is an extreme point of the capped polytope.

    Implemented through the chain machinery: a matrix admits no chain
    exactly when every entry is 0 or 1/k.  The independent definitional
    check lives in :func:`substochastic.oracle.extreme_by_nullspace`.
    """
    return find_chain(matrix, k) is None


def walk_to_vertex(matrix: Matrix, k: int) -> tuple[Matrix, WalkTrace]:
    """Drive the matrix to a vertex by repeated largest-step perturbations."""
    require_bounded(matrix, k)
    steps = []
    current = matrix
    limit = matrix.m * matrix.n
    while True:
        chain = find_chain(current, k)
        if chain is None:
            break
        if len(steps) >= limit:
            raise InternalError("vertex walk exceeded the middle-entry budget")
        d = direction(chain, current.shape)
        limits = step_limits(current, k, d)
        current = perturb(current, d, limits.plus, k)
        steps.append(WalkStep(chain, limits.plus))
    return current, WalkTrace(tuple(steps), current)


def replay_walk(start: Matrix, trace: WalkTrace, k: int) -> Matrix:
    """Re-apply a recorded walk; returns the final matrix."""
    current = start
    for step in trace.steps:
        current = perturb(current, direction(step.chain, current.shape), step.eps, k)
    return current


def _ray_extension(vertex: Matrix, through: Matrix, k: int) -> Fraction:
    """Largest mu with vertex + mu * (through - vertex) still in the polytope."""
    cap = entry_cap(k)
    delta = through - vertex
    ratios = []
    for v_row, d_row in zip(vertex.rows, delta.rows):
        for v, d in zip(v_row, d_row):
            if d > 0:
                ratios.append((cap - v) / d)
            elif d < 0:
                ratios.append(v / -d)
    vertex_sums = line_sums(vertex)
    delta_sums = line_sums(delta)
    for total, rate in zip(
        vertex_sums.row_sums + vertex_sums.col_sums,
        delta_sums.row_sums + delta_sums.col_sums,
    ):
        if rate > 0:
            ratios.append((1 - total) / rate)
    if not ratios:
        raise InternalError("ray away from a vertex has no binding constraint")
    return min(ratios)


def decompose(matrix: Matrix, k: int) -> Decomposition:
    """Exact convex-combination certificate for a polytope member.

    Deterministic for a fixed input; the output is one valid certificate,
    not a canonical one.  Self-verifies before returning.
    """
    require_bounded(matrix, k)
    weights: dict[Matrix, Fraction] = {}
    scale = Fraction(1)
    current = matrix
    rounds = matrix.m * matrix.n + matrix.m + matrix.n + 1
    for _ in range(rounds):
        if is_vertex(current, k):
            break
        vertex, _ = walk_to_vertex(current, k)
        mu = _ray_extension(vertex, current, k)
        if mu <= 1:
            raise InternalError("ray extension failed to move past the current matrix")
        weights[vertex] = weights.get(vertex, Fraction(0)) + scale * (1 - Fraction(1) / mu)
        scale /= mu
        current = vertex + (current - vertex).scale(mu)
    else:
        raise InternalError("decomposition exceeded the active-constraint budget")
    weights[current] = weights.get(current, Fraction(0)) + scale

    result = Decomposition(matrix, tuple((w, v) for v, w in weights.items()))
    check = verify(result, k)
    if not check.ok:
        raise InternalError(f"self-verification failed: {check.reason}")
    return result


def verify(decomposition: Decomposition, k: int) -> VerificationResult:
    """Re-check every certificate invariant with exact arithmetic.

    Independent of how the certificate was produced: uses only the core
    membership predicates.  Returns ok=False with the first violated
    invariant's reason.
    """
    entry_cap(k)
    base = decomposition.base
    terms = decomposition.terms
    if not terms:
        return VerificationResult(False, "decomposition has no terms")
    for _, vertex in terms:
        if vertex.shape != base.shape:
            return VerificationResult(False, "vertex shape does not match the base matrix")
    for weight, _ in terms:
        if weight <= 0:
            return VerificationResult(False, "weight is not positive")
    if sum(weight for weight, _ in terms) != 1:
        return VerificationResult(False, "weights do not sum to 1")
    for _, vertex in terms:
        if not is_vertex(vertex, k):
            return VerificationResult(False, f"term is not a 0-or-1/{k} substochastic pattern")
    if len({vertex for _, vertex in terms}) != len(terms):
        return VerificationResult(False, "duplicate vertices in the term list")
    total = Matrix.zeros(base.m, base.n)
    for weight, vertex in terms:
        total = total + vertex.scale(weight)
    if total != base:
        return VerificationResult(False, "terms do not reconstruct the base matrix")
    if len(terms) > base.m * base.n + base.m + base.n + 1:
        return VerificationResult(False, "more terms than the active-constraint bound allows")
    return VerificationResult(True, None)
