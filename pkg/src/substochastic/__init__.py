"""Exact tools for doubly substochastic matrices with entries capped at 1/k.

The matrices with nonnegative entries, line sums at most 1, and every
entry at most 1/k form a polytope whose extreme points are exactly the
members with all entries 0 or 1/k.  This package decides membership,
tests extremality two independent ways, decomposes any member into an
exact convex combination of those vertices, and verifies the resulting
certificates, all in arbitrary-precision rational arithmetic.
"""

from .chains import (
    Chain,
    ChainKind,
    DirectionMatrix,
    MiddleLineCase,
    StepLimits,
    classify_middle_lines,
    direction,
    find_chain,
    perturb,
    step_limits,
)
from .decompose import (
    Decomposition,
    VerificationResult,
    WalkStep,
    WalkTrace,
    decompose,
    is_extreme,
    replay_walk,
    verify,
    walk_to_vertex,
)
from .errors import (
    DirectionError,
    DomainError,
    InternalError,
    ParseError,
    StepTooLargeError,
    TooLargeError,
)
from .matrix import (
    LineSums,
    Matrix,
    is_bounded_substochastic,
    is_doubly_substochastic,
    is_vertex,
    line_sums,
    middle_entries,
)
from .oracle import (
    FeasibilityResult,
    enumerate_vertices,
    extreme_by_nullspace,
    hull_membership,
    sample_member,
    sample_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "ChainKind",
    "Decomposition",
    "DirectionError",
    "DirectionMatrix",
    "DomainError",
    "FeasibilityResult",
    "InternalError",
    "LineSums",
    "Matrix",
    "MiddleLineCase",
    "ParseError",
    "StepLimits",
    "StepTooLargeError",
    "TooLargeError",
    "VerificationResult",
    "WalkStep",
    "WalkTrace",
    "classify_middle_lines",
    "decompose",
    "direction",
    "enumerate_vertices",
    "extreme_by_nullspace",
    "find_chain",
    "hull_membership",
    "is_bounded_substochastic",
    "is_doubly_substochastic",
    "is_extreme",
    "is_vertex",
    "line_sums",
    "middle_entries",
    "perturb",
    "replay_walk",
    "sample_member",
    "sample_vertex",
    "step_limits",
    "verify",
    "walk_to_vertex",
]
