"""Probabilistic bits: exact distributions and column-stochastic matrices.

A state is a rational probability vector; dynamics are matrices whose
columns each sum to exactly 1, acting on column vectors from the left.
The family is closed under products but not under inverses, so it forms
a semigroup rather than a group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import MembershipError
from ..linalg import SMatrix, SVector, mat_vec

__all__ = [
    "ProbState",
    "stochastic_violation",
    "is_stochastic",
    "distribution_violation",
    "markov_step",
]


@dataclass(frozen=True)
class ProbState:
    """A probability distribution over basis states."""

    vector: SVector

    def __post_init__(self):
        violation = distribution_violation(self.vector)
        if violation is not None:
            raise MembershipError(violation)

    @property
    def length(self) -> int:
        return len(self.vector)


def distribution_violation(v: SVector) -> str | None:
    if v.instance.name != "probability":
        return f"instance {v.instance.name} is not the probability carrier"
    for i, x in enumerate(v.entries):
        if not 0 <= x <= 1:
            return f"entry {i} is {x}, outside [0, 1]"
    total = sum(v.entries, Fraction(0))
    if total != 1:
        return f"entries sum to {total}, expected exactly 1"
    return None


def stochastic_violation(m: SMatrix) -> str | None:
    """None if `m` is column-stochastic, else the reason it is not."""
    if m.instance.name != "probability":
        return f"instance {m.instance.name} is not the probability carrier"
    if m.rows != m.cols:
        return f"not square ({m.rows}x{m.cols})"
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if not 0 <= x <= 1:
                return f"entry ({i}, {j}) is {x}, outside [0, 1]"
    for j in range(m.cols):
        total = sum(m.column(j), Fraction(0))
        if total != 1:
            return f"column {j} sums to {total}, expected exactly 1"
    return None


def is_stochastic(m: SMatrix) -> bool:
    return stochastic_violation(m) is None


def markov_step(m: SMatrix, state: ProbState) -> ProbState:
    """One exact update of the distribution; closure is re-checked."""
    violation = stochastic_violation(m)
    if violation is not None:
        raise MembershipError(f"not a stochastic matrix: {violation}")
    return ProbState(mat_vec(m, state.vector))
