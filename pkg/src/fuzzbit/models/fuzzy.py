"""Fuzzy bits: states with a vanishing minimum, gates with vanishing columns.

A fuzzy register of length N is a [0, 1] vector whose minimum entry is 0,
together with the adjoined all-ones vector (the zero of the ambient
semiring module).  Gates are N x N matrices over the same carrier in which
every column attains 0, plus the all-ones matrix.  The matrix action
(A v)_i = min_k (A_ik (+) v_k) uses the min/truncated-sum semiring, so the
identity matrix has 0 on the diagonal and 1 elsewhere, and the coordinate
swap J = [[1, 0], [0, 1]] is an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..algebra import FUZZ_MV, ONE, ZERO, neg
from ..errors import MembershipError
from ..linalg import SMatrix, SVector, identity, kron_vec, mat_vec

__all__ = [
    "FuzzyState",
    "fuzzy_state_violation",
    "is_fuzzy_state",
    "fuzzy_gate_violation",
    "is_fuzzy_gate",
    "fuzzy_apply",
    "fuzzy_pointwise_product",
    "fuzzy_tensor",
    "fuzzy_basis_ket",
    "complement",
    "fuzzy_identity",
    "fuzzy_zero_gate",
    "fuzzy_not",
    "fuzzy_permutation",
]


@dataclass(frozen=True)
class FuzzyState:
    vector: SVector

    def __post_init__(self):
        violation = fuzzy_state_violation(self.vector)
        if violation is not None:
            raise MembershipError(violation)

    @property
    def length(self) -> int:
        return len(self.vector)


def fuzzy_state_violation(v: SVector) -> str | None:
    if v.instance.name != "fuzz-mv":
        return f"instance {v.instance.name} is not the fuzz-mv carrier"
    low = min(v.entries)
    if low == ZERO or all(x == ONE for x in v.entries):
        return None
    return f"minimum entry is {low}, expected 0 (or all entries 1)"


def is_fuzzy_state(v: SVector) -> bool:
    return fuzzy_state_violation(v) is None


def fuzzy_gate_violation(m: SMatrix) -> str | None:
    """None for column-wise vanishing minima or the all-ones matrix."""
    if m.instance.name != "fuzz-mv":
        return f"instance {m.instance.name} is not the fuzz-mv carrier"
    if m.rows != m.cols:
        return f"not square ({m.rows}x{m.cols})"
    if all(x == ONE for row in m.entries for x in row):
        return None
    for j in range(m.cols):
        low = min(m.column(j))
        if low != ZERO:
            return f"column {j} has minimum {low}, expected 0"
    return None


def is_fuzzy_gate(m: SMatrix) -> bool:
    return fuzzy_gate_violation(m) is None


def fuzzy_apply(m: SMatrix, state: FuzzyState) -> FuzzyState:
    """Left action of a fuzzy gate; membership of the result is re-checked."""
    violation = fuzzy_gate_violation(m)
    if violation is not None:
        raise MembershipError(f"not a fuzzy gate: {violation}")
    return FuzzyState(mat_vec(m, state.vector))


def fuzzy_pointwise_product(u: FuzzyState, v: FuzzyState) -> FuzzyState:
    """Componentwise min; the semigroup product on fuzzy states."""
    if u.length != v.length:
        raise ValueError("length mismatch")
    return FuzzyState(SVector(FUZZ_MV, tuple(
        min(x, y) for x, y in zip(u.vector.entries, v.vector.entries))))


def fuzzy_tensor(states: Sequence[FuzzyState]) -> FuzzyState:
    """Kronecker product of fuzzy states, first factor most significant."""
    if not states:
        raise ValueError("empty tensor product")
    acc = states[0].vector
    for st in states[1:]:
        acc = kron_vec(acc, st.vector)
    return FuzzyState(acc)


def fuzzy_basis_ket(bits: Sequence[int]) -> FuzzyState:
    """|b_{n-1} ... b_0> with |0> = (0, 1) and |1> = (1, 0), leftmost first."""
    if not bits:
        raise ValueError("empty bit list")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    singles = [FuzzyState(SVector(FUZZ_MV, (ONE, ZERO) if b else (ZERO, ONE)))
               for b in bits]
    return fuzzy_tensor(singles)


def complement(v: SVector) -> SVector:
    """Entrywise 1 - x.  Not closed on fuzzy states: (0, 1/2) maps to (1, 1/2)."""
    if v.instance.name != "fuzz-mv":
        raise ValueError("complement is defined on the fuzz-mv carrier")
    return SVector(FUZZ_MV, tuple(neg(x) for x in v.entries))


def fuzzy_identity(n: int) -> SMatrix:
    """Diagonal 0, off-diagonal 1: the identity of the fuzzy gate monoid."""
    return identity(FUZZ_MV, n)


def fuzzy_zero_gate(n: int) -> SMatrix:
    """The all-ones matrix; absorbing for the gate product."""
    return SMatrix(FUZZ_MV, ((ONE,) * n,) * n)


def fuzzy_not() -> SMatrix:
    """J = [[1, 0], [0, 1]]: swaps the two coordinates; J o J is the identity."""
    return SMatrix(FUZZ_MV, ((ONE, ZERO), (ZERO, ONE)))


def fuzzy_permutation(perm: Sequence[int]) -> SMatrix:
    """The fuzzy gate that permutes coordinates: 0 at (perm[j], j), 1 elsewhere."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    return SMatrix(FUZZ_MV, tuple(
        tuple(ZERO if perm[j] == i else ONE for j in range(n)) for i in range(n)))
