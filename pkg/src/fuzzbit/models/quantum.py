"""Qubits: unit-norm complex state vectors, unitary gates, seeded measurement.

All comparisons use the package-wide absolute tolerance of 1e-9 per
component.  Measurement is reproducible: a 64-bit seed is mixed by the
splitmix64 finalizer into one uniform double, which is inverted through
the cumulative distribution of squared amplitude magnitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..algebra import COMPLEX, COMPLEX_TOL
from ..errors import MembershipError
from ..linalg import SMatrix, SVector

__all__ = [
    "QuantumState",
    "state_norm_violation",
    "is_unitary",
    "unitary_violation",
    "quantum_gate",
    "QUANTUM_GATE_NAMES",
    "splitmix64",
    "measure",
]

_H = 1.0 / math.sqrt(2.0)

_GATES = {
    "X": ((0j, 1 + 0j), (1 + 0j, 0j)),
    "H": ((_H + 0j, _H + 0j), (_H + 0j, -_H + 0j)),
    "Z": ((1 + 0j, 0j), (0j, -1 + 0j)),
    "CNOT": ((1 + 0j, 0j, 0j, 0j),
             (0j, 1 + 0j, 0j, 0j),
             (0j, 0j, 0j, 1 + 0j),
             (0j, 0j, 1 + 0j, 0j)),
}

QUANTUM_GATE_NAMES = tuple(_GATES)


@dataclass(frozen=True)
class QuantumState:
    """A complex amplitude vector of norm 1 (within tolerance)."""

    vector: SVector

    def __post_init__(self):
        violation = state_norm_violation(self.vector)
        if violation is not None:
            raise MembershipError(violation)

    @property
    def length(self) -> int:
        return len(self.vector)

    def probabilities(self) -> tuple[float, ...]:
        return tuple(abs(a) ** 2 for a in self.vector.entries)


def state_norm_violation(v: SVector, tol: float = COMPLEX_TOL) -> str | None:
    if v.instance.name != "complex":
        return f"instance {v.instance.name} is not the complex carrier"
    for i, a in enumerate(v.entries):
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            return f"entry {i} is not finite"
    norm_sq = sum(abs(a) ** 2 for a in v.entries)
    if abs(norm_sq - 1.0) > tol:
        return f"squared norm is {norm_sq!r}, expected 1 within {tol}"
    return None


def unitary_violation(m: SMatrix, tol: float = COMPLEX_TOL) -> str | None:
    """None if the conjugate transpose inverts `m` within tolerance."""
    if m.instance.name != "complex":
        return f"instance {m.instance.name} is not the complex carrier"
    if m.rows != m.cols:
        return f"not square ({m.rows}x{m.cols})"
    n = m.rows
    for i in range(n):
        for j in range(n):
            acc = sum(m.entries[k][i].conjugate() * m.entries[k][j] for k in range(n))
            want = 1.0 if i == j else 0.0
            if abs(acc.real - want) > tol or abs(acc.imag) > tol:
                return f"columns {i} and {j} are not orthonormal (deviation {abs(acc - want):.3e})"
    return None


def is_unitary(m: SMatrix, tol: float = COMPLEX_TOL) -> bool:
    return unitary_violation(m, tol) is None


def quantum_gate(name: str) -> SMatrix:
    """One of the named gates X, H, Z, CNOT as a complex matrix."""
    try:
        return SMatrix(COMPLEX, _GATES[name])
    except KeyError:
        raise ValueError(f"unknown quantum gate {name!r}") from None


_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> int:
    """The splitmix64 finalizer: one 64-bit mix of the seed."""
    z = (seed + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def measure(state: QuantumState, seed: int) -> int:
    """Sample a basis index from |amplitude|^2 via one seeded uniform draw.

    The draw is (splitmix64(seed) >> 11) / 2^53; the inverse CDF walk
    resolves a draw landing exactly on a boundary to the lower index.
    """
    u = (splitmix64(seed & _MASK64) >> 11) * 2.0 ** -53
    acc = 0.0
    fallback = 0
    for i, a in enumerate(state.vector.entries):
        p = abs(a) ** 2
        if p == 0.0:
            continue  # an empty interval can never be drawn
        acc += p
        fallback = i
        if u <= acc:
            return i
    return fallback
