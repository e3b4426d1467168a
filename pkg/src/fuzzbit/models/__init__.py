"""The four computation models and their shared gate descriptor.

Each model pairs a scalar carrier with a membership predicate for states
and for gates:

    classical   boolean      basis vectors        permutation matrices
    stochastic  probability  distributions        column-stochastic matrices
    quantum     complex      unit-norm vectors    unitary matrices
    fuzzy       fuzz-mv      min-0 (or all-ones)  column-min-0 (or all-ones)

Named gates visible to the circuit DSL are registered here.  Classical
gates that are not invertible (AND, OR, XOR, NAND, NOR, FANOUT) appear
through their reversible embedding: one extra target wire receives
y XOR f(x), so every registered matrix passes its model's predicate.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from ..algebra import (
    BOOLEAN,
    COMPLEX,
    FUZZ_MV,
    PROBABILITY,
    SemiringInstance,
)
from ..errors import MembershipError
from ..linalg import SMatrix, SVector
from . import classical, fuzzy, quantum, stochastic
from .classical import (
    ClassicalState,
    TruthTable,
    classical_gate,
    is_permutation_matrix,
    matrix_from_permutation,
    reversible_embed,
    synthesize_circuit,
)
from .fuzzy import (
    FuzzyState,
    fuzzy_apply,
    fuzzy_basis_ket,
    fuzzy_pointwise_product,
    fuzzy_tensor,
    is_fuzzy_gate,
    is_fuzzy_state,
)
from .quantum import QuantumState, is_unitary, measure, quantum_gate
from .stochastic import ProbState, is_stochastic, markov_step

__all__ = [
    "MODEL_NAMES",
    "GateDescriptor",
    "model_instance",
    "builtin_gate",
    "builtin_gate_names",
    "gate_violation",
    "state_violation",
    "gate_descriptor_from_matrix",
    "classical",
    "stochastic",
    "quantum",
    "fuzzy",
    "ClassicalState",
    "TruthTable",
    "classical_gate",
    "is_permutation_matrix",
    "matrix_from_permutation",
    "reversible_embed",
    "synthesize_circuit",
    "ProbState",
    "is_stochastic",
    "markov_step",
    "QuantumState",
    "is_unitary",
    "quantum_gate",
    "measure",
    "FuzzyState",
    "is_fuzzy_state",
    "is_fuzzy_gate",
    "fuzzy_apply",
    "fuzzy_pointwise_product",
    "fuzzy_tensor",
    "fuzzy_basis_ket",
]

MODEL_NAMES = ("classical", "stochastic", "quantum", "fuzzy")

_INSTANCE_OF = {
    "classical": BOOLEAN,
    "stochastic": PROBABILITY,
    "quantum": COMPLEX,
    "fuzzy": FUZZ_MV,
}


def model_instance(model: str) -> SemiringInstance:
    try:
        return _INSTANCE_OF[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}") from None


@dataclass(frozen=True)
class GateDescriptor:
    """A gate usable in circuits: its model, name, wire arity and matrix."""

    model: str
    name: str
    arity: int
    matrix: SMatrix

    def __post_init__(self):
        if self.matrix.rows != self.matrix.cols:
            raise ValueError("gate matrix must be square")
        if self.matrix.rows != 1 << self.arity:
            raise ValueError(
                f"arity {self.arity} needs a {1 << self.arity}-dimensional matrix")
        violation = gate_violation(self.model, self.matrix)
        if violation is not None:
            raise MembershipError(f"{self.model} gate {self.name!r}: {violation}")


def gate_violation(model: str, m: SMatrix) -> str | None:
    """The model's gate membership predicate, as a reason string or None."""
    if model == "classical":
        return classical.permutation_violation(m)
    if model == "stochastic":
        return stochastic.stochastic_violation(m)
    if model == "quantum":
        return quantum.unitary_violation(m)
    if model == "fuzzy":
        return fuzzy.fuzzy_gate_violation(m)
    raise ValueError(f"unknown model {model!r}")


def state_violation(model: str, v: SVector) -> str | None:
    """The model's state membership predicate applied to a column vector."""
    if model == "classical":
        ones = [i for i, x in enumerate(v.entries) if x == 1]
        if v.instance.name != "boolean":
            return f"instance {v.instance.name} is not the boolean carrier"
        if any(x != 0 and x != 1 for x in v.entries):
            return "entries must be 0 or 1"
        if len(ones) != 1:
            return f"basis vector needs exactly one 1, found {len(ones)}"
        return None
    if model == "stochastic":
        return stochastic.distribution_violation(v)
    if model == "quantum":
        return quantum.state_norm_violation(v)
    if model == "fuzzy":
        return fuzzy.fuzzy_state_violation(v)
    raise ValueError(f"unknown model {model!r}")


def _swap_permutation() -> list[int]:
    return [0, 2, 1, 3]  # exchanges the two bits of a 2-bit index


@functools.lru_cache(maxsize=None)
def builtin_gate(model: str, name: str) -> GateDescriptor:
    """Look up a named gate; raises ValueError for names the model lacks."""
    if model == "classical":
        if name == "NOT":
            matrix = matrix_from_permutation([1, 0])
        elif name == "CNOT":
            matrix = matrix_from_permutation([0, 1, 3, 2])
        elif name == "SWAP":
            matrix = matrix_from_permutation(_swap_permutation())
        elif name in ("AND", "OR", "XOR", "NAND", "NOR"):
            matrix = reversible_embed(classical_gate(name))
        elif name == "FANOUT":
            # copying onto a 0 ancilla is the embedding of the identity table
            matrix = reversible_embed(TruthTable(1, 1, (0, 1)))
        else:
            raise ValueError(f"unknown classical gate {name!r}")
    elif model == "stochastic":
        if name == "NOT":
            matrix = matrix_from_permutation([1, 0], PROBABILITY)
        elif name == "CNOT":
            matrix = matrix_from_permutation([0, 1, 3, 2], PROBABILITY)
        elif name == "SWAP":
            matrix = matrix_from_permutation(_swap_permutation(), PROBABILITY)
        else:
            raise ValueError(f"unknown stochastic gate {name!r}")
    elif model == "quantum":
        if name in quantum.QUANTUM_GATE_NAMES:
            matrix = quantum_gate(name)
        elif name == "SWAP":
            perm = _swap_permutation()
            matrix = SMatrix(COMPLEX, tuple(
                tuple(complex(1) if perm[j] == i else complex(0) for j in range(4))
                for i in range(4)))
        else:
            raise ValueError(f"unknown quantum gate {name!r}")
    elif model == "fuzzy":
        if name == "FID":
            matrix = fuzzy.fuzzy_identity(2)
        elif name == "FNOT":
            matrix = fuzzy.fuzzy_not()
        elif name == "FZERO":
            matrix = fuzzy.fuzzy_zero_gate(2)
        elif name == "FSWAP":
            matrix = fuzzy.fuzzy_permutation(_swap_permutation())
        else:
            raise ValueError(f"unknown fuzzy gate {name!r}")
    else:
        raise ValueError(f"unknown model {model!r}")
    arity = int(math.log2(matrix.rows))
    return GateDescriptor(model, name, arity, matrix)


_BUILTIN_NAMES = {
    "classical": ("NOT", "CNOT", "SWAP", "AND", "OR", "XOR", "NAND", "NOR", "FANOUT"),
    "stochastic": ("NOT", "CNOT", "SWAP"),
    "quantum": ("X", "H", "Z", "CNOT", "SWAP"),
    "fuzzy": ("FID", "FNOT", "FZERO", "FSWAP"),
}


def builtin_gate_names(model: str) -> tuple[str, ...]:
    try:
        return _BUILTIN_NAMES[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}") from None


def gate_descriptor_from_matrix(model: str, name: str, matrix: SMatrix) -> GateDescriptor:
    """Wrap a user-supplied matrix, checking shape and membership."""
    if matrix.rows != matrix.cols:
        raise MembershipError(f"gate {name!r}: matrix must be square")
    arity = matrix.rows.bit_length() - 1
    if 1 << arity != matrix.rows or arity < 1:
        raise MembershipError(
            f"gate {name!r}: dimension {matrix.rows} is not a power of two >= 2")
    return GateDescriptor(model, name, arity, matrix)
