"""Classical bits: truth tables, permutation matrices, circuit synthesis.

Basis indices pack bit values little-endian: bit i of the index is the
value of wire i, so the ket |b_{n-1} ... b_0> reads most significant bit
first.  Deterministic reversible dynamics on n bits are exactly the
2^n x 2^n permutation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..algebra import BOOLEAN, ONE, ZERO, SemiringInstance
from ..errors import MembershipError
from ..linalg import SMatrix

__all__ = [
    "ClassicalState",
    "TruthTable",
    "classical_gate",
    "is_permutation_matrix",
    "permutation_violation",
    "permutation_from_matrix",
    "matrix_from_permutation",
    "SynthStep",
    "SynthCircuit",
    "synthesize_circuit",
    "evaluate_circuit",
    "circuit_truth_table",
    "reversible_embed",
]


@dataclass(frozen=True)
class ClassicalState:
    """A definite configuration of n bits, stored as its basis index."""

    n_bits: int
    basis_index: int

    def __post_init__(self):
        if self.n_bits < 1:
            raise MembershipError("classical state needs at least one bit")
        if not 0 <= self.basis_index < (1 << self.n_bits):
            raise MembershipError(
                f"basis index {self.basis_index} out of range for {self.n_bits} bits")

    def bits(self) -> tuple[int, ...]:
        """Wire values, index 0 first (least significant)."""
        return tuple((self.basis_index >> i) & 1 for i in range(self.n_bits))

    def ket(self) -> str:
        return "".join(str(b) for b in reversed(self.bits()))


@dataclass(frozen=True)
class TruthTable:
    """A total function {0,1}^n -> {0,1}^m listed in input-index order.

    outputs[i] packs the m output bits for input index i; for the common
    single-output case the entries are plain 0/1 bits.
    """

    n_inputs: int
    n_outputs: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if self.n_inputs < 1 or self.n_outputs < 1:
            raise ValueError("truth table needs at least one input and output")
        if len(self.outputs) != 1 << self.n_inputs:
            raise ValueError(f"expected {1 << self.n_inputs} rows, got {len(self.outputs)}")
        if any(not 0 <= v < (1 << self.n_outputs) for v in self.outputs):
            raise ValueError("output value out of range")


_GATE_TABLES = {
    "NOT": TruthTable(1, 1, (1, 0)),
    "AND": TruthTable(2, 1, (0, 0, 0, 1)),
    "OR": TruthTable(2, 1, (0, 1, 1, 1)),
    "XOR": TruthTable(2, 1, (0, 1, 1, 0)),
    "NAND": TruthTable(2, 1, (1, 1, 1, 0)),
    "NOR": TruthTable(2, 1, (1, 0, 0, 0)),
    "FANOUT": TruthTable(1, 2, (0, 3)),
}


def classical_gate(name: str) -> TruthTable:
    """Truth table of a named gate; FANOUT copies its input to two outputs."""
    try:
        return _GATE_TABLES[name]
    except KeyError:
        raise ValueError(f"unknown classical gate {name!r}") from None


# --- permutation matrices -----------------------------------------------------

_PERM_INSTANCES = ("boolean", "probability")


def permutation_violation(m: SMatrix) -> str | None:
    """None if `m` is a permutation matrix, else a human-readable reason."""
    if m.instance.name not in _PERM_INSTANCES:
        return f"instance {m.instance.name} is not a 0/1 carrier"
    if m.rows != m.cols:
        return f"not square ({m.rows}x{m.cols})"
    zero, one = Fraction(0), Fraction(1)
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if x != zero and x != one:
                return f"entry ({i}, {j}) is {x}, expected 0 or 1"
        ones = sum(1 for x in row if x == one)
        if ones != 1:
            return f"row {i} has {ones} ones, expected exactly 1"
    for j in range(m.cols):
        ones = sum(1 for x in m.column(j) if x == one)
        if ones != 1:
            return f"column {j} has {ones} ones, expected exactly 1"
    return None


def is_permutation_matrix(m: SMatrix) -> bool:
    return permutation_violation(m) is None


def permutation_from_matrix(m: SMatrix) -> tuple[int, ...]:
    """perm[j] = i where column j has its single 1: the image of basis j."""
    violation = permutation_violation(m)
    if violation is not None:
        raise MembershipError(f"not a permutation matrix: {violation}")
    one = Fraction(1)
    return tuple(next(i for i, x in enumerate(m.column(j)) if x == one)
                 for j in range(m.cols))


def matrix_from_permutation(perm: Sequence[int],
                            instance: SemiringInstance = BOOLEAN) -> SMatrix:
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    if instance.name == "probability":
        zero, one = Fraction(0), Fraction(1)
    else:
        zero, one = ZERO, ONE
    return SMatrix(instance, tuple(
        tuple(one if perm[j] == i else zero for j in range(n)) for i in range(n)))


# --- synthesis ----------------------------------------------------------------

@dataclass(frozen=True)
class SynthStep:
    """One straight-line assignment; every target is a fresh wire."""

    op: str  # CONST | NOT | AND | OR | XOR
    target: int
    args: tuple[int, ...] = ()
    value: int = 0  # CONST only


@dataclass(frozen=True)
class SynthCircuit:
    """Straight-line program over {AND, OR, XOR, NOT, constant ancilla}.

    Wires 0 .. n_inputs-1 hold the inputs; each step writes one fresh wire;
    the function value ends up on output_wire.
    """

    n_inputs: int
    n_wires: int
    steps: tuple[SynthStep, ...]
    output_wire: int


def synthesize_circuit(table: TruthTable) -> SynthCircuit:
    """Cofactor decomposition of a single-output table into basic gates.

    Splitting on the most significant input x gives
    f = (NOT x AND f0) XOR (x AND f1); base cases on one input are the
    identity wire, a NOT, an AND with a 0 ancilla, or an OR with a 1 ancilla.
    """
    if table.n_outputs != 1:
        raise ValueError("synthesis is defined for single-output tables")
    steps: list[SynthStep] = []
    counter = [table.n_inputs]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def emit(op: str, args: tuple[int, ...] = (), value: int = 0) -> int:
        w = fresh()
        steps.append(SynthStep(op, w, args, value))
        return w

    def build(outputs: tuple[int, ...], inputs: tuple[int, ...]) -> int:
        if len(inputs) == 1:
            x = inputs[0]
            if outputs == (0, 1):
                return x
            if outputs == (1, 0):
                return emit("NOT", (x,))
            if outputs == (0, 0):
                return emit("AND", (x, emit("CONST", value=0)))
            return emit("OR", (x, emit("CONST", value=1)))
        split = inputs[-1]
        half = 1 << (len(inputs) - 1)
        w0 = build(outputs[:half], inputs[:-1])
        w1 = build(outputs[half:], inputs[:-1])
        ns = emit("NOT", (split,))
        t0 = emit("AND", (ns, w0))
        t1 = emit("AND", (split, w1))
        return emit("XOR", (t0, t1))

    out = build(table.outputs, tuple(range(table.n_inputs)))
    return SynthCircuit(table.n_inputs, counter[0], tuple(steps), out)


def evaluate_circuit(circuit: SynthCircuit, input_index: int) -> int:
    """Run the straight-line program on one input assignment."""
    values = [0] * circuit.n_wires
    for i in range(circuit.n_inputs):
        values[i] = (input_index >> i) & 1
    for step in circuit.steps:
        if step.op == "CONST":
            values[step.target] = step.value
        elif step.op == "NOT":
            values[step.target] = values[step.args[0]] ^ 1
        elif step.op == "AND":
            values[step.target] = values[step.args[0]] & values[step.args[1]]
        elif step.op == "OR":
            values[step.target] = values[step.args[0]] | values[step.args[1]]
        elif step.op == "XOR":
            values[step.target] = values[step.args[0]] ^ values[step.args[1]]
        else:
            raise ValueError(f"unknown op {step.op!r}")
    return values[circuit.output_wire]


def circuit_truth_table(circuit: SynthCircuit) -> TruthTable:
    """Evaluate on all inputs at once, one bitmask per wire."""
    n = circuit.n_inputs
    width = 1 << n
    full = (1 << width) - 1
    values = [0] * circuit.n_wires
    for i in range(n):
        # bit x of values[i] is the value of input wire i on assignment x
        block = (1 << (1 << i)) - 1
        period = 1 << (i + 1)
        mask = 0
        for start in range(1 << i, width, period):
            mask |= block << start
        values[i] = mask
    for step in circuit.steps:
        if step.op == "CONST":
            values[step.target] = full if step.value else 0
        elif step.op == "NOT":
            values[step.target] = values[step.args[0]] ^ full
        elif step.op == "AND":
            values[step.target] = values[step.args[0]] & values[step.args[1]]
        elif step.op == "OR":
            values[step.target] = values[step.args[0]] | values[step.args[1]]
        elif step.op == "XOR":
            values[step.target] = values[step.args[0]] ^ values[step.args[1]]
    out = values[circuit.output_wire]
    return TruthTable(n, 1, tuple((out >> x) & 1 for x in range(width)))


def reversible_embed(table: TruthTable) -> SMatrix:
    """Permutation on n+1 bits sending (x, y) to (x, y XOR f(x)).

    The ancilla y is the least significant bit; starting it at 0 leaves
    f(x) there.  The embedding is its own inverse.
    """
    if table.n_outputs != 1:
        raise ValueError("reversible embedding is defined for single-output tables")
    size = 1 << (table.n_inputs + 1)
    perm = [0] * size
    for idx in range(size):
        x, y = idx >> 1, idx & 1
        perm[idx] = (x << 1) | (y ^ table.outputs[x])
    return matrix_from_permutation(perm)
