"""Line-oriented circuit programs over the four models.

Grammar, in order, one directive per line ('#' starts a comment):

    model <classical|stochastic|quantum|fuzzy>
    wires <n>
    init ket <bits>            (leftmost bit is the highest wire)
    init vec <scalars...>      (full state vector, length 2^n)
    gate <NAME|@file> <w...>   (repeated)
    measure seed <int>         (quantum only, optional)

Wire 0 is the least significant bit of basis indices.  A gate's wire list
binds the gate's roles left to right, most significant first: `gate CNOT c t` puts the
control on wire c and the target on wire t, whatever their order, and the
listed wires must form a contiguous block.  Lifting tensors the bound
matrix with the model's own identity on both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence, Union

from .algebra import format_complex_exact, format_rational
from .errors import InternalCheckError, MembershipError, ParseError, ValidationError
from .linalg import (
    SMatrix,
    SVector,
    entry_parser,
    equal,
    identity,
    kron_mat,
    mat_mul,
    mat_vec,
    parse_matrix_text,
)
from .models import (
    MODEL_NAMES,
    ClassicalState,
    FuzzyState,
    GateDescriptor,
    ProbState,
    QuantumState,
    builtin_gate,
    gate_descriptor_from_matrix,
    gate_violation,
    model_instance,
)
from .models.classical import SynthCircuit, permutation_from_matrix
from .models.quantum import measure

__all__ = [
    "GateStep",
    "CircuitProgram",
    "ValidatedCircuit",
    "SimulationTrace",
    "parse_circuit",
    "serialize_circuit",
    "validate",
    "lift_gate",
    "composed_operator",
    "simulate",
    "equivalence_check",
    "reversible_circuit_text",
]

ModelState = Union[ClassicalState, ProbState, QuantumState, FuzzyState]


@dataclass(frozen=True)
class GateStep:
    gate: str  # builtin name, or @path for a matrix file
    wires: tuple[int, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CircuitProgram:
    model: str
    wire_count: int
    init_kind: str  # "ket" | "vec"
    init_values: tuple  # bits for ket, carrier scalars for vec
    steps: tuple[GateStep, ...]
    measure_seed: int | None = None
    init_line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ValidatedCircuit:
    program: CircuitProgram
    gates: tuple[GateDescriptor, ...]
    initial: ModelState


@dataclass(frozen=True)
class SimulationTrace:
    """All intermediate states; states[0] is the initial one."""

    model: str
    wire_count: int
    states: tuple[ModelState, ...]
    measured: int | None = None

    @property
    def final(self) -> ModelState:
        return self.states[-1]


# --- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\S+")


def _tokenize(line: str) -> list[tuple[str, int]]:
    """(token, 1-based column) pairs with comments stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def parse_circuit(text: str) -> CircuitProgram:
    """Build the program AST; lengths, ranges and memberships wait for validate."""
    model: str | None = None
    wires: int | None = None
    init: tuple[str, tuple, int] | None = None
    steps: list[GateStep] = []
    seed: int | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        word, col = tokens[0]
        rest = tokens[1:]
        if word == "model":
            if model is not None:
                raise ParseError("duplicate model directive", line_no, col)
            if len(rest) != 1:
                raise ParseError("expected: model <tag>", line_no, col)
            tag = rest[0][0]
            if tag not in MODEL_NAMES:
                raise ParseError(f"unknown model {tag!r}", line_no, rest[0][1])
            model = tag
        elif word == "wires":
            if model is None:
                raise ParseError("model must come first", line_no, col)
            if wires is not None:
                raise ParseError("duplicate wires directive", line_no, col)
            if len(rest) != 1 or not rest[0][0].isdigit():
                raise ParseError("expected: wires <positive integer>", line_no, col)
            wires = int(rest[0][0])
            if wires < 1:
                raise ParseError("wire count must be positive", line_no, rest[0][1])
        elif word == "init":
            if model is None or wires is None:
                raise ParseError("model and wires must come before init", line_no, col)
            if init is not None:
                raise ParseError("duplicate init directive", line_no, col)
            if steps:
                raise ParseError("init must come before gate lines", line_no, col)
            if not rest:
                raise ParseError("expected: init ket <bits> | init vec <scalars>", line_no, col)
            kind = rest[0][0]
            if kind == "ket":
                if len(rest) != 2 or not re.fullmatch(r"[01]+", rest[1][0]):
                    raise ParseError("expected: init ket <bits>", line_no, col)
                bits = tuple(int(c) for c in rest[1][0])
                init = ("ket", bits, line_no)
            elif kind == "vec":
                if len(rest) < 2:
                    raise ParseError("init vec needs at least one scalar", line_no, col)
                parse_entry = _vec_entry_parser(model)
                values = []
                for tok, tok_col in rest[1:]:
                    try:
                        values.append(parse_entry(tok))
                    except ParseError as exc:
                        raise ParseError(str(exc), line_no, tok_col) from None
                init = ("vec", tuple(values), line_no)
            else:
                raise ParseError(f"unknown init kind {kind!r}", line_no, rest[0][1])
        elif word == "gate":
            if model is None or wires is None or init is None:
                raise ParseError("model, wires and init must come before gates", line_no, col)
            if seed is not None:
                raise ParseError("measure must be the final directive", line_no, col)
            if len(rest) < 2:
                raise ParseError("expected: gate <name|@file> <wires...>", line_no, col)
            ref = rest[0][0]
            targets = []
            for tok, tok_col in rest[1:]:
                if not tok.isdigit():
                    raise ParseError(f"wire index {tok!r} is not a non-negative integer",
                                     line_no, tok_col)
                targets.append(int(tok))
            steps.append(GateStep(ref, tuple(targets), line=line_no))
        elif word == "measure":
            if model is None or wires is None or init is None:
                raise ParseError("measure must follow a complete program", line_no, col)
            if seed is not None:
                raise ParseError("duplicate measure directive", line_no, col)
            if len(rest) != 2 or rest[0][0] != "seed" or not rest[1][0].isdigit():
                raise ParseError("expected: measure seed <non-negative integer>", line_no, col)
            seed = int(rest[1][0])
        else:
            raise ParseError(f"unknown directive {word!r}", line_no, col)

    if model is None:
        raise ParseError("missing model directive")
    if wires is None:
        raise ParseError("missing wires directive")
    if init is None:
        raise ParseError("missing init directive")
    kind, values, init_line = init
    return CircuitProgram(model, wires, kind, values, tuple(steps), seed,
                          init_line=init_line)


def _vec_entry_parser(model: str) -> Callable:
    return entry_parser(model_instance(model))


def serialize_circuit(program: CircuitProgram) -> str:
    """Canonical text; parse(serialize(p)) == p."""
    lines = [f"model {program.model}", f"wires {program.wire_count}"]
    if program.init_kind == "ket":
        lines.append("init ket " + "".join(str(b) for b in program.init_values))
    else:
        fmt = format_complex_exact if program.model == "quantum" else format_rational
        lines.append("init vec " + " ".join(fmt(x) for x in program.init_values))
    for step in program.steps:
        lines.append(f"gate {step.gate} " + " ".join(str(w) for w in step.wires))
    if program.measure_seed is not None:
        lines.append(f"measure seed {program.measure_seed}")
    return "\n".join(lines) + "\n"


# --- validation ---------------------------------------------------------------

def _resolve_gate(program: CircuitProgram, step: GateStep, base_dir: Path) -> GateDescriptor:
    if step.gate.startswith("@"):
        path = base_dir / step.gate[1:]
        try:
            matrix = parse_matrix_text(path.read_text())
        except OSError as exc:
            raise ValidationError(f"cannot read gate file {step.gate[1:]!r}: {exc}",
                                  step.line) from None
        if matrix.instance != model_instance(program.model):
            raise ValidationError(
                f"gate file {step.gate[1:]!r} uses instance {matrix.instance.name}, "
                f"model {program.model} needs {model_instance(program.model).name}",
                step.line)
        try:
            return gate_descriptor_from_matrix(program.model, step.gate, matrix)
        except MembershipError as exc:
            raise ValidationError(str(exc), step.line) from None
    try:
        return builtin_gate(program.model, step.gate)
    except ValueError:
        raise ValidationError(
            f"unknown gate {step.gate!r} for model {program.model}", step.line) from None


def _initial_state(program: CircuitProgram) -> ModelState:
    n = program.wire_count
    size = 1 << n
    instance = model_instance(program.model)
    if program.init_kind == "ket":
        bits = program.init_values
        if len(bits) != n:
            raise ValidationError(
                f"init ket has {len(bits)} bits, program has {n} wires",
                program.init_line)
        index = int("".join(str(b) for b in bits), 2)
        if program.model == "classical":
            return ClassicalState(n, index)
        entries = tuple(instance.one if i == index else instance.zero
                        for i in range(size))
        vector = SVector(instance, entries)
    else:
        if program.model == "classical":
            raise ValidationError("classical programs take ket initial states",
                                  program.init_line)
        if len(program.init_values) != size:
            raise ValidationError(
                f"init vec has {len(program.init_values)} entries, expected {size}",
                program.init_line)
        vector = SVector(instance, program.init_values)
    try:
        if program.model == "stochastic":
            return ProbState(vector)
        if program.model == "quantum":
            return QuantumState(vector)
        return FuzzyState(vector)
    except MembershipError as exc:
        raise ValidationError(f"initial state rejected: {exc}", program.init_line) from None


def validate(program: CircuitProgram, base_dir: str | Path = ".") -> ValidatedCircuit:
    """Resolve gates, check memberships, wire ranges and the initial state."""
    if program.wire_count < 1:
        raise ValidationError("wire count must be positive")
    base = Path(base_dir)
    gates = []
    for step in program.steps:
        descriptor = _resolve_gate(program, step, base)
        k = descriptor.arity
        if len(step.wires) != k:
            raise ValidationError(
                f"gate {step.gate} expects {k} wires, got {len(step.wires)}", step.line)
        if len(set(step.wires)) != k:
            raise ValidationError(f"gate {step.gate} lists a wire twice", step.line)
        if max(step.wires) >= program.wire_count:
            raise ValidationError(
                f"wire {max(step.wires)} out of range for {program.wire_count} wires",
                step.line)
        if max(step.wires) - min(step.wires) + 1 != k:
            raise ValidationError(
                f"gate {step.gate} wires {step.wires} must form a contiguous block",
                step.line)
        gates.append(descriptor)
    if program.measure_seed is not None and program.model != "quantum":
        raise ValidationError("measure is only defined for quantum programs")
    initial = _initial_state(program)
    return ValidatedCircuit(program, tuple(gates), initial)


# --- lifting and simulation -----------------------------------------------------

def _slot_tables(targets: Sequence[int], arity: int) -> tuple[list[int], list[int]]:
    """Bit remap between the local window and the gate's own index space."""
    base = min(targets)
    size = 1 << arity
    rho = [0] * size
    for x in range(size):
        g = 0
        for i, w in enumerate(targets):
            if (x >> (w - base)) & 1:
                g |= 1 << (arity - 1 - i)
        rho[x] = g
    inv = [0] * size
    for x, g in enumerate(rho):
        inv[g] = x
    return rho, inv


def _bound_matrix(gate: GateDescriptor, targets: Sequence[int]) -> SMatrix:
    """The gate matrix re-indexed so window bit (w - base) carries wire w."""
    rho, _ = _slot_tables(targets, gate.arity)
    if all(rho[x] == x for x in range(len(rho))):
        return gate.matrix
    g = gate.matrix.entries
    size = len(rho)
    return SMatrix(gate.matrix.instance, tuple(
        tuple(g[rho[r]][rho[c]] for c in range(size)) for r in range(size)))


def lift_gate(gate: GateDescriptor, targets: Sequence[int], n: int) -> SMatrix:
    """Embed a gate on a contiguous wire block into the full n-wire operator."""
    k = gate.arity
    if len(targets) != k or len(set(targets)) != k:
        raise ValueError("target list must name each gate wire exactly once")
    base = min(targets)
    if max(targets) - base + 1 != k:
        raise ValueError(f"targets {tuple(targets)} must form a contiguous block")
    if base < 0 or max(targets) >= n:
        raise ValueError(f"targets {tuple(targets)} out of range for {n} wires")
    instance = gate.matrix.instance
    op = _bound_matrix(gate, targets)
    high = n - base - k
    if high:
        op = kron_mat(identity(instance, 1 << high), op)
    if base:
        op = kron_mat(op, identity(instance, 1 << base))
    violation = gate_violation(gate.model, op)
    if violation is not None:
        raise InternalCheckError(f"lifted gate left the model: {violation}")
    return op


def composed_operator(vc: ValidatedCircuit) -> SMatrix:
    """Product of all lifted steps, later gates applied on the left."""
    n = vc.program.wire_count
    total = identity(model_instance(vc.program.model), 1 << n)
    for step, gate in zip(vc.program.steps, vc.gates):
        total = mat_mul(lift_gate(gate, step.wires, n), total)
    return total


def _classical_index_step(gate: GateDescriptor, targets: Sequence[int],
                          index: int) -> int:
    perm = permutation_from_matrix(gate.matrix)
    rho, inv = _slot_tables(targets, gate.arity)
    base = min(targets)
    mask = (1 << gate.arity) - 1
    local = (index >> base) & mask
    new_local = inv[perm[rho[local]]]
    return (index & ~(mask << base)) | (new_local << base)


def _wrap_state(model: str, vector: SVector) -> ModelState:
    try:
        if model == "stochastic":
            return ProbState(vector)
        if model == "quantum":
            return QuantumState(vector)
        return FuzzyState(vector)
    except MembershipError as exc:
        raise InternalCheckError(
            f"intermediate state failed membership: {exc}") from None


def simulate(vc: ValidatedCircuit, seed_override: int | None = None,
             force_measure: bool = False,
             initial: ModelState | None = None) -> SimulationTrace:
    """Run the program, keeping one state snapshot per gate step."""
    program = vc.program
    n = program.wire_count
    state: ModelState = vc.initial if initial is None else initial
    states = [state]
    if program.model == "classical":
        index = state.basis_index
        for step, gate in zip(program.steps, vc.gates):
            index = _classical_index_step(gate, step.wires, index)
            state = ClassicalState(n, index)
            states.append(state)
    else:
        for step, gate in zip(program.steps, vc.gates):
            op = lift_gate(gate, step.wires, n)
            state = _wrap_state(program.model, mat_vec(op, state.vector))
            states.append(state)
    measured = None
    if program.model == "quantum" and (program.measure_seed is not None
                                       or force_measure or seed_override is not None):
        seed = seed_override if seed_override is not None else program.measure_seed
        measured = measure(states[-1], seed if seed is not None else 0)
    return SimulationTrace(program.model, n, tuple(states), measured)


def equivalence_check(a: ValidatedCircuit, b: ValidatedCircuit) -> bool:
    """Exact operator equality (tolerance 1e-9 for quantum programs)."""
    if a.program.model != b.program.model:
        raise ValidationError("model mismatch between programs")
    if a.program.wire_count != b.program.wire_count:
        raise ValidationError("wire count mismatch between programs")
    return equal(composed_operator(a), composed_operator(b))


# --- reversible emission of synthesized circuits --------------------------------

def reversible_circuit_text(circ: SynthCircuit) -> str:
    """Render a straight-line synthesis as a classical circuit program.

    Every assignment becomes its reversible embedding on a fresh zero wire,
    with SWAP chains routing operands into a contiguous block.  The function
    value ends on wire 0; inputs are wires 0..n-1 of the initial ket.
    """
    total = circ.n_wires
    pos = list(range(total))  # pos[value] = wire currently holding it
    at = list(range(total))  # at[wire] = value currently on it
    lines = [
        "# synthesized circuit: inputs on wires 0..%d, result on wire 0" % (circ.n_inputs - 1),
        "model classical",
        f"wires {total}",
        "init ket " + "0" * total,
    ]

    def swap(p: int) -> None:
        u, v = at[p], at[p + 1]
        at[p], at[p + 1] = v, u
        pos[u], pos[v] = p + 1, p
        lines.append(f"gate SWAP {p} {p + 1}")

    def bubble(value: int, target: int) -> None:
        while pos[value] > target:
            swap(pos[value] - 1)
        while pos[value] < target:
            swap(pos[value])

    for step in circ.steps:
        if step.op == "CONST":
            if step.value:
                lines.append(f"gate NOT {pos[step.target]}")
        elif step.op == "NOT":
            bubble(step.target, 0)
            bubble(step.args[0], 1)
            lines.append("gate FANOUT 1 0")
            lines.append("gate NOT 0")
        else:
            bubble(step.target, 0)
            bubble(step.args[0], 1)
            bubble(step.args[1], 2)
            lines.append(f"gate {step.op} 1 2 0")
    bubble(circ.output_wire, 0)
    return "\n".join(lines) + "\n"
