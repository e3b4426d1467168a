"""Command-line front door.

Subcommands: check, apply, kron, simulate, sample, synth, verify.  Any file
argument may be `-` for standard input.  Exit codes are a stable contract:
0 success, 1 domain/membership failure, 2 parse error, 3 internal invariant
breach.  Quantum scalars print with 12 significant digits; every other model
prints exact rationals.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .circuit import (
    SimulationTrace,
    parse_circuit,
    reversible_circuit_text,
    simulate,
    validate,
)
from .algebra import SemiringInstance, format_complex, format_rational
from .errors import FuzzbitError, InternalCheckError, ParseError, ValidationError
from .linalg import (
    SMatrix,
    SVector,
    as_vector,
    kron_mat,
    kron_vec,
    mat_vec,
    parse_matrix_text,
    serialize_matrix,
)
from .models import MODEL_NAMES, gate_violation, state_violation
from .models.classical import ClassicalState, TruthTable, synthesize_circuit
from .verify import GRID_NAMES, run_all

__all__ = ["main", "entry"]


def _read_text(path: str) -> tuple[str, Path]:
    """File contents plus the directory used to resolve @file gate references."""
    if path == "-":
        return sys.stdin.read(), Path(".")
    p = Path(path)
    return p.read_text(encoding="utf-8"), (p.parent if p.parent != Path("") else Path("."))


def _read_matrix(path: str) -> SMatrix:
    text, _ = _read_text(path)
    return parse_matrix_text(text)


def _display_formatter(instance: SemiringInstance):
    # 12 significant digits for the complex carrier, exact rationals elsewhere
    return format_complex if instance.name == "complex" else format_rational


def _render_vector(v: SVector) -> str:
    fmt = _display_formatter(v.instance)
    return " ".join(fmt(x) for x in v.entries)


def _render_state(state) -> str:
    if isinstance(state, ClassicalState):
        return f"index {state.basis_index} ket {state.ket()}"
    return _render_vector(state.vector)


def _is_vector_shaped(m: SMatrix) -> bool:
    return m.rows == 1 or m.cols == 1


def cmd_check(args) -> int:
    m = _read_matrix(args.file)
    if _is_vector_shaped(m):
        reason = state_violation(args.model, as_vector(m))
    else:
        reason = gate_violation(args.model, m)
    if reason is None:
        print("ok")
        return 0
    print(f"fail {reason}")
    return 1


def cmd_apply(args) -> int:
    gate = _read_matrix(args.gate)
    state = as_vector(_read_matrix(args.state))
    for reason in (gate_violation(args.model, gate),
                   state_violation(args.model, state)):
        if reason is not None:
            print(f"error: {reason}", file=sys.stderr)
            return 1
    result = mat_vec(gate, state)
    reason = state_violation(args.model, result)
    if reason is not None:
        raise InternalCheckError(f"result left the state set: {reason}")
    print(_render_vector(result))
    return 0


def cmd_kron(args) -> int:
    a = _read_matrix(args.a)
    b = _read_matrix(args.b)
    if _is_vector_shaped(a) != _is_vector_shaped(b):
        raise ValidationError("kron arguments must be two states or two gates")
    if _is_vector_shaped(a):
        u, v = as_vector(a), as_vector(b)
        for reason in (state_violation(args.model, u), state_violation(args.model, v)):
            if reason is not None:
                print(f"error: {reason}", file=sys.stderr)
                return 1
        product = kron_vec(u, v)
        reason = state_violation(args.model, product)
        if reason is not None:
            raise InternalCheckError(f"tensor left the state set: {reason}")
        print(_render_vector(product))
    else:
        for reason in (gate_violation(args.model, a), gate_violation(args.model, b)):
            if reason is not None:
                print(f"error: {reason}", file=sys.stderr)
                return 1
        product = kron_mat(a, b)
        reason = gate_violation(args.model, product)
        if reason is not None:
            raise InternalCheckError(f"tensor left the gate set: {reason}")
        sys.stdout.write(serialize_matrix(product, _display_formatter(product.instance)))
    return 0


def _print_trace(program, trace: SimulationTrace, show_steps: bool) -> None:
    lines = []
    if show_steps:
        labels = ["init"] + [step.gate for step in program.steps]
        for k, (label, state) in enumerate(zip(labels, trace.states)):
            lines.append(f"step {k} {label} {_render_state(state)}")
    lines.append(f"model {program.model}")
    lines.append(f"wires {program.wire_count}")
    lines.append(f"final {_render_state(trace.final)}")
    if trace.measured is not None:
        lines.append(f"measured {trace.measured}")
    print("\n".join(lines))


def cmd_simulate(args, force_measure: bool = False) -> int:
    text, base = _read_text(args.circuit)
    program = parse_circuit(text)
    if program.model != "quantum":
        if args.seed is not None:
            raise ValidationError("--seed applies to quantum circuits only")
        if force_measure:
            raise ValidationError("sample requires a quantum circuit")
    vc = validate(program, base_dir=base)
    trace = simulate(vc, seed_override=args.seed, force_measure=force_measure)
    _print_trace(program, trace, getattr(args, "trace", False))
    return 0


def cmd_sample(args) -> int:
    return cmd_simulate(args, force_measure=True)


def cmd_synth(args) -> int:
    text, _ = _read_text(args.table)
    tokens = text.split()
    if not tokens or any(t not in ("0", "1") for t in tokens):
        raise ParseError("truth table file must contain only 0/1 entries")
    size = len(tokens)
    n = size.bit_length() - 1
    if size < 2 or (1 << n) != size:
        raise ParseError(f"table length {size} is not a power of two (at least 2)")
    bits = tuple(int(t) for t in tokens)
    circuit_text = reversible_circuit_text(synthesize_circuit(TruthTable(n, 1, bits)))
    vc = validate(parse_circuit(circuit_text))
    wires = vc.program.wire_count
    for x in range(size):
        final = simulate(vc, initial=ClassicalState(wires, x)).final
        if final.basis_index & 1 != bits[x]:
            raise InternalCheckError(
                f"synthesized circuit disagrees with the table at input {x}")
    sys.stdout.write(circuit_text)
    return 0


def cmd_verify(args) -> int:
    failures = 0
    for report in run_all(args.grid):
        print(f"{report.name} cases {report.cases} failures {len(report.failures)}")
        failures += len(report.failures)
    return 0 if failures == 0 else 1


def _seed_arg(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzbit",
        description="Fuzzy, classical, stochastic and quantum circuit toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("check", help="membership verdict for a gate or state file")
    p.add_argument("model", choices=MODEL_NAMES)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("apply", help="apply a gate file to a state file")
    p.add_argument("model", choices=MODEL_NAMES)
    p.add_argument("gate")
    p.add_argument("state")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("kron", help="Kronecker product of two states or two gates")
    p.add_argument("model", choices=MODEL_NAMES)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("simulate", help="run a .circ program")
    p.add_argument("circuit")
    p.add_argument("--trace", action="store_true", help="print every intermediate state")
    p.add_argument("--seed", type=_seed_arg, help="measurement seed override (quantum)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sample", help="simulate with a terminal measurement")
    p.add_argument("circuit")
    p.add_argument("--trace", action="store_true", help="print every intermediate state")
    p.add_argument("--seed", type=_seed_arg, help="measurement seed (default 0)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("synth", help="synthesize a classical circuit from a truth table")
    p.add_argument("table")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="run the brute-force law checks")
    p.add_argument("--grid", choices=GRID_NAMES, default="standard")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FuzzbitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
