"""Classical bits: truth tables, permutation matrices, synthesis, embedding."""

import pytest

from fuzzbit.algebra import BOOLEAN, UnitScalar
from fuzzbit.errors import MembershipError
from fuzzbit.linalg import SMatrix, identity, mat_mul
from fuzzbit.models.classical import (
    ClassicalState,
    TruthTable,
    circuit_truth_table,
    classical_gate,
    evaluate_circuit,
    is_permutation_matrix,
    matrix_from_permutation,
    permutation_from_matrix,
    permutation_violation,
    reversible_embed,
    synthesize_circuit,
)

U = UnitScalar


def test_classical_state():
    s = ClassicalState(3, 5)
    assert s.bits() == (1, 0, 1)  # wire 0 first
    assert s.ket() == "101"
    with pytest.raises(MembershipError):
        ClassicalState(2, 4)
    with pytest.raises(MembershipError):
        ClassicalState(0, 0)


def test_gate_tables():
    assert classical_gate("AND").outputs == (0, 0, 0, 1)
    assert classical_gate("XOR").outputs == (0, 1, 1, 0)
    assert classical_gate("NOT").outputs == (1, 0)
    assert classical_gate("NAND").outputs == (1, 1, 1, 0)
    assert classical_gate("NOR").outputs == (1, 0, 0, 0)
    assert classical_gate("OR").outputs == (0, 1, 1, 1)
    fanout = classical_gate("FANOUT")
    assert (fanout.n_inputs, fanout.n_outputs) == (1, 2)
    assert fanout.outputs == (0, 3)
    with pytest.raises(ValueError):
        classical_gate("XNOR")


def test_truth_table_validation():
    with pytest.raises(ValueError):
        TruthTable(2, 1, (0, 1, 1))  # wrong length
    with pytest.raises(ValueError):
        TruthTable(1, 1, (0, 2))  # output out of range


def test_permutation_violation_reasons():
    assert permutation_violation(identity(BOOLEAN, 4)) is None
    bad_row = SMatrix(BOOLEAN, ((U(1), U(1)), (U(0), U(0))))
    assert "row" in permutation_violation(bad_row)
    bad_col = SMatrix(BOOLEAN, ((U(1), U(0)), (U(1), U(0))))
    assert "row 0" in permutation_violation(bad_col) or "column" in permutation_violation(bad_col)
    not_01 = SMatrix(BOOLEAN, ((U(1, 2), U(1, 2)), (U(1, 2), U(1, 2))))
    assert permutation_violation(not_01) is not None
    non_square = SMatrix(BOOLEAN, ((U(1), U(0)),))
    assert permutation_violation(non_square) is not None
    assert is_permutation_matrix(identity(BOOLEAN, 2))
    assert not is_permutation_matrix(bad_row)


def test_permutation_round_trip():
    cnot = matrix_from_permutation((0, 1, 3, 2))
    assert permutation_from_matrix(cnot) == (0, 1, 3, 2)
    assert is_permutation_matrix(cnot)
    # column j holds the image of basis vector j
    assert cnot.column(2) == (U(0), U(0), U(0), U(1))


def test_synthesis_matches_table_small():
    # all 4 one-input and all 16 two-input tables; two cross-checking evaluators
    for n in (1, 2):
        for code in range(1 << (1 << n)):
            bits = tuple((code >> i) & 1 for i in range(1 << n))
            table = TruthTable(n, 1, bits)
            circ = synthesize_circuit(table)
            assert circuit_truth_table(circ) == table
            for x in range(1 << n):
                assert evaluate_circuit(circ, x) == bits[x]


def test_synthesis_gate_vocabulary():
    circ = synthesize_circuit(TruthTable(2, 1, (1, 0, 0, 1)))
    assert {step.op for step in circ.steps} <= {"CONST", "NOT", "AND", "OR", "XOR"}


def test_identity_table_is_wire():
    circ = synthesize_circuit(TruthTable(1, 1, (0, 1)))
    assert circ.steps == ()
    assert circ.output_wire == 0


def test_reversible_embed():
    m = reversible_embed(classical_gate("AND"))
    assert m.rows == 8
    assert is_permutation_matrix(m)
    assert mat_mul(m, m) == identity(BOOLEAN, 8)
    perm = permutation_from_matrix(m)
    # |x, 0> -> |x, f(x)>: ancilla is the least significant bit
    for x in range(4):
        f = 1 if x == 3 else 0
        assert perm[2 * x] == 2 * x + f
    not_embed = reversible_embed(classical_gate("NOT"))
    assert permutation_from_matrix(not_embed) == (1, 0, 2, 3)
