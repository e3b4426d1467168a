"""Generic semiring vectors/matrices and the matrix text format."""

from fractions import Fraction

import pytest

from fuzzbit.algebra import BOOLEAN, COMPLEX, FUZZ_MV, PROBABILITY, UnitScalar
from fuzzbit.errors import ParseError
from fuzzbit.linalg import (
    SMatrix,
    SVector,
    add,
    as_vector,
    equal,
    identity,
    kron_mat,
    kron_vec,
    linear_combination,
    linearly_independent,
    mat_mul,
    mat_vec,
    parse_matrix_text,
    scale,
    serialize_matrix,
    zero_vector,
    zeros,
)

U = UnitScalar


def fvec(*xs):
    return SVector(FUZZ_MV, tuple(U(x) for x in xs))


def fmat(rows):
    return SMatrix(FUZZ_MV, tuple(tuple(U(x) for x in row) for row in rows))


def test_container_validation():
    with pytest.raises(ValueError):
        SVector(FUZZ_MV, ())
    with pytest.raises(ValueError):
        SMatrix(FUZZ_MV, ((U(0),), (U(0), U(1))))
    with pytest.raises(ValueError):
        SMatrix(FUZZ_MV, ())
    m = fmat([[0, 1], [1, 0]])
    assert (m.rows, m.cols) == (2, 2)
    assert m.column(1) == (U(1), U(0))
    assert len(fvec(0, 1)) == 2


def test_identity_is_role_based():
    # fuzz-mv: one = 0 on the diagonal, zero = 1 elsewhere
    assert identity(FUZZ_MV, 2) == fmat([[0, 1], [1, 0]])
    assert identity(BOOLEAN, 2).entries == ((U(1), U(0)), (U(0), U(1)))
    assert zeros(FUZZ_MV, 2) == fmat([[1, 1], [1, 1]])
    assert zero_vector(FUZZ_MV, 3) == fvec(1, 1, 1)


def test_fuzzy_matrix_product():
    ident = identity(FUZZ_MV, 2)
    j = fmat([[1, 0], [0, 1]])
    assert mat_mul(j, j) == ident
    assert mat_mul(ident, j) == j
    a = fmat([["3/10", 1], [0, 0]])
    # entries recomputed by hand: min over k of (a_ik + b_kj), capped at 1
    assert mat_vec(a, fvec(0, "1/2")) == fvec("3/10", 0)
    assert mat_vec(fmat([[1, 1], [1, 1]]), fvec(0, "3/4")) == fvec(1, 1)


def test_add_and_scale():
    assert add(fvec(0, "1/2"), fvec("1/4", 1)) == fvec(0, "1/2")
    assert scale(U(1, 2), fvec(0, "3/4")) == fvec("1/2", 1)
    combo = linear_combination([U(0), U(1)], [fvec(0, 1), fvec(1, 0)])
    assert combo == fvec(0, 1)


def test_probability_product():
    m = SMatrix(PROBABILITY, ((Fraction(9, 10), Fraction(2, 10)),
                              (Fraction(1, 10), Fraction(8, 10))))
    v = SVector(PROBABILITY, (Fraction(1), Fraction(0)))
    assert mat_vec(m, v).entries == (Fraction(9, 10), Fraction(1, 10))
    two = mat_mul(m, m)
    assert two.entries[0][0] == Fraction(83, 100)


def test_kron_vec_layout():
    # first factor is most significant
    u = SVector(PROBABILITY, (Fraction(2), Fraction(3)))
    v = SVector(PROBABILITY, (Fraction(5), Fraction(7)))
    assert kron_vec(u, v).entries == (10, 14, 15, 21)
    assert kron_vec(fvec(0, 1), fvec(1, 0)) == fvec(1, 0, 1, 1)
    assert kron_vec(fvec(0, "1/2"), fvec(0, "1/3")) == fvec(0, "1/3", "1/2", "5/6")


def test_kron_mat():
    ident = identity(FUZZ_MV, 2)
    assert kron_mat(ident, ident) == identity(FUZZ_MV, 4)
    a = fmat([[0, "1/2"], [1, 0]])
    b = fmat([[0, 1], ["1/4", 0]])
    left = mat_mul(kron_mat(a, b), kron_mat(ident, b))
    right = kron_mat(mat_mul(a, ident), mat_mul(b, b))
    assert left == right


def test_linear_independence():
    grid = (U(0), U(1, 2), U(1))
    # (0,0) is not the zero vector here; c |-> (c,c) is injective
    assert linearly_independent([fvec(0, 0)], grid)
    # the semimodule zero is (1,1): every coefficient gives (1,1)
    assert not linearly_independent([fvec(1, 1)], grid)
    assert linearly_independent([fvec(0, 1), fvec(1, 0)], grid)
    assert not linearly_independent([fvec(0, 1), fvec(0, 1)], grid)


def test_equal_tolerance_is_complex_only():
    a = SMatrix(COMPLEX, ((complex(1), complex(0)), (complex(0), complex(1))))
    b = SMatrix(COMPLEX, ((complex(1 + 1e-12), complex(0)), (complex(0), complex(1))))
    c = SMatrix(COMPLEX, ((complex(1 + 1e-6), complex(0)), (complex(0), complex(1))))
    assert equal(a, b)
    assert not equal(a, c)
    assert not equal(fmat([[0, 1], [1, 0]]), fmat([[0, 1], [1, "1/2"]]))


def test_parse_matrix_text():
    m = parse_matrix_text("instance fuzz-mv 2 2\n0 1\n1 0\n")
    assert m == identity(FUZZ_MV, 2)
    v = parse_matrix_text("instance complex 1 2\n0.5+0.5i -1i\n")
    assert v.entries == ((0.5 + 0.5j, -1j),)
    # comments/blank lines are not part of this format; positions are reported
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix_text("instance nope 2 2\n0 1\n1 0\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix_text("instance fuzz-mv 2 2\n0 1\n1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_matrix_text("instance fuzz-mv 2 2\n0 x\n1 0\n")
    with pytest.raises(ParseError):
        parse_matrix_text("instance fuzz-mv 2 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_matrix_text("")


def test_serialize_round_trip():
    for m in (identity(FUZZ_MV, 2),
              fmat([[0, "1/2", 1], ["2/3", 0, "3/4"]]),
              SMatrix(COMPLEX, ((0.1 + 0.2j, complex(2 ** 0.5) / 2),
                                (complex(-0.0), 1e-17 - 1j)))):
        again = parse_matrix_text(serialize_matrix(m))
        assert again.instance == m.instance
        assert again.entries == m.entries


def test_as_vector():
    row = parse_matrix_text("instance fuzz-mv 1 3\n0 1 1\n")
    col = parse_matrix_text("instance fuzz-mv 3 1\n0\n1\n1\n")
    assert as_vector(row) == as_vector(col) == fvec(0, 1, 1)
    with pytest.raises(ValueError):
        as_vector(identity(FUZZ_MV, 2))
