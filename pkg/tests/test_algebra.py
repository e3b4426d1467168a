"""Scalar connectives, semiring instances, and the literal grammar."""

from fractions import Fraction

import pytest

from fuzzbit.algebra import (
    BOOLEAN,
    FUZZ_MV,
    MAX_MIN,
    ONE,
    PROBABILITY,
    VITERBI,
    ZERO,
    UnitScalar,
    format_complex,
    format_complex_exact,
    format_rational,
    induced_order,
    make_instance,
    neg,
    odot,
    oplus,
    parse_complex_scalar,
    parse_nonneg_rational,
    parse_unit_scalar,
    vee,
    wedge,
)
from fuzzbit.errors import ParseError

U = UnitScalar
GRID = [U(0), U(1, 4), U(1, 3), U(1, 2), U(2, 3), U(3, 4), U(1)]


def test_unit_scalar_bounds():
    assert U(1, 2) == Fraction(1, 2)
    assert U("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        U(3, 2)
    with pytest.raises(ValueError):
        U(-1, 4)


def test_connective_values():
    assert oplus(U(1, 2), U(3, 4)) == 1
    assert oplus(U(1, 4), U(1, 4)) == U(1, 2)
    assert odot(U(1, 2), U(3, 4)) == U(1, 4)
    assert odot(U(1, 4), U(1, 4)) == 0
    assert wedge(U(1, 3), U(1, 2)) == U(1, 3)
    assert vee(U(1, 3), U(1, 2)) == U(1, 2)
    assert neg(U(1, 3)) == U(2, 3)
    assert neg(neg(U(1, 4))) == U(1, 4)


def test_mv_interplay_on_grid():
    # x (.) (~x (+) y) = x /\ y, and (+) distributes over /\
    for x in GRID:
        for y in GRID:
            assert odot(x, oplus(neg(x), y)) == wedge(x, y)
            for z in GRID:
                assert oplus(x, wedge(y, z)) == wedge(oplus(x, y), oplus(x, z))


def test_instance_identities_by_role():
    assert FUZZ_MV.zero == ONE and FUZZ_MV.one == ZERO
    assert FUZZ_MV.add(U(1, 2), U(3, 4)) == U(1, 2)
    assert FUZZ_MV.mul(U(1, 2), U(3, 4)) == 1
    assert MAX_MIN.zero == ZERO and MAX_MIN.one == ONE
    assert VITERBI.mul(U(1, 2), U(1, 2)) == U(1, 4)
    assert BOOLEAN.add(ZERO, ONE) == ONE


def test_instance_registry_and_equality():
    assert make_instance("fuzz-mv") is FUZZ_MV
    assert make_instance("boolean") == BOOLEAN
    assert hash(make_instance("viterbi")) == hash(VITERBI)
    with pytest.raises(ValueError):
        make_instance("tropical")


def test_induced_order():
    # fuzz-mv order is reversed relative to the numeric order
    assert induced_order(FUZZ_MV, ONE, ZERO)
    assert not induced_order(FUZZ_MV, ZERO, ONE)
    assert induced_order(MAX_MIN, ZERO, ONE)
    assert induced_order(BOOLEAN, ZERO, ZERO)
    with pytest.raises(ValueError):
        induced_order(PROBABILITY, Fraction(0), Fraction(1))


def test_parse_unit_scalar():
    assert parse_unit_scalar("3/4") == U(3, 4)
    assert parse_unit_scalar("0.25") == U(1, 4)
    assert parse_unit_scalar("1") == 1
    assert parse_unit_scalar("0") == 0
    for bad in ("5/4", "1/0", "-1/4", "abc", "0.2.3", "1 /2", ""):
        with pytest.raises(ParseError):
            parse_unit_scalar(bad)


def test_parse_nonneg_rational():
    assert parse_nonneg_rational("7/2") == Fraction(7, 2)
    assert parse_nonneg_rational("2.5") == Fraction(5, 2)
    with pytest.raises(ParseError):
        parse_nonneg_rational("-1")


def test_parse_complex_scalar():
    assert parse_complex_scalar("1") == 1 + 0j
    assert parse_complex_scalar("-0.5") == -0.5 + 0j
    assert parse_complex_scalar("2i") == 2j
    assert parse_complex_scalar("1-2i") == 1 - 2j
    assert parse_complex_scalar("-1.5e-3") == complex(-0.0015)
    assert parse_complex_scalar("0.5+0.5i") == 0.5 + 0.5j
    for bad in ("i", "1+", "1+i", "2j", "1 + 2i", ""):
        with pytest.raises(ParseError):
            parse_complex_scalar(bad)


def test_format_rational_round_trip():
    for x in GRID:
        assert parse_unit_scalar(format_rational(x)) == x


def test_format_complex_significant_digits():
    assert format_complex(complex(0.7071067811865476)) == "0.707106781187"
    assert format_complex(complex(0.0, -0.5)) == "-0.5i"
    assert format_complex(complex(1.0, 2.0)) == "1+2i"
    assert format_complex(complex(0.0)) == "0"


def test_format_complex_exact_round_trip():
    for z in (0.1 + 0.2j, complex(2 ** -52, -(2 ** 0.5)), 1e-300 + 0j, -0.0 + 1j):
        assert parse_complex_scalar(format_complex_exact(z)) == z
