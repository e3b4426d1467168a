"""Exact unit-interval scalars and the semiring instances built on them.

Rational carriers are exact (`fractions.Fraction` underneath); the complex
carrier used by the quantum model is double precision with a fixed
comparison tolerance.  The many-valued connectives on [0, 1] -- truncated
sum, min, max, the Lukasiewicz product and the complement -- form the
scalar layer every other module is generic over.

A semiring instance names its identities by role, not by numeral: in the
fuzz-mv instance addition is min with identity 1 and multiplication is the
truncated sum with identity 0.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import ParseError

__all__ = [
    "COMPLEX_TOL",
    "UnitScalar",
    "ZERO",
    "ONE",
    "oplus",
    "wedge",
    "vee",
    "odot",
    "neg",
    "SemiringInstance",
    "FUZZ_MV",
    "MAX_MIN",
    "VITERBI",
    "BOOLEAN",
    "PROBABILITY",
    "COMPLEX",
    "make_instance",
    "induced_order",
    "parse_unit_scalar",
    "parse_nonneg_rational",
    "parse_complex_scalar",
    "format_rational",
    "format_complex",
    "format_complex_exact",
]

# Absolute componentwise tolerance for every complex comparison in the package.
COMPLEX_TOL = 1e-9


class UnitScalar(Fraction):
    """A reduced rational confined to [0, 1]."""

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ValueError(f"scalar {self.numerator}/{self.denominator} outside [0, 1]")
        return self


ZERO = UnitScalar(0)
ONE = UnitScalar(1)


def oplus(x: UnitScalar, y: UnitScalar) -> UnitScalar:
    """Truncated sum min(x + y, 1)."""
    s = x + y
    return ONE if s > 1 else UnitScalar(s)


def wedge(x: UnitScalar, y: UnitScalar) -> UnitScalar:
    """Meet min(x, y)."""
    return y if y < x else x


def vee(x: UnitScalar, y: UnitScalar) -> UnitScalar:
    """Join max(x, y)."""
    return x if y < x else y


def odot(x: UnitScalar, y: UnitScalar) -> UnitScalar:
    """Lukasiewicz product max(0, x + y - 1)."""
    s = x + y - 1
    return UnitScalar(s) if s > 0 else ZERO


def neg(x: UnitScalar) -> UnitScalar:
    """Complement 1 - x; an involution."""
    return UnitScalar(1 - x)


def _times(x: UnitScalar, y: UnitScalar) -> UnitScalar:
    # ordinary product; [0, 1] is closed under it
    return UnitScalar(Fraction(x) * Fraction(y))


@dataclass(frozen=True, eq=False)
class SemiringInstance:
    """A named (carrier, add, mul, zero, one) bundle.

    `zero` and `one` are the identities of `add` and `mul` in their roles;
    generic code must never assume they are the numbers 0 and 1.
    """

    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    idempotent_add: bool

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SemiringInstance) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"SemiringInstance({self.name!r})"


FUZZ_MV = SemiringInstance("fuzz-mv", add=wedge, mul=oplus, zero=ONE, one=ZERO,
                           idempotent_add=True)
MAX_MIN = SemiringInstance("max-min", add=vee, mul=wedge, zero=ZERO, one=ONE,
                           idempotent_add=True)
VITERBI = SemiringInstance("viterbi", add=vee, mul=_times, zero=ZERO, one=ONE,
                           idempotent_add=True)
BOOLEAN = SemiringInstance("boolean", add=vee, mul=wedge, zero=ZERO, one=ONE,
                           idempotent_add=True)
PROBABILITY = SemiringInstance("probability", add=operator.add, mul=operator.mul,
                               zero=Fraction(0), one=Fraction(1), idempotent_add=False)
COMPLEX = SemiringInstance("complex", add=operator.add, mul=operator.mul,
                           zero=complex(0), one=complex(1), idempotent_add=False)

_INSTANCES = {s.name: s for s in (FUZZ_MV, MAX_MIN, VITERBI, BOOLEAN, PROBABILITY, COMPLEX)}


def make_instance(name: str) -> SemiringInstance:
    """Look up a registered instance by name."""
    try:
        return _INSTANCES[name]
    except KeyError:
        raise ValueError(f"unknown semiring instance {name!r}") from None


def induced_order(s: SemiringInstance, a, b) -> bool:
    """a <= b in the order induced by idempotent addition: add(a, b) == b."""
    if not s.idempotent_add:
        raise ValueError(f"instance {s.name!r} does not have idempotent addition")
    return s.add(a, b) == b


# --- scalar literal grammar -------------------------------------------------
#
# Rational literals (all file formats): INTEGER "/" INTEGER | DECIMAL | INTEGER.
# Decimals are read exactly ("0.3" is 3/10).  Complex literals extend this with
# an optional sign, an optional exponent and an "i" suffix: 1, -0.5, 2i, 1-2i.

_RATIONAL_RE = re.compile(r"(?:(\d+)/(\d+)|(\d+(?:\.\d+)?))\Z")
_NUM = r"[+-]?(?:\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"
_COMPLEX_RE = re.compile(rf"({_NUM})(?:(?=[+-])({_NUM})i)?\Z")
_IMAG_RE = re.compile(rf"({_NUM})i\Z")


def _parse_rational(token: str) -> Fraction:
    m = _RATIONAL_RE.match(token)
    if m is None:
        raise ParseError(f"malformed scalar {token!r}")
    if m.group(1) is not None:
        if int(m.group(2)) == 0:
            raise ParseError(f"zero denominator in {token!r}")
        return Fraction(int(m.group(1)), int(m.group(2)))
    return Fraction(m.group(3))


def parse_unit_scalar(token: str) -> UnitScalar:
    """Parse a rational literal that must lie in [0, 1]."""
    value = _parse_rational(token)
    if value > 1:
        raise ParseError(f"scalar {token!r} outside [0, 1]")
    return UnitScalar(value)


def parse_nonneg_rational(token: str) -> Fraction:
    """Parse a rational literal with no upper bound (probability carrier)."""
    return _parse_rational(token)


def parse_complex_scalar(token: str) -> complex:
    """Parse a complex literal: a, bi, or a+bi with decimal parts."""
    m = _IMAG_RE.match(token)
    if m is not None:
        z = complex(0.0, float(m.group(1)))
    else:
        m = _COMPLEX_RE.match(token)
        if m is None:
            raise ParseError(f"malformed scalar {token!r}")
        z = complex(float(m.group(1)), float(m.group(2)) if m.group(2) else 0.0)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"non-finite scalar {token!r}")
    return z


def format_rational(x: Fraction) -> str:
    """Exact literal that re-parses to the same value ("3/4", "0", "1")."""
    return str(Fraction(x))


def _format_float(v: float, spec: str | None) -> str:
    # spec None means shortest round-trip (repr)
    text = repr(v) if spec is None else format(v, spec)
    return "0" if text in ("-0", "0.0", "-0.0") else text


def _format_complex_with(z: complex, spec: str | None) -> str:
    if abs(z.imag) == 0.0:
        return _format_float(z.real, spec)
    if abs(z.real) == 0.0:
        return _format_float(z.imag, spec) + "i"
    im = _format_float(z.imag, spec)
    sign = "" if im.startswith("-") else "+"
    return f"{_format_float(z.real, spec)}{sign}{im}i"


def format_complex(z: complex, sig: int = 12) -> str:
    """Render to `sig` significant digits; pure reals drop the imaginary part."""
    return _format_complex_with(z, f".{sig}g")


def format_complex_exact(z: complex) -> str:
    """Shortest literal that round-trips to the same double (for files)."""
    return _format_complex_with(z, None)
