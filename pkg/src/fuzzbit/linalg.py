"""Dense vectors and matrices over a semiring instance.

States are column vectors; operators act by left multiplication.  The
Kronecker product uses the row-major block convention: the first factor
owns the most significant part of the combined index.

Matrix/vector text format (shared with the CLI): a header line
``instance <name> <rows> <cols>`` followed by one whitespace-separated
row per line.  Entries follow the scalar literal grammar of the header's
instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .algebra import (
    COMPLEX_TOL,
    SemiringInstance,
    format_complex_exact,
    format_rational,
    make_instance,
    parse_complex_scalar,
    parse_nonneg_rational,
    parse_unit_scalar,
)
from .errors import ParseError

__all__ = [
    "SVector",
    "SMatrix",
    "add",
    "mat_mul",
    "mat_vec",
    "kron_mat",
    "kron_vec",
    "identity",
    "zeros",
    "zero_vector",
    "scale",
    "linear_combination",
    "linearly_independent",
    "equal",
    "entry_parser",
    "entry_formatter",
    "parse_matrix_text",
    "serialize_matrix",
    "as_vector",
    "vector_to_matrix",
]


@dataclass(frozen=True)
class SVector:
    instance: SemiringInstance
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("empty vector")

    @property
    def length(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SMatrix:
    instance: SemiringInstance
    entries: tuple  # row-major tuple of row tuples

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)


def _require_same_instance(a, b) -> SemiringInstance:
    if a.instance != b.instance:
        raise ValueError(f"instance mismatch: {a.instance.name} vs {b.instance.name}")
    return a.instance


def _reduce(add: Callable, terms: Iterable) -> Any:
    it = iter(terms)
    acc = next(it)
    for t in it:
        acc = add(acc, t)
    return acc


def add(a, b):
    """Entrywise semiring addition of two vectors or two matrices."""
    s = _require_same_instance(a, b)
    if isinstance(a, SVector) and isinstance(b, SVector):
        if len(a) != len(b):
            raise ValueError("length mismatch")
        return SVector(s, tuple(s.add(x, y) for x, y in zip(a.entries, b.entries)))
    if isinstance(a, SMatrix) and isinstance(b, SMatrix):
        if a.rows != b.rows or a.cols != b.cols:
            raise ValueError("shape mismatch")
        return SMatrix(s, tuple(tuple(s.add(x, y) for x, y in zip(ra, rb))
                                for ra, rb in zip(a.entries, b.entries)))
    raise TypeError("add expects two vectors or two matrices")


def mat_mul(a: SMatrix, b: SMatrix) -> SMatrix:
    """Semiring matrix product: entry (i, j) is the add-reduction of mul terms."""
    s = _require_same_instance(a, b)
    if a.cols != b.rows:
        raise ValueError(f"inner dimension mismatch: {a.cols} vs {b.rows}")
    bt = tuple(zip(*b.entries))  # columns of b
    return SMatrix(s, tuple(
        tuple(_reduce(s.add, (s.mul(x, y) for x, y in zip(row, col))) for col in bt)
        for row in a.entries))


def mat_vec(a: SMatrix, v: SVector) -> SVector:
    s = _require_same_instance(a, v)
    if a.cols != len(v):
        raise ValueError(f"dimension mismatch: {a.cols} vs {len(v)}")
    return SVector(s, tuple(
        _reduce(s.add, (s.mul(x, y) for x, y in zip(row, v.entries)))
        for row in a.entries))


def kron_mat(a: SMatrix, b: SMatrix) -> SMatrix:
    """Kronecker product; block (i, j) is mul(a[i, j], -) applied to b."""
    s = _require_same_instance(a, b)
    rows = []
    for arow in a.entries:
        for brow in b.entries:
            rows.append(tuple(s.mul(x, y) for x in arow for y in brow))
    return SMatrix(s, tuple(rows))


def kron_vec(u: SVector, v: SVector) -> SVector:
    s = _require_same_instance(u, v)
    return SVector(s, tuple(s.mul(x, y) for x in u.entries for y in v.entries))


def identity(s: SemiringInstance, n: int) -> SMatrix:
    """n x n matrix with `one` on the diagonal and `zero` elsewhere."""
    return SMatrix(s, tuple(tuple(s.one if i == j else s.zero for j in range(n))
                            for i in range(n)))


def zeros(s: SemiringInstance, n: int) -> SMatrix:
    """n x n matrix of `zero`; absorbing for mat_mul."""
    return SMatrix(s, ((s.zero,) * n,) * n)


def zero_vector(s: SemiringInstance, n: int) -> SVector:
    return SVector(s, (s.zero,) * n)


def scale(r, v: SVector) -> SVector:
    """Scalar action mul(r, -) applied entrywise."""
    s = v.instance
    return SVector(s, tuple(s.mul(r, x) for x in v.entries))


def linear_combination(coeffs: Sequence, vectors: Sequence[SVector]) -> SVector:
    if len(coeffs) != len(vectors):
        raise ValueError("one coefficient per vector required")
    if not vectors:
        raise ValueError("empty combination")
    acc = scale(coeffs[0], vectors[0])
    for r, v in zip(coeffs[1:], vectors[1:]):
        acc = add(acc, scale(r, v))
    return acc


def linearly_independent(vectors: Sequence[SVector], grid: Sequence) -> bool:
    """Grid-bounded independence test.

    True iff no two distinct coefficient tuples drawn from `grid` produce
    the same linear combination of `vectors`.
    """
    if not vectors:
        raise ValueError("empty vector set")
    if not grid:
        raise ValueError("empty coefficient grid")
    s = vectors[0].instance
    if any(v.instance != s for v in vectors) or len({len(v) for v in vectors}) != 1:
        raise ValueError("vectors must share an instance and a length")
    seen: dict[tuple, tuple] = {}
    for coeffs in itertools.product(grid, repeat=len(vectors)):
        combo = linear_combination(coeffs, vectors).entries
        if seen.setdefault(combo, coeffs) != coeffs:
            return False
    return True


def equal(a, b, tol: float = COMPLEX_TOL) -> bool:
    """Instance-aware comparison: exact, except complex within `tol`."""
    if a.instance != b.instance:
        return False
    if isinstance(a, SVector) != isinstance(b, SVector):
        return False
    if isinstance(a, SVector):
        flat_a, flat_b = a.entries, b.entries
        if len(flat_a) != len(flat_b):
            return False
    else:
        if a.rows != b.rows or a.cols != b.cols:
            return False
        flat_a = tuple(x for row in a.entries for x in row)
        flat_b = tuple(x for row in b.entries for x in row)
    if a.instance.name == "complex":
        return all(abs(x.real - y.real) <= tol and abs(x.imag - y.imag) <= tol
                   for x, y in zip(flat_a, flat_b))
    return flat_a == flat_b


# --- text format --------------------------------------------------------------

def entry_parser(s: SemiringInstance) -> Callable[[str], Any]:
    if s.name == "complex":
        return parse_complex_scalar
    if s.name == "probability":
        return parse_nonneg_rational
    return parse_unit_scalar


def entry_formatter(s: SemiringInstance) -> Callable[[Any], str]:
    if s.name == "complex":
        return format_complex_exact
    return format_rational


def parse_matrix_text(text: str) -> SMatrix:
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(n, line) for n, line in lines if line]
    if not lines:
        raise ParseError("empty matrix text")
    header_no, header = lines[0]
    fields = header.split()
    if len(fields) != 4 or fields[0] != "instance":
        raise ParseError("expected header 'instance <name> <rows> <cols>'", line=header_no)
    try:
        s = make_instance(fields[1])
    except ValueError as exc:
        raise ParseError(str(exc), line=header_no) from None
    try:
        rows, cols = int(fields[2]), int(fields[3])
    except ValueError:
        raise ParseError("non-integer dimensions in header", line=header_no) from None
    if rows < 1 or cols < 1:
        raise ParseError("dimensions must be positive", line=header_no)
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}", line=header_no)
    parse_entry = entry_parser(s)
    grid = []
    for line_no, line in body:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", line=line_no)
        row = []
        for tok in tokens:
            try:
                row.append(parse_entry(tok))
            except ParseError as exc:
                raise ParseError(str(exc), line=line_no) from None
        grid.append(tuple(row))
    return SMatrix(s, tuple(grid))


def serialize_matrix(m: SMatrix, fmt: Callable[[Any], str] | None = None) -> str:
    fmt = entry_formatter(m.instance) if fmt is None else fmt
    lines = [f"instance {m.instance.name} {m.rows} {m.cols}"]
    lines.extend(" ".join(fmt(x) for x in row) for row in m.entries)
    return "\n".join(lines) + "\n"


def as_vector(m: SMatrix) -> SVector:
    """Read a 1-column (or 1-row) matrix as a vector."""
    if m.cols == 1:
        return SVector(m.instance, m.column(0))
    if m.rows == 1:
        return SVector(m.instance, m.entries[0])
    raise ValueError(f"{m.rows}x{m.cols} matrix is not a vector")


def vector_to_matrix(v: SVector) -> SMatrix:
    return SMatrix(v.instance, tuple((x,) for x in v.entries))
