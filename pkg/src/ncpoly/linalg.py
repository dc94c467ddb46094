"""Dense exact matrices over arbitrary-precision rationals.

Scalars are ``fractions.Fraction`` (always in canonical form: positive
denominator, reduced).  Determinant, rank and kernel computations clear
denominators and delegate to the fraction-free integer routines, so no
floating point enters anywhere.
"""

from fractions import Fraction
from math import lcm

from .errors import DimensionError, RankError
from .intops import bareiss_det, cramer_left_kernel, int_rank

Rational = Fraction


def _as_fraction_rows(entries):
    return tuple(tuple(Fraction(x) for x in row) for row in entries)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = _as_fraction_rows(entries)
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise DimensionError("ragged rows")
        self.entries = entries

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.entries]})"

    def row(self, i):
        return self.entries[i]

    def transpose(self):
        return Matrix(tuple(zip(*self.entries))) if self.rows else Matrix(())

    def __mul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        bt = tuple(zip(*other.entries))
        return Matrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                for row in self.entries
            )
        )


def _clear_row(row):
    """Scale a Fraction row to integers; returns (int row, positive scale)."""
    mult = lcm(*(x.denominator for x in row)) if row else 1
    return tuple(int(x * mult) for x in row), mult


def determinant(m: Matrix) -> Fraction:
    """Exact determinant of a square matrix."""
    if m.rows != m.cols:
        raise DimensionError("determinant needs a square matrix")
    scale = Fraction(1)
    int_rows = []
    for row in m.entries:
        irow, mult = _clear_row(row)
        int_rows.append(irow)
        scale *= mult
    return Fraction(bareiss_det(int_rows)) / scale


def rank(m: Matrix) -> int:
    """Exact rank via fraction-free elimination."""
    return int_rank([_clear_row(row)[0] for row in m.entries])


def kernel_vector(m: Matrix):
    """Left kernel vector of an (r+1) x r matrix of rank r.

    Returns v (tuple of Fractions) with v^T m = 0, unique up to scale,
    normalized so the first nonzero entry equals 1.  Raises RankError if
    rank(m) < cols.
    """
    if m.rows != m.cols + 1:
        raise DimensionError("need exactly one more row than columns")
    # Clearing denominators column by column rescales coordinates, which
    # leaves the left kernel unchanged.
    cols = list(zip(*m.entries)) if m.cols else []
    int_cols = []
    for col in cols:
        mult = lcm(*(x.denominator for x in col))
        int_cols.append(tuple(int(x * mult) for x in col))
    int_rows = list(zip(*int_cols)) if int_cols else [()] * m.rows
    v = cramer_left_kernel(list(int_rows))
    if v is None:
        raise RankError("matrix rank is below its column count")
    lead = next(x for x in v if x)
    return tuple(Fraction(x, lead) for x in v)


def identity(n: int) -> Matrix:
    return Matrix(
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    )
