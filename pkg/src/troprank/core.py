"""Exact min-plus (tropical) scalars and matrices.

All arithmetic happens in the tropical semiring (R, min, +), with scalars
represented as exact ``fractions.Fraction`` values.  There is deliberately no
floating point anywhere: singularity of a tropical determinant means an exact
tie between minima, which floats cannot certify.  There is also no +/-infinity
element; every entry is a finite rational, and the min-plus convention is
fixed (negate your data yourself if you think in max-plus).

``TropMatrix`` is immutable; every operation returns a new value, so
everything in this package is safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Union[Fraction, int, str]


class ShapeError(ValueError):
    """Operand shapes do not conform."""


class DomainError(ValueError):
    """Input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A desk-scale guard or search budget was exceeded."""


class InternalInvariantError(RuntimeError):
    """A certified internal property failed to verify; indicates a bug."""


def rat(x: Rational) -> Fraction:
    """Coerce to an exact rational.  Floats are rejected, never rounded."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise DomainError(
            "float scalars are not accepted; pass Fraction, int or 'p/q' string"
        )
    raise DomainError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x: Fraction) -> str:
    """Serialize a rational as 'p' or 'p/q' with q > 0, reduced."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class TropMatrix:
    """Immutable dense d x n matrix of exact rationals with (min, +) semantics."""

    __slots__ = ("_rows", "d", "n")

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        grid = tuple(tuple(rat(x) for x in row) for row in rows)
        if not grid or not grid[0]:
            raise ShapeError("matrix must have at least one row and one column")
        n = len(grid[0])
        if any(len(row) != n for row in grid):
            raise ShapeError("rows have unequal lengths")
        object.__setattr__(self, "_rows", grid)
        object.__setattr__(self, "d", len(grid))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("TropMatrix is immutable")

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable[Rational]]) -> "TropMatrix":
        cols = [tuple(rat(x) for x in c) for c in cols]
        return cls(zip(*cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.d, self.n)

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.n)]

    def transpose(self) -> "TropMatrix":
        return TropMatrix(zip(*self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "TropMatrix":
        return TropMatrix(
            tuple(self._rows[i][j] for j in cols) for i in rows
        )

    def is_square(self) -> bool:
        return self.d == self.n

    def shift_row(self, i: int, c: Rational) -> "TropMatrix":
        c = rat(c)
        return TropMatrix(
            tuple(x + c for x in row) if k == i else row
            for k, row in enumerate(self._rows)
        )

    def shift_col(self, j: int, c: Rational) -> "TropMatrix":
        c = rat(c)
        return TropMatrix(
            tuple(x + c if k == j else x for k, x in enumerate(row))
            for row in self._rows
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, TropMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rat_str(x) for x in row) for row in self._rows
        )
        return f"TropMatrix[{body}]"


def trop_matmul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Min-plus product: entry (i,j) = min_k (a_ik + b_kj)."""
    if a.n != b.d:
        raise ShapeError(f"inner dimensions differ: {a.shape} vs {b.shape}")
    bt = b.transpose().entries
    return TropMatrix(
        tuple(min(x + y for x, y in zip(row, col)) for col in bt)
        for row in a.entries
    )


def trop_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Entrywise minimum."""
    if a.shape != b.shape:
        raise ShapeError(f"shapes differ: {a.shape} vs {b.shape}")
    return TropMatrix(
        tuple(min(x, y) for x, y in zip(ra, rb))
        for ra, rb in zip(a.entries, b.entries)
    )


def normalize_projective(v: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Canonical representative in TP^(d-1): subtract the minimum coordinate.

    The result has minimum coordinate 0 and the map is idempotent; two vectors
    differing by a constant multiple of (1,...,1) normalize identically.
    """
    w = tuple(rat(x) for x in v)
    if not w:
        raise ShapeError("empty vector")
    m = min(w)
    return tuple(x - m for x in w)


def rank_one_factor(
    m: TropMatrix,
) -> Optional[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Factor m as an outer min-plus product x_i + y_j if one exists.

    Returns (x, y) with x_i + y_j = m_ij everywhere and y[0] = 0, or None.
    Such a factorization exists iff every 2x2 minor satisfies
    m_ij + m_kl = m_il + m_kj.
    """
    x = tuple(m[i, 0] for i in range(m.d))
    y = tuple(m[0, j] - m[0, 0] for j in range(m.n))
    for i in range(m.d):
        for j in range(m.n):
            if x[i] + y[j] != m[i, j]:
                return None
    return x, y


def classical_identity(n: int) -> TropMatrix:
    """The n x n matrix with 1 on the diagonal and 0 elsewhere.

    Looks like a unit matrix classically, but is nothing of the sort in
    min-plus arithmetic; it is the standard example separating the notions
    of matrix rank implemented in this package.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    one, zero = Fraction(1), Fraction(0)
    return TropMatrix(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )
