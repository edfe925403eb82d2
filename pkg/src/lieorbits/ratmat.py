"""Exact rational vectors and matrices.

Everything in this package funnels through the two operations here: exact
linear solves and Gram-orthogonal splits.  Scalars are fractions.Fraction
(`Rat`), which already guarantees lowest terms and a positive denominator,
so no rounding can ever occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence

from .errors import DependentBasis, SingularMatrix

Rat = Fraction
Vector = tuple[Fraction, ...]


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class RatMatrix:
    """Immutable row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RatMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return RatMatrix(r, c, tuple(Fraction(x) for row in rows for x in row))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix.build(n, n, lambda i, j: Fraction(int(i == j)))

    @staticmethod
    def build(rows: int, cols: int, fn: Callable[[int, int], Fraction]) -> "RatMatrix":
        return RatMatrix(rows, cols, tuple(Fraction(fn(i, j)) for i in range(rows) for j in range(cols)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def mat_vec(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(self[i, j] * v[j] for j in range(self.cols)) for i in range(self.rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return RatMatrix.build(
            self.rows,
            other.cols,
            lambda i, j: sum(self[i, k] * other[k, j] for k in range(self.cols)),
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.build(self.cols, self.rows, lambda i, j: self[j, i])

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols)
        )

    def int_rows(self) -> list[list[int]] | None:
        """Plain-int row lists when every entry is integral, else None."""
        if any(e.denominator != 1 for e in self.entries):
            return None
        return [[int(x) for x in self.row(i)] for i in range(self.rows)]


def intify(v: Sequence) -> tuple[list[int], int]:
    """Scale a rational vector to integers: returns (d*v as ints, d)."""
    if all(type(x) is int for x in v):
        return list(v), 1
    fracs = [Fraction(x) for x in v]
    d = 1
    for x in fracs:
        d = lcm(d, x.denominator)
    return [x.numerator * (d // x.denominator) for x in fracs], d


def rat_solve(a: RatMatrix, b: Sequence[Fraction]) -> Vector:
    """Solve a*x = b exactly for square a.

    Gaussian elimination with the first nonzero pivot; exact arithmetic has
    no stability concerns.  Raises SingularMatrix when a is not invertible.
    """
    if a.rows != a.cols:
        raise ValueError("rat_solve needs a square matrix")
    n = a.rows
    if len(b) != n:
        raise ValueError("right-hand side length mismatch")
    m = a.row_list()
    rhs = [Fraction(x) for x in b]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            rhs[col], rhs[pivot_row] = rhs[pivot_row], rhs[col]
        piv = m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / piv
            if factor == 0:
                continue
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
            rhs[r] -= factor * rhs[col]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = rhs[i] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = acc / m[i][i]
    return tuple(x)


def matrix_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the row span, by exact elimination."""
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col] / piv
            if factor != 0:
                for c in range(col, ncols):
                    rows[r][c] -= factor * rows[rank][c]
        rank += 1
    return rank


def span_coefficients(gram: RatMatrix, basis: Sequence[Vector], v: Sequence[Fraction]) -> Vector:
    """Coefficients c with gram-projection of v onto span(basis) = sum c_i basis_i.

    Requires gram positive definite on the ambient space, so the small Gram
    matrix of the basis is singular exactly when the basis is dependent.
    """
    if not basis:
        return ()

    def form(u: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
        gw = gram.mat_vec(w)
        return sum(a * b for a, b in zip(u, gw, strict=True))

    small = RatMatrix.build(len(basis), len(basis), lambda i, j: form(basis[i], basis[j]))
    rhs = tuple(form(s, v) for s in basis)
    try:
        return rat_solve(small, rhs)
    except SingularMatrix as exc:
        raise DependentBasis("subspace vectors are linearly dependent") from exc


def gram_split(gram: RatMatrix, subspace: Sequence[Vector], v: Sequence[Fraction]) -> tuple[Vector, Vector]:
    """Split v = v_in + v_perp with v_in in span(subspace), gram(v_perp, s) = 0.

    With an empty subspace this is (0, v); with a spanning one, (v, 0).
    """
    v = as_vector(v)
    coeffs = span_coefficients(gram, subspace, v)
    v_in = zero_vector(len(v))
    for c, s in zip(coeffs, subspace, strict=True):
        v_in = vec_add(v_in, vec_scale(c, s))
    return v_in, vec_sub(v, v_in)
