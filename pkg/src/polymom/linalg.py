"""Exact dense linear algebra over arbitrary-precision rationals.

Values are `fractions.Fraction`, which already enforces the canonical reduced
form (positive denominator, gcd 1) in its constructor.  Determinant, rank,
solve and inverse all run fraction-free: every row is scaled to integers once
up front, Bareiss elimination then stays in integers with exact divisions,
and the scaling is undone at the end.  There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import DimensionError, SingularMatrixError


def rat(value) -> Fraction:
    """Coerce ints, strings like "3/4" or "-2", and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("refusing float input; pass an int, string or Fraction")
    return Fraction(value)


def rat_str(value: Fraction) -> str:
    """Serialize a rational as "p/q", or just "p" when q == 1."""
    return str(Fraction(value))


class RatMat:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(rat(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMat is immutable")

    @classmethod
    def from_rows(cls, row_lists) -> "RatMat":
        row_lists = [list(r) for r in row_lists]
        if not row_lists:
            return cls(0, 0, ())
        cols = len(row_lists[0])
        if any(len(r) != cols for r in row_lists):
            raise DimensionError("ragged rows")
        return cls(len(row_lists), cols, [e for r in row_lists for e in r])

    @classmethod
    def identity(cls, n) -> "RatMat":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def at(self, i, j) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMat":
        return RatMat.from_rows([self.column(j) for j in range(self.cols)])

    def matmul(self, other: "RatMat") -> "RatMat":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other.at(k, j) for k in range(self.cols)))
        return RatMat(self.rows, other.cols, out)

    def matvec(self, vec):
        vec = [rat(v) for v in vec]
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} against {self.rows}x{self.cols} matrix")
        return tuple(sum(self.row(i)[k] * vec[k] for k in range(self.cols)) for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, RatMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(e) for e in self.row(i)) for i in range(self.rows))
        return f"RatMat({self.rows}x{self.cols}: {body})"


def _integer_rows(m: RatMat):
    """Scale each row to integers; return (int rows, product of scale factors).

    The scale product divides the determinant of the scaled matrix to recover
    the determinant of the original one.
    """
    rows = []
    scale = Fraction(1)
    for i in range(m.rows):
        denoms = lcm(*(e.denominator for e in m.row(i))) if m.cols else 1
        rows.append([int(e * denoms) for e in m.row(i)])
        scale *= denoms
    return rows, scale


def _bareiss_forward(rows, ncols):
    """Fraction-free elimination with row swaps and column skipping.

    Mutates `rows` into an upper echelon of exact integer minors.  Returns
    (sign, pivot positions).  Entry (i, j) after processing pivot k equals the
    minor on pivot rows/columns extended by row i, column j, divided by the
    previous pivot, so every division below is exact.
    """
    nrows = len(rows)
    sign = 1
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            for j in range(c, ncols):
                rows[i][j] = (rows[i][j] * pivot - ric * rows[r][j]) // prev
        prev = pivot
        pivots.append((r, c))
        r += 1
    return sign, pivots


def det(m: RatMat) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    rows, scale = _integer_rows(m)
    sign, pivots = _bareiss_forward(rows, m.cols)
    if len(pivots) < m.rows:
        return Fraction(0)
    return Fraction(sign * rows[m.rows - 1][m.cols - 1]) / scale


def rank(m: RatMat) -> int:
    """Exact rank via the same fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _integer_rows(m)
    _, pivots = _bareiss_forward(rows, m.cols)
    return len(pivots)


def solve(m: RatMat, b) -> tuple:
    """Solve m x = b exactly for square m; raises SingularMatrixError if singular."""
    if m.rows != m.cols:
        raise DimensionError(f"solve requires a square matrix, got {m.rows}x{m.cols}")
    b = [rat(v) for v in b]
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} against {m.rows}x{m.rows} matrix")
    sols = _solve_many(m, [b])
    return tuple(s[0] for s in sols)


def inverse(m: RatMat) -> RatMat:
    """Exact inverse; raises SingularMatrixError if singular."""
    if m.rows != m.cols:
        raise DimensionError(f"inverse requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    cols = _solve_many(m, [[Fraction(int(i == j)) for i in range(n)] for j in range(n)])
    return RatMat(n, n, [cols[i][j] for i in range(n) for j in range(n)])


def _solve_many(m: RatMat, rhs_list):
    """Forward-eliminate the augmented system once, back-substitute each column.

    Returns a list of rows: result[i][k] is component i of the solution for
    right-hand side k.
    """
    n = m.rows
    k = len(rhs_list)
    aug = RatMat.from_rows(
        [list(m.row(i)) + [rhs[i] for rhs in rhs_list] for i in range(n)]
    )
    rows, _ = _integer_rows(aug)
    _, pivots = _bareiss_forward(rows, n + k)
    pivot_cols = [c for (_, c) in pivots if c < n]
    if len(pivot_cols) < n:
        raise SingularMatrixError("matrix is singular", len(pivot_cols))
    sols = [[Fraction(0)] * k for _ in range(n)]
    for r in range(n - 1, -1, -1):
        c = pivot_cols[r]
        piv = rows[r][c]
        for t in range(k):
            acc = Fraction(rows[r][n + t])
            for j in range(c + 1, n):
                acc -= rows[r][j] * sols[j][t]
            sols[c][t] = acc / piv
    return sols
