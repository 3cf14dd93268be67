"""Exact rational dense linear algebra.

Everything here works over fractions.Fraction; no floating point.  Matrices
are small (group orders and truncation windows are desk scale), so plain
Gaussian elimination with exact pivoting is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vector = tuple[Fraction, ...]


def _frac_row(row: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in row)


class RationalMatrix:
    """Immutable matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(_frac_row(r) for r in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged matrix")
        else:
            width = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("RationalMatrix is immutable")

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "RationalMatrix":
        z = Fraction(0)
        return RationalMatrix([[z] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(columns: Sequence[Sequence]) -> "RationalMatrix":
        cols = [tuple(Fraction(x) for x in c) for c in columns]
        if not cols:
            return RationalMatrix([])
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("ragged column list")
        return RationalMatrix([[c[i] for c in cols] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, r)) for r in self.entries]})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self.entries])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries]
        )

    def apply(self, v: Sequence) -> Vector:
        v = _frac_row(v)
        if len(v) != self.cols:
            raise DimensionMismatch("vector length != cols")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RationalMatrix.identity(self.rows)

    def _same_shape(self, other: "RationalMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch")

    # -- elimination -----------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", list[int]]:
        """Reduced row echelon form and pivot column indices."""
        m = [list(r) for r in self.entries]
        nr, nc = self.rows, self.cols
        pivots: list[int] = []
        pr = 0
        for pc in range(nc):
            pivot_row = None
            for i in range(pr, nr):
                if m[i][pc] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            pv = m[pr][pc]
            m[pr] = [x / pv for x in m[pr]]
            for i in range(nr):
                if i != pr and m[i][pc] != 0:
                    f = m[i][pc]
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == nr:
                break
        return RationalMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of the right kernel (free variables set to 1)."""
        R, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -R.entries[r][f]
            basis.append(tuple(v))
        return basis

    def column_space_basis(self) -> list[Vector]:
        """Columns of self forming a basis of the column space."""
        _, pivots = self.rref()
        return [self.column(j) for j in pivots]

    def solve(self, b: Sequence) -> Vector | None:
        """One exact solution of self @ x = b, or None if inconsistent."""
        b = _frac_row(b)
        if len(b) != self.rows:
            raise DimensionMismatch("rhs length != rows")
        aug = RationalMatrix([list(r) + [bb] for r, bb in zip(self.entries, b)])
        R, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = R.entries[r][self.cols]
        return tuple(x)

    def inverse(self) -> "RationalMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of non-square matrix")
        n = self.rows
        aug = RationalMatrix(
            [list(self.entries[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            raise DimensionMismatch("matrix not invertible")
        return RationalMatrix([list(R.entries[i][n:]) for i in range(n)])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def charpoly(self) -> list[Fraction]:
        """Coefficients [c0, ..., cn] of det(xI - A), ascending powers.

        Faddeev-LeVerrier; exact and adequate for the small cores here.
        """
        if self.rows != self.cols:
            raise DimensionMismatch("charpoly of non-square matrix")
        n = self.rows
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        M = RationalMatrix.identity(n)
        A = self
        for k in range(1, n + 1):
            AM = A @ M
            c = -Fraction(sum(AM.entries[i][i] for i in range(n)), k)
            coeffs[n - k] = c
            M = AM + RationalMatrix.identity(n).scale(c)
        return coeffs


def gram_matrix(basis: Sequence[Sequence]) -> RationalMatrix:
    """Matrix of pairwise inner products of the given rational vectors."""
    vs = [_frac_row(v) for v in basis]
    return RationalMatrix(
        [[sum(a * b for a, b in zip(u, v)) for v in vs] for u in vs]
    )
