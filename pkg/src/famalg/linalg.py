"""Exact rational matrices and fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import as_fraction, format_fraction


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class QMatrix:
    """Dense immutable matrix of Fractions."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], ncols: int | None = None) -> "QMatrix":
        data = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(data, ncols)

    @classmethod
    def zeros(cls, m: int, n: int) -> "QMatrix":
        return cls(tuple((Fraction(0),) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diag(cls, values: Sequence[object]) -> "QMatrix":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "QMatrix":
        m, n = self.shape
        return QMatrix(tuple(tuple(self.rows[i][j] for i in range(m)) for j in range(n)), m)

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "QMatrix":
        c = as_fraction(c)
        return QMatrix(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(n)]
        return QMatrix(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.rows),
            n,
        )

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def rank(self) -> int:
        return len(_echelon(self.rows, self.ncols)[1])

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        return nullspace(self)

    def det(self) -> Fraction:
        m, n = self.shape
        if m != n:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.rows)

    def inverse(self) -> "QMatrix":
        m, n = self.shape
        if m != n:
            raise SingularMatrixError("non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = _rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n or any(p >= n for p in pivots[:n]):
            raise SingularMatrixError("matrix is singular")
        return QMatrix(tuple(tuple(red[i][n:]) for i in range(n)), n)

    def to_strings(self) -> list[list[str]]:
        return [[format_fraction(a) for a in r] for r in self.rows]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(a).denominator for a in r)) if r else 1
        out.append([int(Fraction(a) * den) for a in r])
    return out


def _echelon(rows, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) forward elimination on an integer copy.

    Returns the echelon rows (integers) and the pivot columns.
    """
    a = _integer_rows(rows)
    m = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            # exact division by the previous pivot (Sylvester identity)
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        # entries left of column c in rows below stay zero
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def _bareiss_det(rows) -> Fraction:
    n = len(rows)
    dens = [lcm(*(Fraction(x).denominator for x in r)) if r else 1 for r in rows]
    a = _integer_rows(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    det = Fraction(sign * a[n - 1][n - 1]) if n else Fraction(1)
    total_den = 1
    for d in dens:
        total_den *= d
    return det / total_den


def _rref(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form: Bareiss elimination, then exact back-substitution."""
    ech, pivots = _echelon(rows, ncols)
    red = [[Fraction(x) for x in row] for row in ech[: len(pivots)]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        pv = red[r][c]
        red[r] = [x / pv for x in red[r]]
        for i in range(r):
            f = red[i][c]
            if f:
                red[i] = [x - f * y for x, y in zip(red[i], red[r])]
    return red, pivots


def nullspace(M: QMatrix | Sequence[Sequence[object]], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Exact basis of ``{v : M v = 0}``, one vector per free column (free entry = 1)."""
    if isinstance(M, QMatrix):
        rows, n = M.rows, M.ncols
    else:
        rows = [[as_fraction(x) for x in r] for r in M]
        n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    red, pivots = _rref(rows, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a list of row vectors."""
    if not vectors:
        return 0
    return len(_echelon(vectors, len(vectors[0]))[1])


def solve(M: QMatrix, b: Sequence[object]) -> tuple[Fraction, ...] | None:
    """One exact solution of ``M x = b`` or ``None`` when inconsistent."""
    m, n = M.shape
    aug = [list(r) + [as_fraction(bi)] for r, bi in zip(M.rows, b)]
    red, pivots = _rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return tuple(x)
