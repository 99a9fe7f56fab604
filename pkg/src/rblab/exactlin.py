"""Exact linear algebra over the rationals.

Scalars are `fractions.Fraction`; nothing in this package ever touches
floating point.  Matrices are immutable, dense, row-major.  Rank,
inverse and kernel use plain Gaussian elimination, taking the first
nonzero entry of the remaining column as pivot; over Q the only concern
is exactness, not stability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce an int, string like "-2/3", or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows) -> "Matrix":
        data = [[rat(x) for x in r] for r in rows]
        nr = len(data)
        nc = len(data[0]) if nr else 0
        if any(len(r) != nc for r in data):
            raise ValueError("ragged rows")
        return Matrix(nr, nc, tuple(x for r in data for x in r))

    @staticmethod
    def zero(rows, cols) -> "Matrix":
        z = Fraction(0)
        return Matrix(rows, cols, (z,) * (rows * cols))

    @staticmethod
    def identity(n) -> "Matrix":
        one, z = Fraction(1), Fraction(0)
        return Matrix(n, n, tuple(one if i == j else z
                                  for i in range(n) for j in range(n)))

    def at(self, i, j) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __add__(self, other):
        return mat_add(self, other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return scalar_mul(rat(other), self)

    def __rmul__(self, other):
        return scalar_mul(rat(other), self)

    def __neg__(self):
        return scalar_mul(Fraction(-1), self)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch in mat_add")
    return Matrix(a.rows, a.cols,
                  tuple(x + y for x, y in zip(a.entries, b.entries)))


def scalar_mul(c, m: Matrix) -> Matrix:
    c = rat(c)
    return Matrix(m.rows, m.cols, tuple(c * x for x in m.entries))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError("shape mismatch in mat_mul")
    bt = [b.entries[j::b.cols] for j in range(b.cols)]  # columns of b
    out = []
    for i in range(a.rows):
        ra = a.row(i)
        for col in bt:
            out.append(sum(x * y for x, y in zip(ra, col)))
    return Matrix(a.rows, b.cols, tuple(out))


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.cols, m.rows,
                  tuple(m.at(i, j) for j in range(m.cols) for i in range(m.rows)))


def rank(m: Matrix) -> int:
    """Rank by forward elimination, first nonzero pivot in each column."""
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    r = 0
    for c in range(nc):
        p = None
        for i in range(r, nr):
            if a[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r]
        pivval = piv[c]
        for i in range(r + 1, nr):
            f = a[i][c]
            if f:
                f = f / pivval
                row = a[i]
                for j in range(c, nc):
                    row[j] -= f * piv[j]
        r += 1
        if r == nr:
            break
    return r


def _rref(m: Matrix):
    """Reduced row echelon form; returns (rows as lists, pivot column list)."""
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        p = None
        for i in range(r, nr):
            if a[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        piv = a[r]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], piv)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def kernel_basis(m: Matrix):
    """Basis of the right kernel {v : m v = 0}, one vector per free column."""
    a, pivots = _rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][free]
        basis.append(tuple(v))
    return tuple(basis)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises ValueError if singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    a = [list(m.row(i)) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        p = None
        for i in range(c, n):
            if a[i][c] != 0:
                p = i
                break
        if p is None:
            raise ValueError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = Fraction(1) / a[c][c]
        a[c] = [x * inv for x in a[c]]
        piv = a[c]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], piv)]
    return Matrix.from_rows([row[n:] for row in a])
