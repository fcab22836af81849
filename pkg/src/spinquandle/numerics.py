"""Scalars, vectors and small dense matrices in two arithmetic modes.

Exact mode uses :class:`fractions.Fraction` throughout; float mode uses
Python floats compared with an absolute tolerance.  A computation is meant
to stay in one mode: mixing a Fraction with a float silently produces a
float, so constructors here never coerce between the two.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

EPS = 1e-9

Scalar = Union[Fraction, float, int]
Vector = tuple


class DimensionError(ValueError):
    pass


def is_exact(x) -> bool:
    if isinstance(x, (Fraction, int)):
        return True
    if isinstance(x, ComplexScalar):
        return is_exact(x.re) and is_exact(x.im)
    return False


def as_exact(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def scalar_close(a, b, eps: float = EPS) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= eps


def vector(coords: Iterable) -> Vector:
    v = tuple(coords)
    if not v:
        raise DimensionError("zero-dimensional vector")
    return v


def inner_product(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), start=0 if is_exact(x[0]) else 0.0)


def basis_vector(dim: int, i: int, exact: bool = True) -> Vector:
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return tuple(one if j == i else zero for j in range(dim))


def vec_dist(x: Sequence, y: Sequence):
    """Chebyshev distance; exact when both inputs are exact."""
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return max(abs(a - b) for a, b in zip(x, y))


@dataclass(frozen=True)
class ComplexScalar:
    re: Scalar
    im: Scalar

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        if isinstance(other, ComplexScalar):
            return ComplexScalar(self.re * other.re - self.im * other.im,
                                 self.re * other.im + self.im * other.re)
        return ComplexScalar(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.re, -self.im)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def __abs__(self):
        # max-norm of the components keeps exact mode exact
        return max(abs(self.re), abs(self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


@dataclass(frozen=True)
class Matrix:
    """Immutable row-major matrix over Fraction, float or ComplexScalar."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int, exact: bool = True) -> "Matrix":
        return cls(tuple(basis_vector(n, i, exact) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        zero = entries[0] * 0
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        return cls(tuple(zip(*cols)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def entries(self) -> tuple:
        return tuple(e for r in self.rows for e in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def T(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def conj_transpose(self) -> "Matrix":
        return Matrix(tuple(tuple(e.conjugate() for e in col) for col in zip(*self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-e for e in r) for r in self.rows))

    def scale(self, c) -> "Matrix":
        return Matrix(tuple(tuple(c * e for e in r) for r in self.rows))

    def apply_row(self, x: Sequence) -> Vector:
        """Row vector times matrix, ``x @ self``."""
        if len(x) != self.nrows:
            raise DimensionError("row vector length does not match matrix rows")
        return tuple(sum((x[i] * self.rows[i][j] for i in range(self.nrows)), start=x[0] * 0)
                     for j in range(self.ncols))

    def to_float(self) -> "Matrix":
        return Matrix(tuple(tuple(float(e) for e in r) for r in self.rows))

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise DimensionError(f"shape mismatch: {a.nrows}x{a.ncols} @ {b.nrows}x{b.ncols}")
    bt = tuple(zip(*b.rows))
    out = []
    for row in a.rows:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for k in range(1, len(row)):
                acc = acc + row[k] * col[k]
            out_row.append(acc)
        out.append(tuple(out_row))
    return Matrix(tuple(out))


def mat_dist(a: Matrix, b: Matrix):
    """Entrywise max-abs difference."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise DimensionError("shape mismatch")
    return max(abs(x - y) for x, y in zip(a.entries, b.entries))


def matrix_is_exact(m: Matrix) -> bool:
    return all(is_exact(e) for e in m.entries)


def is_orthogonal(m: Matrix, eps: float = EPS) -> bool:
    if m.nrows != m.ncols:
        raise DimensionError("is_orthogonal needs a square matrix")
    exact = matrix_is_exact(m)
    gram = mat_mul(m.T, m)
    ident = Matrix.identity(m.nrows, exact=exact)
    if exact:
        return gram == ident
    return mat_dist(gram, ident) <= eps


def det(m: Matrix):
    """Determinant: Bareiss elimination for exact input, partial-pivot LU otherwise."""
    if m.nrows != m.ncols:
        raise DimensionError("det needs a square matrix")
    if matrix_is_exact(m):
        return _det_bareiss(m)
    return _det_lu(m)


def _det_bareiss(m: Matrix) -> Fraction:
    # scale rows to integers so the Bareiss divisions are exact integer divisions
    a = []
    scale = Fraction(1)
    for row in m.rows:
        den = math.lcm(*(as_exact(e).denominator for e in row))
        a.append([int(as_exact(e) * den) for e in row])
        scale *= den
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def _det_lu(m: Matrix) -> float:
    a = [[float(e) for e in r] for r in m.rows]
    n = len(a)
    d = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0
        if p != k:
            a[k], a[p] = a[p], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return d


def rot(c, s) -> Matrix:
    """Rotation matrix [[c, -s], [s, c]]."""
    return Matrix(((c, -s), (s, c)))


def rot_angle(theta: float) -> Matrix:
    return rot(math.cos(theta), math.sin(theta))


def h_matrix(n: int, exact: bool = True) -> Matrix:
    """diag(1, -1, ..., -1) of size n+1."""
    one = Fraction(1) if exact else 1.0
    return Matrix.diag([one] + [-one] * n)


def inverse_stereographic(q: Sequence) -> Vector:
    """Exact point on the unit n-sphere from a rational n-tuple.

    ``q -> (2q, |q|^2 - 1) / (|q|^2 + 1)``; the image has norm exactly one.
    """
    q = [as_exact(c) for c in q]
    r2 = sum(c * c for c in q)
    den = r2 + 1
    return tuple(2 * c / den for c in q) + ((r2 - 1) / den,)
