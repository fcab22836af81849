"""Clifford algebra Cl(n) with e_i^2 = +1 and its versor groups.

Blades are bitmasks: bit ``i`` set means generator ``e_{i+1}`` is present.
Even unit versors form Spin(n); all unit versors form Pin+(n).  The double
cover onto O(n) is the twisted adjoint ``x -> alpha(u) x u^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .numerics import EPS, DimensionError, Matrix, is_exact

MAX_DIM = 12


def _grade(mask: int) -> int:
    return mask.bit_count()


class CliffordElement:
    """Sparse multivector: ``terms`` maps blade bitmask to coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        if not 1 <= n <= MAX_DIM:
            raise DimensionError(f"algebra dimension must be in 1..{MAX_DIM}, got {n}")
        size = 1 << n
        clean = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < size:
                raise DimensionError(f"blade {mask:#b} outside Cl({n})")
            if c != 0:
                clean[mask] = c
        self.n = n
        self.terms = clean

    @classmethod
    def scalar(cls, n: int, c=Fraction(1)) -> "CliffordElement":
        return cls(n, {0: c})

    @classmethod
    def blade(cls, n: int, generators: Iterable[int], coeff=Fraction(1)) -> "CliffordElement":
        """Product ``e_{g1} e_{g2} ...`` of 1-based generator indices, in the given order."""
        out = cls.scalar(n, coeff)
        for g in generators:
            out = out * cls(n, {1 << (g - 1): Fraction(1)})
        return out

    @classmethod
    def from_vector(cls, coords: Sequence) -> "CliffordElement":
        return cls(len(coords), {1 << i: c for i, c in enumerate(coords)})

    @property
    def exact(self) -> bool:
        return all(is_exact(c) for c in self.terms.values())

    def grades(self) -> set[int]:
        return {_grade(m) for m in self.terms}

    def grade_part(self, k: int) -> "CliffordElement":
        return CliffordElement(self.n, {m: c for m, c in self.terms.items() if _grade(m) == k})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return geometric_product(self, other)
        return CliffordElement(self.n, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other):
        return CliffordElement(self.n, {m: other * c for m, c in self.terms.items()})

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        _check_dims(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CliffordElement(self.n, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (_grade(m), m)):
            gens = "".join(f"e{i + 1}" for i in range(self.n) if m >> i & 1)
            parts.append(f"{self.terms[m]}{'*' + gens if gens else ''}")
        return " + ".join(parts)

    def dense(self) -> np.ndarray:
        out = np.zeros(1 << self.n)
        for m, c in self.terms.items():
            out[m] = float(c)
        return out

    def to_float(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: float(c) for m, c in self.terms.items()})

    def normalized(self, eps: float = EPS) -> "CliffordElement":
        """Drop float coefficients with magnitude below ``eps``."""
        return CliffordElement(self.n, {m: c for m, c in self.terms.items()
                                        if is_exact(c) or abs(c) > eps})

    def vector_coords(self) -> tuple:
        zero = Fraction(0) if self.exact else 0.0
        return tuple(self.terms.get(1 << i, zero) for i in range(self.n))

    def dist(self, other: "CliffordElement"):
        _check_dims(self, other)
        keys = self.terms.keys() | other.terms.keys()
        if not keys:
            return Fraction(0)
        return max(abs(self.terms.get(m, 0) - other.terms.get(m, 0)) for m in keys)


def _check_dims(a: CliffordElement, b: CliffordElement) -> None:
    if a.n != b.n:
        raise DimensionError(f"Cl({a.n}) and Cl({b.n}) elements cannot be combined")


def geometric_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    _check_dims(a, b)
    if a.exact and b.exact:
        out: dict = {}
        sign = kernels.blade_sign
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = ma ^ mb
                out[m] = out.get(m, 0) + sign(ma, mb) * ca * cb
        return CliffordElement(a.n, out)
    am = np.fromiter(a.terms.keys(), dtype=np.int64, count=len(a.terms))
    ac = np.fromiter((float(c) for c in a.terms.values()), dtype=float, count=len(a.terms))
    bm = np.fromiter(b.terms.keys(), dtype=np.int64, count=len(b.terms))
    bc = np.fromiter((float(c) for c in b.terms.values()), dtype=float, count=len(b.terms))
    dense = kernels.gp_float(am, ac, bm, bc, 1 << a.n)
    nz = np.flatnonzero(dense)
    return CliffordElement(a.n, {int(m): float(dense[m]) for m in nz})


def grade_involution(a: CliffordElement) -> CliffordElement:
    return CliffordElement(a.n, {m: (-c if _grade(m) & 1 else c) for m, c in a.terms.items()})


def reverse(a: CliffordElement) -> CliffordElement:
    def flip(k: int) -> bool:
        return (k * (k - 1) // 2) & 1 == 1
    return CliffordElement(a.n, {m: (-c if flip(_grade(m)) else c) for m, c in a.terms.items()})


def volume_element(n: int) -> CliffordElement:
    return CliffordElement(n, {(1 << n) - 1: Fraction(1)})


@dataclass(frozen=True)
class Versor:
    """Unit versor: a product of ``factor_count`` unit vectors."""

    element: CliffordElement
    parity: str
    factor_count: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if (self.factor_count % 2 == 0) != (self.parity == "even"):
            raise ValueError("parity does not match factor count")

    @property
    def n(self) -> int:
        return self.element.n

    def __mul__(self, other: "Versor") -> "Versor":
        count = self.factor_count + other.factor_count
        return Versor(self.element * other.element, _parity(count), count)

    def __neg__(self) -> "Versor":
        return Versor(-self.element, self.parity, self.factor_count)

    def inverse(self) -> "Versor":
        return Versor(reverse(self.element), self.parity, self.factor_count)

    def dist(self, other: "Versor"):
        if self.parity != other.parity:
            return float("inf")
        return self.element.dist(other.element)


def _parity(count: int) -> str:
    return "even" if count % 2 == 0 else "odd"


def identity_versor(n: int, exact: bool = True) -> Versor:
    return Versor(CliffordElement.scalar(n, Fraction(1) if exact else 1.0), "even", 0)


def versor_from_unit_vectors(vs: Sequence[Sequence], n: int | None = None,
                             eps: float = EPS) -> Versor:
    """Geometric product of the given unit vectors, left to right."""
    if not vs:
        if n is None:
            raise ValueError("dimension required for the empty product")
        return identity_versor(n)
    dim = len(vs[0])
    if n is not None and n != dim:
        raise DimensionError(f"vectors of length {dim} do not live in Cl({n})")
    exact = all(is_exact(c) for v in vs for c in v)
    out = CliffordElement.scalar(dim, Fraction(1) if exact else 1.0)
    for v in vs:
        if len(v) != dim:
            raise DimensionError("vectors of differing dimension")
        norm2 = sum(c * c for c in v)
        if (norm2 != 1) if exact else abs(norm2 - 1) > eps:
            raise ValueError(f"not a unit vector: |v|^2 = {norm2}")
        out = out * CliffordElement.from_vector(v)
    return Versor(out, _parity(len(vs)), len(vs))


def h_tilde(n: int) -> Versor:
    """The fixed lift e_2 e_3 ... e_{n+1} in Cl(n+1) of diag(1, -1, ..., -1)."""
    dim = n + 1
    vs = [tuple(Fraction(int(j == i)) for j in range(dim)) for i in range(1, dim)]
    return versor_from_unit_vectors(vs, n=dim)


def twisted_adjoint(u: Versor, x: Sequence, eps: float = EPS) -> tuple:
    """Vector part of ``alpha(u) x u^-1``; raises if the result is not a vector."""
    if len(x) != u.n:
        raise DimensionError(f"vector of length {len(x)} in Cl({u.n})")
    y = grade_involution(u.element) * CliffordElement.from_vector(x) * reverse(u.element)
    stray = [c for m, c in y.terms.items() if _grade(m) != 1]
    if stray:
        exact = y.exact
        if exact or max(abs(c) for c in stray) > eps:
            raise ValueError("twisted adjoint left grade 1; input is not a unit versor")
    return y.vector_coords()


def covering_matrix(u: Versor, eps: float = EPS) -> Matrix:
    """Matrix of the image of ``u`` in O(n); column j is the image of e_j."""
    exact = u.element.exact
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    cols = []
    for j in range(u.n):
        e = tuple(one if i == j else zero for i in range(u.n))
        cols.append(twisted_adjoint(u, e, eps))
    return Matrix.from_columns(cols)
