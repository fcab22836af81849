"""Concrete groups: O(2), SO(2), SU(2), the three semidirect products built
on a base group, and the structural maps between them.

A base group is any object with ``identity()``, ``mul(a, b)``, ``inv(a)``,
``distance(a, b)`` and (for sampling) ``sample(rng)``.  Matrix groups keep
their elements as plain :class:`~spinquandle.numerics.Matrix` values; the
group object carries the tag.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .numerics import (EPS, ComplexScalar, Matrix, det, is_exact, is_orthogonal, mat_dist,
                       matrix_is_exact, rot)
from .quandle import random_sphere_point


# automorphisms

@dataclass(frozen=True)
class Automorphism:
    """A group automorphism with its inverse and an involutive flag."""

    name: str
    func: Callable
    inverse: Callable
    involutive: bool = False

    def __call__(self, g):
        return self.func(g)

    def apply_inverse(self, g):
        return self.inverse(g)


def identity_automorphism() -> Automorphism:
    ident = lambda g: g  # noqa: E731
    return Automorphism("id", ident, ident, involutive=True)


def inversion(group) -> Automorphism:
    """Inv: g -> g^-1.  A homomorphism only when the group is abelian."""
    return Automorphism("Inv", group.inv, group.inv, involutive=True)


def inner_automorphism(group, a, name: str | None = None) -> Automorphism:
    """g -> a^-1 g a."""
    a_inv = group.inv(a)
    return Automorphism(
        name or f"inn({a!r})",
        lambda g: group.mul(group.mul(a_inv, g), a),
        lambda g: group.mul(group.mul(a, g), a_inv),
    )


def aut_power(psi, g, n: int):
    """psi^n(g) for any integer n."""
    if n >= 0:
        for _ in range(n):
            g = psi(g)
    else:
        for _ in range(-n):
            g = psi.apply_inverse(g)
    return g


# matrix groups

J = Matrix(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1))))


def _unit(exact: bool):
    return (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)


class O2:
    name = "O2"

    def __init__(self, exact: bool = False):
        self.exact = exact

    def identity(self) -> Matrix:
        return Matrix.identity(2, self.exact)

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        return a @ b

    def inv(self, a: Matrix) -> Matrix:
        return a.T

    def distance(self, a: Matrix, b: Matrix):
        return mat_dist(a, b)

    def contains(self, g: Matrix, eps: float = EPS) -> bool:
        return g.nrows == g.ncols == 2 and is_orthogonal(g, eps)

    def sample(self, rng: np.random.Generator) -> Matrix:
        c, s = random_sphere_point(rng, 1, self.exact)
        r = rot(c, s)
        return J @ r if rng.integers(2) else r


class SO2(O2):
    name = "SO2"

    def contains(self, g: Matrix, eps: float = EPS) -> bool:
        if not super().contains(g, eps):
            return False
        d = det(g)
        return d == 1 if is_exact(d) else abs(d - 1) <= eps

    def sample(self, rng: np.random.Generator) -> Matrix:
        c, s = random_sphere_point(rng, 1, self.exact)
        return rot(c, s)


class SU2:
    """SU(2) in the form [[x1 + x2 i, x3 + x4 i], [-x3 + x4 i, x1 - x2 i]]."""

    name = "SU2"

    def __init__(self, exact: bool = False):
        self.exact = exact

    def identity(self) -> Matrix:
        one, zero = _unit(self.exact)
        return su2_from_point((one, zero, zero, zero))

    def mul(self, a: Matrix, b: Matrix) -> Matrix:
        return su2_mul(a, b)

    def inv(self, a: Matrix) -> Matrix:
        return su2_inv(a)

    def distance(self, a: Matrix, b: Matrix):
        return mat_dist(a, b)

    def contains(self, g: Matrix, eps: float = EPS) -> bool:
        try:
            x = su2_point(g)
            return mat_dist(su2_from_point(x, eps), g) <= (0 if matrix_is_exact(g) else eps)
        except (ValueError, AttributeError):
            return False

    def sample(self, rng: np.random.Generator) -> Matrix:
        return su2_from_point(random_sphere_point(rng, 3, self.exact))


def su2_from_point(x: Sequence, eps: float = EPS) -> Matrix:
    if len(x) != 4:
        raise ValueError("SU(2) needs a 4-vector")
    x1, x2, x3, x4 = x
    norm2 = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
    if (norm2 != 1) if is_exact(norm2) else abs(norm2 - 1) > eps:
        raise ValueError(f"not a unit 4-vector: |x|^2 = {norm2}")
    return Matrix(((ComplexScalar(x1, x2), ComplexScalar(x3, x4)),
                   (ComplexScalar(-x3, x4), ComplexScalar(x1, -x2))))


def su2_point(g: Matrix) -> tuple:
    """Coordinates (x1, x2, x3, x4) read off the first row."""
    a, b = g.rows[0]
    return (a.re, a.im, b.re, b.im)


def su2_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def su2_inv(a: Matrix) -> Matrix:
    return a.conj_transpose()


# semidirect products

class SwSemidirectElement(NamedTuple):
    g: object
    h: object
    sign: int


class ZSemidirectElement(NamedTuple):
    g: object
    m: int


class Z2SemidirectElement(NamedTuple):
    g: object
    m: int


def sw_mul(a: SwSemidirectElement, b: SwSemidirectElement, base) -> SwSemidirectElement:
    """(g1, h1, a)(g2, h2, b) = (Sw_b(g1, h1) (g2, h2), ab)."""
    g1, h1 = (a.h, a.g) if b.sign == -1 else (a.g, a.h)
    return SwSemidirectElement(base.mul(g1, b.g), base.mul(h1, b.h), a.sign * b.sign)


def z_mul(a: ZSemidirectElement, b: ZSemidirectElement, psi, base) -> ZSemidirectElement:
    """(g, m)(h, n) = (psi^n(g) h, m + n)."""
    return ZSemidirectElement(base.mul(aut_power(psi, a.g, b.m), b.g), a.m + b.m)


def z2_mul(a: Z2SemidirectElement, b: Z2SemidirectElement, psi, base) -> Z2SemidirectElement:
    if not psi.involutive:
        raise ValueError("G x| Z/2 needs an involutive automorphism")
    g = psi(a.g) if b.m % 2 else a.g
    return Z2SemidirectElement(base.mul(g, b.g), (a.m + b.m) % 2)


class SwProduct:
    """(G x G) x|_Sw Z^x."""

    def __init__(self, base):
        self.base = base
        self.name = f"({base.name}x{base.name})x|Sw Z^x"

    def identity(self) -> SwSemidirectElement:
        e = self.base.identity()
        return SwSemidirectElement(e, e, 1)

    def mul(self, a, b) -> SwSemidirectElement:
        return sw_mul(a, b, self.base)

    def inv(self, a) -> SwSemidirectElement:
        gi, hi = self.base.inv(a.g), self.base.inv(a.h)
        if a.sign == 1:
            return SwSemidirectElement(gi, hi, 1)
        return SwSemidirectElement(hi, gi, -1)

    def distance(self, a, b):
        if a.sign != b.sign:
            return math.inf
        return max(self.base.distance(a.g, b.g), self.base.distance(a.h, b.h))

    def sample(self, rng: np.random.Generator) -> SwSemidirectElement:
        g, h = self.base.sample(rng), self.base.sample(rng)
        return SwSemidirectElement(g, h, 1 if rng.integers(2) else -1)


class ZProduct:
    """G x|_psi Z."""

    def __init__(self, base, psi):
        self.base = base
        self.psi = psi
        self.name = f"{base.name}x|{psi.name} Z"

    def identity(self) -> ZSemidirectElement:
        return ZSemidirectElement(self.base.identity(), 0)

    def mul(self, a, b) -> ZSemidirectElement:
        return z_mul(a, b, self.psi, self.base)

    def inv(self, a) -> ZSemidirectElement:
        # (g, m)^-1 = (psi^-m(g^-1), -m)
        return ZSemidirectElement(aut_power(self.psi, self.base.inv(a.g), -a.m), -a.m)

    def distance(self, a, b):
        if a.m != b.m:
            return math.inf
        return self.base.distance(a.g, b.g)

    def sample(self, rng: np.random.Generator) -> ZSemidirectElement:
        return ZSemidirectElement(self.base.sample(rng), int(rng.integers(-3, 4)))


class Z2Product:
    """G x|_psi Z/2 for an involutive psi."""

    def __init__(self, base, psi):
        if not psi.involutive:
            raise ValueError("G x| Z/2 needs an involutive automorphism")
        self.base = base
        self.psi = psi
        self.name = f"{base.name}x|{psi.name} Z/2"

    def identity(self) -> Z2SemidirectElement:
        return Z2SemidirectElement(self.base.identity(), 0)

    def mul(self, a, b) -> Z2SemidirectElement:
        return z2_mul(a, b, self.psi, self.base)

    def inv(self, a) -> Z2SemidirectElement:
        gi = self.base.inv(a.g)
        return Z2SemidirectElement(self.psi(gi) if a.m else gi, a.m)

    def distance(self, a, b):
        if a.m != b.m:
            return math.inf
        return self.base.distance(a.g, b.g)

    def sample(self, rng: np.random.Generator) -> Z2SemidirectElement:
        return Z2SemidirectElement(self.base.sample(rng), int(rng.integers(2)))


def reduce_mod2(x: ZSemidirectElement) -> Z2SemidirectElement:
    """id x proj: G x| Z -> G x| Z/2."""
    return Z2SemidirectElement(x.g, x.m % 2)


def xi(n: int) -> int:
    """(-1)^n."""
    return -1 if n % 2 else 1


def iota_G(x: Z2SemidirectElement, base) -> SwSemidirectElement:
    """(g, m) -> (g, g^-1, (-1)^m); a homomorphism for abelian G with psi = Inv."""
    return SwSemidirectElement(x.g, base.inv(x.g), xi(x.m))


def gamma(g: Matrix, eps: float = EPS) -> Z2SemidirectElement:
    """O(2) -> SO(2) x|_Inv Z/2: (Inv^a(g J^a), a) with a = (1 - det g)/2."""
    if not is_orthogonal(g, eps):
        raise ValueError("gamma needs an orthogonal 2x2 matrix")
    d = det(g)
    a = 0 if (d == 1 if is_exact(d) else abs(d - 1) <= eps) else 1
    if a == 0:
        return Z2SemidirectElement(g, 0)
    j = J if matrix_is_exact(g) else J.to_float()
    return Z2SemidirectElement((g @ j).T, 1)


def delta(x: Z2SemidirectElement) -> Matrix:
    """Inverse of gamma: (g, a) -> J^a g."""
    if x.m % 2 == 0:
        return x.g
    j = J if matrix_is_exact(x.g) else J.to_float()
    return j @ x.g
