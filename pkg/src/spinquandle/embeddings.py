"""Quandle embeddings and the maps that identify their targets.

Points of S^n act on the right as row vectors, matching ``x . g``; the
conjugation quandle of a group uses ``g ▷ h = h^-1 g h``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from . import groups as grp
from .clifford import CliffordElement, Versor, covering_matrix, volume_element
from .numerics import EPS, ComplexScalar, Matrix, h_matrix, inner_product, is_exact, mat_dist, rot
from .quandle import (ProjectivePoint, QuandleOps, SpherePoint, conj_op, core_op, projective_quandle,
                      reflection_matrix, sphere_quandle, twisted_conj_op)


@dataclass
class EmbeddingMap:
    name: str
    domain: QuandleOps
    codomain: QuandleOps
    evaluator: Callable[[Any], Any]

    def __call__(self, x):
        return self.evaluator(x)


def _require_unit(x: Sequence, dim: int, eps: float = EPS) -> None:
    if len(x) != dim:
        raise ValueError(f"expected a point in R^{dim}, got length {len(x)}")
    norm2 = inner_product(x, x)
    if (norm2 != 1) if is_exact(norm2) else abs(norm2 - 1) > eps:
        raise ValueError(f"not a unit vector: |x|^2 = {norm2}")


# n = 1

def iota_1(p: Sequence, eps: float = EPS) -> Matrix:
    """(cos t, sin t) -> [[cos t, -sin t], [-sin t, -cos t]] in O(2)."""
    _require_unit(p, 2, eps)
    c, s = p
    return Matrix(((c, -s), (-s, -c)))


def script_I1(p: Sequence, eps: float = EPS) -> Matrix:
    """S^1 -> Core(SO(2)), (cos t, sin t) -> rotation by t."""
    _require_unit(p, 2, eps)
    return rot(p[0], p[1])


# orthogonal and Clifford targets

def inn_map(x: Sequence, eps: float = EPS) -> Matrix:
    """S^n -> O(n+1): the matrix 2 x^t x - I of the symmetry S_x."""
    _require_unit(x, len(x), eps)
    return reflection_matrix(x)


def i_n(c: ProjectivePoint) -> Matrix:
    """P^n -> Conj(h_n), through the canonical representative."""
    return reflection_matrix(tuple(c))


def iota_n(x: Sequence, eps: float = EPS) -> Versor:
    """S^n -> Pin+(n+1): (-1)^n * omega * x, omega the unit pseudoscalar of Cl(n+1).

    Sends e_1 to e_2 e_3 ... e_{n+1}; even versor exactly when n is even.
    """
    dim = len(x)
    n = dim - 1
    if n < 2:
        raise ValueError("iota_n is the Clifford embedding for n >= 2; use iota_1 for n = 1")
    _require_unit(x, dim, eps)
    sign = 1 if n % 2 == 0 else -1
    omega = volume_element(dim)
    if not all(is_exact(c) for c in x):
        omega = omega.to_float()
    element = (omega * CliffordElement.from_vector(tuple(x))) * sign
    count = dim + 1
    return Versor(element, "even" if count % 2 == 0 else "odd", count)


def pi_h(u: Versor, eps: float = EPS) -> Matrix:
    """Conj(h~_n) -> Conj(h_n): the covering map restricted to the class."""
    return covering_matrix(u, eps)


# Bergman and Akita

def f_B(g, base) -> grp.SwSemidirectElement:
    """Core G -> Conj((G x G) x|_Sw Z^x), g -> (g, g^-1, -1)."""
    return grp.SwSemidirectElement(g, base.inv(g), -1)


def f_A(g) -> grp.ZSemidirectElement:
    """Conj(G, psi) -> Conj(G x|_psi Z), g -> (g, 1)."""
    return grp.ZSemidirectElement(g, 1)


# n = 3

def script_I2(p: Sequence, eps: float = EPS) -> Matrix:
    """S^3 -> Core(SU(2))."""
    return grp.su2_from_point(p, eps)


def p4(g: Matrix, h: Matrix) -> Matrix:
    """SU(2) x SU(2) -> SO(4), the explicit double cover."""
    x1, x2, x3, x4 = grp.su2_point(g)
    y1, y2, y3, y4 = grp.su2_point(h)
    return Matrix((
        (x1*y1 + x2*y2 + x3*y3 + x4*y4, x1*y2 - x2*y1 - x3*y4 + x4*y3,
         x1*y3 + x2*y4 - x3*y1 - x4*y2, x1*y4 - x2*y3 + x3*y2 - x4*y1),
        (-x1*y2 + x2*y1 - x3*y4 + x4*y3, x1*y1 + x2*y2 - x3*y3 - x4*y4,
         -x1*y4 + x2*y3 + x3*y2 - x4*y1, x1*y3 + x2*y4 + x3*y1 + x4*y2),
        (-x1*y3 + x2*y4 + x3*y1 - x4*y2, x1*y4 + x2*y3 + x3*y2 + x4*y1,
         x1*y1 - x2*y2 + x3*y3 - x4*y4, -x1*y2 - x2*y1 + x3*y4 + x4*y3),
        (-x1*y4 - x2*y3 + x3*y2 + x4*y1, -x1*y3 + x2*y4 - x3*y1 + x4*y2,
         x1*y2 + x2*y1 + x3*y4 + x4*y3, x1*y1 - x2*y2 - x3*y3 + x4*y4),
    ))


def _h3_like(m: Matrix) -> Matrix:
    return h_matrix(3, exact=all(is_exact(e) for e in m.entries))


def pin4_cover(x: grp.SwSemidirectElement) -> Matrix:
    """(SU(2) x SU(2)) x|_Sw Z^x -> O(4).

    Odd elements map to ``h_3 p4(g, h)``; with h_3 on the left the map is
    multiplicative for the Sw product (h_3 p4(g, h) h_3 = p4(h, g)).
    """
    m = p4(x.g, x.h)
    if x.sign == 1:
        return m
    return _h3_like(m) @ m


def H3_tilde(exact: bool = True) -> grp.SwSemidirectElement:
    e = grp.SU2(exact).identity()
    return grp.SwSemidirectElement(e, e, -1)


def s3_point(g: Matrix, h: Matrix) -> SpherePoint:
    """e_1 p4(g, h): the sphere point presented by the pair (g, h)."""
    return SpherePoint(p4(g, h).rows[0], check=False)


def s3_presentation(x: Sequence, eps: float = EPS) -> tuple[Matrix, Matrix]:
    """A pair (g, h) with e_1 p4(g, h) = x; uses g = I_2, h = I_2(x)."""
    h = script_I2(x, eps)
    return grp.SU2(all(is_exact(c) for c in x)).identity(), h


def iota_3(g: Matrix, h: Matrix) -> grp.SwSemidirectElement:
    """e_1 p4(g, h) -> (g, h, 1)^-1 H~_3 (g, h, 1) = (h^-1 g, g^-1 h, -1)."""
    return grp.SwSemidirectElement(grp.su2_inv(h) @ g, grp.su2_inv(g) @ h, -1)


def iota_3_point(x: Sequence, eps: float = EPS) -> grp.SwSemidirectElement:
    return iota_3(*s3_presentation(x, eps))


# codomain quandles

def _flatten_matrix(m: Matrix) -> list[float]:
    out = []
    for e in m.entries:
        if isinstance(e, ComplexScalar):
            out += [float(e.re), float(e.im)]
        else:
            out.append(float(e))
    return out


def matrix_conj_quandle(name: str, exact: bool, group=None) -> QuandleOps:
    """Conj of an orthogonal/unitary matrix group (inverse = (conjugate) transpose)."""
    if group is None:
        inv = lambda a: a.T  # noqa: E731
    else:
        inv = group.inv
    return QuandleOps(
        name=name,
        op=lambda g, h: inv(h) @ g @ h,
        op_inv=lambda g, h: h @ g @ inv(h),
        distance=mat_dist, exact=exact, flatten=_flatten_matrix,
    )


def versor_conj_quandle(dim: int, exact: bool) -> QuandleOps:
    return QuandleOps(
        name=f"Conj(Pin+({dim}))",
        op=lambda u, v: v.inverse() * u * v,
        op_inv=lambda u, v: v * u * v.inverse(),
        distance=lambda a, b: a.dist(b), exact=exact,
        flatten=lambda u: list(u.element.dense()) + [float(u.parity == "odd")],
    )


def group_quandle(kind: str, group, psi=None, exact: bool = False) -> QuandleOps:
    """Conj, Core or twisted-Conj quandle on the elements of ``group``."""
    if kind == "conj":
        op = lambda g, h: conj_op(g, h, group)  # noqa: E731
        op_inv = lambda g, h: group.mul(group.mul(h, g), group.inv(h))  # noqa: E731
        name = f"Conj({group.name})"
    elif kind == "core":
        op = op_inv = lambda g, h: core_op(g, h, group)  # noqa: E731
        name = f"Core({group.name})"
    elif kind == "twisted":
        op = lambda g, h: twisted_conj_op(g, h, psi, group)  # noqa: E731
        # g = psi(h^-1 x) h  =>  x = h psi^-1(g h^-1)
        op_inv = lambda g, h: group.mul(h, psi.apply_inverse(group.mul(g, group.inv(h))))  # noqa: E731
        name = f"Conj({group.name},{psi.name})"
    else:
        raise ValueError(f"unknown quandle kind {kind!r}")
    elements = getattr(group, "elements", None)
    return QuandleOps(name=name, op=op, op_inv=op_inv, distance=group.distance,
                      sampler=getattr(group, "sample", None), exact=exact,
                      elements=elements, flatten=_group_flattener(group))


def _group_flattener(group) -> Callable[[Any], list[float]]:
    def flat(x):
        if isinstance(x, Matrix):
            return _flatten_matrix(x)
        if isinstance(x, grp.SwSemidirectElement):
            return flat(x.g) + flat(x.h) + [float(x.sign)]
        if isinstance(x, (grp.ZSemidirectElement, grp.Z2SemidirectElement)):
            return flat(x.g) + [float(x.m)]
        if isinstance(x, (int, np.integer)):
            return [float(x)]
        raise TypeError(f"cannot flatten {type(x).__name__}")
    return flat


# registry used by the verifier and the CLI

MAP_NAMES = ("iota1", "inn", "i-n", "iota-n", "fB", "fA", "I1", "I2", "iota3")


def build_embedding(name: str, n: int = 2, exact: bool = False, base=None) -> EmbeddingMap:
    """Named embedding with its domain and codomain quandles.

    ``n`` is the sphere dimension where it applies; ``base`` overrides the
    group for fB (default SU(2)) and fA (default SO(2) with psi = Inv).
    """
    if name == "iota1":
        return EmbeddingMap("iota_1", sphere_quandle(1, exact),
                            matrix_conj_quandle("Conj(O(2))", exact), iota_1)
    if name == "inn":
        return EmbeddingMap(f"inn[S^{n}]", sphere_quandle(n, exact),
                            matrix_conj_quandle(f"Conj(O({n + 1}))", exact), inn_map)
    if name == "i-n":
        return EmbeddingMap(f"i_{n}", projective_quandle(n, exact),
                            matrix_conj_quandle(f"Conj(h_{n})", exact), i_n)
    if name == "iota-n":
        return EmbeddingMap(f"iota_{n}", sphere_quandle(n, exact),
                            versor_conj_quandle(n + 1, exact), iota_n)
    if name == "fB":
        g = base if base is not None else grp.SU2(exact)
        target = grp.SwProduct(g)
        return EmbeddingMap(f"f_B[{g.name}]", group_quandle("core", g, exact=exact),
                            group_quandle("conj", target, exact=exact), lambda x: f_B(x, g))
    if name == "fA":
        g = base if base is not None else grp.SO2(exact)
        psi = grp.inversion(g)
        target = grp.ZProduct(g, psi)
        return EmbeddingMap(f"f_A[{g.name},Inv]", group_quandle("twisted", g, psi, exact),
                            group_quandle("conj", target, exact=exact), f_A)
    if name == "I1":
        g = grp.SO2(exact)
        return EmbeddingMap("I_1", sphere_quandle(1, exact), group_quandle("core", g, exact=exact),
                            script_I1)
    if name == "I2":
        g = grp.SU2(exact)
        return EmbeddingMap("I_2", sphere_quandle(3, exact), group_quandle("core", g, exact=exact),
                            script_I2)
    if name == "iota3":
        target = grp.SwProduct(grp.SU2(exact))
        return EmbeddingMap("iota_3", sphere_quandle(3, exact),
                            group_quandle("conj", target, exact=exact), iota_3_point)
    raise ValueError(f"unknown map {name!r}; choose from {', '.join(MAP_NAMES)}")


def conjugate_form(x: Sequence) -> tuple[Matrix, Matrix]:
    """An orthogonal g with e_1 g = x (a Householder reflection) and g^-1 h_n g.

    Independent route to ``inn_map`` through the conjugation definition.
    """
    dim = len(x)
    exact = all(is_exact(c) for c in x)
    one = Fraction(1) if exact else 1.0
    e1 = tuple(one if i == 0 else 0 * one for i in range(dim))
    v = tuple(a - b for a, b in zip(e1, x))
    vv = inner_product(v, v)
    ident = Matrix.identity(dim, exact)
    if (vv == 0) if exact else abs(vv) < 1e-30:
        g = ident
    else:
        g = Matrix(tuple(tuple(ident[i, j] - 2 * v[i] * v[j] / vv for j in range(dim))
                         for i in range(dim)))
    return g, g.T @ h_matrix(dim - 1, exact) @ g
