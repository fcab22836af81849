"""Property and diagram checkers.  Every check returns a VerificationReport
and is deterministic given its arguments.

``eps`` is the pass tolerance of the report (and the collision radius of the
injectivity checks); input validation always uses the library default.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.spatial import cKDTree

from . import embeddings as emb
from . import groups as grp
from .clifford import Versor, covering_matrix, h_tilde, identity_versor, versor_from_unit_vectors
from .embeddings import EmbeddingMap
from .numerics import EPS, ComplexScalar, Matrix, h_matrix, mat_dist, vec_dist
from .quandle import (ProjectivePoint, SpherePoint, check_axioms, projective_dist,
                      random_sphere_point)
from .report import VerificationReport, dump_reports

__all__ = [
    "VerificationReport", "dump_reports", "check_axioms", "check_hom", "check_injective",
    "check_diagram_63", "check_diagram_72", "check_covering_square", "check_lifted_action",
    "check_kernel_p4", "check_p4_hom", "check_pin4_cover_hom", "check_pin4_vs_inn",
    "check_gamma", "check_iota_G_hom", "check_parity", "check_covering_hom",
    "check_covering_fiber", "check_covering_anchor", "check_abelian_coincidence",
    "random_versor",
]


def _mode(exact: bool) -> str:
    return "exact" if exact else "float"


def _zero(exact: bool):
    return Fraction(0) if exact else 0.0


def _report(name: str, exact: bool, samples: int, seed, eps: float) -> VerificationReport:
    return VerificationReport(name, _mode(exact), samples, seed, _zero(exact), tolerance=eps)


def random_versor(rng: np.random.Generator, dim: int, factors: int, exact: bool = False) -> Versor:
    """Product of ``factors`` random unit vectors of R^dim."""
    vs = [random_sphere_point(rng, dim - 1, exact) for _ in range(factors)]
    return versor_from_unit_vectors(vs, n=dim)


# homomorphism and injectivity

def check_hom(f: EmbeddingMap, samples: int = 1000, seed: int = 0,
              eps: float = EPS) -> VerificationReport:
    """max distance between f(x ▷ y) and f(x) ▷ f(y); exhaustive on finite domains."""
    dom, cod = f.domain, f.codomain
    if dom.elements is not None:
        els = list(dom.elements)
        pairs = [(x, y) for x in els for y in els]
    else:
        rng = np.random.default_rng(seed)
        pairs = [(dom.sampler(rng), dom.sampler(rng)) for _ in range(samples)]
    rep = _report(f"hom[{f.name}]", dom.exact, len(pairs), seed, eps)
    for x, y in pairs:
        try:
            r = cod.distance(f(dom.op(x, y)), cod.op(f(x), f(y)))
        except (ValueError, ArithmeticError) as exc:
            rep.fail(x, y, label=f"error: {exc}")
            continue
        rep.record(r, x, y)
    return rep.finish()


def check_injective(f: EmbeddingMap, samples: int = 1000, seed: int = 0,
                    eps: float = EPS) -> VerificationReport:
    """Distinct inputs must give distinct outputs.

    Sampled domains are stressed with the antipode of every sample when the
    domain defines one.  Exact mode compares outputs by equality.  Float mode
    flags output pairs within ``eps`` (max-norm) whose inputs are more than
    ``10 eps`` apart.
    """
    dom = f.domain
    if dom.elements is not None:
        inputs = list(dom.elements)
    else:
        rng = np.random.default_rng(seed)
        inputs = []
        for _ in range(samples):
            x = dom.sampler(rng)
            inputs.append(x)
            if dom.antipode is not None:
                inputs.append(dom.antipode(x))
    rep = _report(f"injective[{f.name}]", dom.exact, len(inputs), seed, eps)
    outputs = [f(x) for x in inputs]
    if dom.exact:
        seen: dict = {}
        for x, y in zip(inputs, outputs):
            prev = seen.setdefault(y, x)
            if prev is not x and dom.distance(prev, x) != 0:
                rep.fail(prev, x, label="collision")
        return rep.finish()
    flat = np.array([f.codomain.flatten(y) for y in outputs], dtype=float)
    tree = cKDTree(flat)
    for i, j in sorted(tree.query_pairs(r=eps, p=math.inf)):
        if dom.distance(inputs[i], inputs[j]) > 10 * eps:
            rep.fail(inputs[i], inputs[j], label="collision")
    return rep.finish()


# n = 1 diagram

def _circle_samples(rng, samples: int, exact: bool) -> list:
    one = Fraction(1) if exact else 1.0
    return [SpherePoint((one, 0 * one))] + [random_sphere_point(rng, 1, exact)
                                            for _ in range(samples - 1)]


def check_diagram_63(samples: int = 1000, seed: int = 0, exact: bool = False, eps: float = EPS,
                     iota1: Callable = emb.iota_1, I1: Callable = emb.script_I1,
                     gamma: Callable = grp.gamma) -> VerificationReport:
    """Both squares over S^1:
    gamma(iota_1(p)) = f_A(I_1(p)) reduced mod 2, and iota_G(f_A(g)) = f_B(g)
    for g = I_1(p).  The first sample is the base point (1, 0)."""
    so2 = grp.SO2(exact)
    target = grp.Z2Product(so2, grp.inversion(so2))
    sw = grp.SwProduct(so2)
    rng = np.random.default_rng(seed)
    pts = _circle_samples(rng, samples, exact)
    rep = _report("diagram[n=1: O(2) / SO(2) x| Z/2 / Sw]", exact, len(pts), seed, eps)
    for p in pts:
        try:
            left = gamma(iota1(p))
            g = I1(p)
            reduced = grp.reduce_mod2(emb.f_A(g))
            rep.record(target.distance(left, reduced), p, label="gamma o iota_1 vs f_A")
            rep.record(sw.distance(grp.iota_G(reduced, so2), emb.f_B(g, so2)), p,
                       label="iota_G o f_A vs f_B")
        except ValueError as exc:
            rep.fail(p, label=f"error: {exc}")
    # base point: (1, 0) goes to (I_2, 1) on both routes
    base = pts[0]
    ident = so2.identity()
    anchor = grp.Z2SemidirectElement(ident, 1)
    try:
        rep.record(target.distance(gamma(iota1(base)), anchor), base, label="anchor gamma")
        rep.record(target.distance(grp.reduce_mod2(emb.f_A(I1(base))), anchor), base,
                   label="anchor f_A")
    except ValueError as exc:
        rep.fail(base, label=f"error: {exc}")
    return rep.finish()


def _o2_with_det(rng, sign: int, exact: bool) -> Matrix:
    r = grp.SO2(exact).sample(rng)
    if sign == 1:
        return r
    return (grp.J if exact else grp.J.to_float()) @ r


def check_gamma(samples: int = 1000, seed: int = 0, exact: bool = False,
                eps: float = EPS, gamma: Callable = grp.gamma,
                delta: Callable = grp.delta) -> VerificationReport:
    """gamma: O(2) -> SO(2) x|_Inv Z/2 is a homomorphism in each determinant
    case, and gamma/delta are mutually inverse."""
    so2 = grp.SO2(exact)
    target = grp.Z2Product(so2, grp.inversion(so2))
    o2 = grp.O2(exact)
    rng = np.random.default_rng(seed)
    rep = _report("gamma[hom + bijection]", exact, samples, seed, eps)
    cases = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    for i in range(samples):
        s1, s2 = cases[i % 4]
        a, b = _o2_with_det(rng, s1, exact), _o2_with_det(rng, s2, exact)
        try:
            rep.record(target.distance(gamma(a @ b), target.mul(gamma(a), gamma(b))), a, b,
                       label=f"hom det=({s1},{s2})")
            rep.record(o2.distance(delta(gamma(a)), a), a, label="delta o gamma")
            z = target.sample(rng)
            rep.record(target.distance(gamma(delta(z)), z), z, label="gamma o delta")
        except ValueError as exc:
            rep.fail(a, b, label=f"error: {exc}")
    return rep.finish()


def check_iota_G_hom(base, psi=None, samples: int = 1000, seed: int = 0, exact: bool = False,
                     eps: float = EPS) -> VerificationReport:
    """iota_G: G x|_Inv Z/2 -> (G x G) x|_Sw Z^x is a group homomorphism
    (G abelian); exhaustive when ``base`` has finite ``elements``."""
    psi = psi or grp.inversion(base)
    src = grp.Z2Product(base, psi)
    dst = grp.SwProduct(base)
    els = getattr(base, "elements", None)
    if els is not None:
        items = [grp.Z2SemidirectElement(g, m) for g in els for m in (0, 1)]
        pairs = [(a, b) for a in items for b in items]
    else:
        rng = np.random.default_rng(seed)
        pairs = [(src.sample(rng), src.sample(rng)) for _ in range(samples)]
    rep = _report(f"hom[iota_G {base.name}]", exact, len(pairs), seed, eps)
    for a, b in pairs:
        lhs = grp.iota_G(src.mul(a, b), base)
        rhs = dst.mul(grp.iota_G(a, base), grp.iota_G(b, base))
        rep.record(dst.distance(lhs, rhs), a, b)
    return rep.finish()


# n = 3 diagram and the SU(2) x SU(2) cover

def check_diagram_72(samples: int = 1000, seed: int = 0, exact: bool = False, eps: float = EPS,
                     iota3: Callable = emb.iota_3) -> VerificationReport:
    """f_B(I_2(x)^-1) = iota_3(g, h) for x = e_1 p4(g, h), plus the base point
    (g = h = I_2) and, in exact mode, the raw point (2/3, 2/3, 1/3, 0)."""
    su2 = grp.SU2(exact)
    sw = grp.SwProduct(su2)
    rng = np.random.default_rng(seed)
    rep = _report("diagram[n=3: I_2 / f_B / iota_3]", exact, samples, seed, eps)

    def left(x):
        return emb.f_B(su2.inv(emb.script_I2(x)), su2)

    e = su2.identity()
    pairs = [(e, e)] + [(su2.sample(rng), su2.sample(rng)) for _ in range(samples - 1)]
    for g, h in pairs:
        x = emb.s3_point(g, h)
        try:
            rep.record(sw.distance(left(x), iota3(g, h)), g, h)
        except ValueError as exc:
            rep.fail(g, h, label=f"error: {exc}")
    h3 = emb.H3_tilde(exact)
    rep.record(sw.distance(iota3(e, e), h3), e, e, label="anchor iota_3(e_1)")
    rep.record(sw.distance(left(emb.s3_point(e, e)), h3), e, e, label="anchor f_B(e_1)")
    if exact:
        x = SpherePoint((Fraction(2, 3), Fraction(2, 3), Fraction(1, 3), Fraction(0)))
        g, h = emb.s3_presentation(x)
        rep.record(vec_dist(emb.s3_point(g, h), x), x, label="presentation")
        rep.record(sw.distance(left(x), iota3(g, h)), x, label="rational point")
    return rep.finish()


def _binary_tetrahedral() -> list[Matrix]:
    h = Fraction(1, 2)
    pts = []
    for i in range(4):
        for s in (1, -1):
            pts.append(tuple(Fraction(s) if j == i else Fraction(0) for j in range(4)))
    for signs in np.ndindex(2, 2, 2, 2):
        pts.append(tuple(h if b == 0 else -h for b in signs))
    return [grp.su2_from_point(p) for p in pts]


def check_kernel_p4(samples: int = 10_000, seed: int = 0, eps: float = EPS,
                    p4: Callable = emb.p4) -> VerificationReport:
    """Ker p4 = {(I, I), (-I, -I)}: both map to I_4, no other pair among the
    576 pairs of the binary tetrahedral group does, (diag(i, -i), I) does
    not, and no random float pair lands within eps of I_4."""
    rep = VerificationReport("kernel[p4]", "exact", samples, seed, Fraction(0), tolerance=eps)
    i4 = Matrix.identity(4)
    e = grp.SU2(True).identity()
    rep.record(mat_dist(p4(e, e), i4), "I", "I", label="kernel")
    rep.record(mat_dist(p4(e.scale(-1), e.scale(-1)), i4), "-I", "-I", label="kernel")
    d = Matrix(((ComplexScalar(Fraction(0), Fraction(1)), ComplexScalar(Fraction(0), Fraction(0))),
                (ComplexScalar(Fraction(0), Fraction(0)), ComplexScalar(Fraction(0), Fraction(-1)))))
    if mat_dist(p4(d, e), i4) == 0:
        rep.fail(d, e, label="non-kernel maps to I_4")
    group = _binary_tetrahedral()
    hits = [(a, b) for a in group for b in group if mat_dist(p4(a, b), i4) == 0]
    allowed = {(e, e), (e.scale(-1), e.scale(-1))}
    if len(hits) != 2 or set(hits) != allowed:
        rep.fail(len(hits), hits[:4], label="binary tetrahedral kernel")
    rng = np.random.default_rng(seed)
    su2 = grp.SU2(False)
    fi4 = i4.to_float()
    for _ in range(samples):
        g, h = su2.sample(rng), su2.sample(rng)
        if mat_dist(p4(g, h), fi4) <= eps:
            rep.fail(g, h, label="random pair maps to I_4")
    return rep.finish()


def check_p4_hom(samples: int = 1000, seed: int = 0, exact: bool = False,
                 eps: float = EPS, p4: Callable = emb.p4) -> VerificationReport:
    su2 = grp.SU2(exact)
    rng = np.random.default_rng(seed)
    rep = _report("hom[p4]", exact, samples, seed, eps)
    for _ in range(samples):
        g1, h1, g2, h2 = (su2.sample(rng) for _ in range(4))
        rep.record(mat_dist(p4(g1 @ g2, h1 @ h2), p4(g1, h1) @ p4(g2, h2)), g1, h1, g2, h2)
    return rep.finish()


def check_pin4_cover_hom(samples: int = 1000, seed: int = 0, exact: bool = False,
                         eps: float = EPS, cover: Callable = emb.pin4_cover) -> VerificationReport:
    """The cover of the Sw product is multiplicative, sends the identity to I_4
    and H~_3 to h_3.  Sign patterns cycle through all four cases."""
    sw = grp.SwProduct(grp.SU2(exact))
    rng = np.random.default_rng(seed)
    rep = _report("hom[Pin+(4) cover]", exact, samples, seed, eps)
    signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    for i in range(samples):
        a, b = sw.sample(rng), sw.sample(rng)
        a, b = a._replace(sign=signs[i % 4][0]), b._replace(sign=signs[i % 4][1])
        rep.record(mat_dist(cover(sw.mul(a, b)), cover(a) @ cover(b)), a, b,
                   label=f"signs={signs[i % 4]}")
    ident = sw.identity()
    i4 = Matrix.identity(4, exact)
    rep.record(mat_dist(cover(ident), i4), ident, label="identity")
    h3 = emb.H3_tilde(exact)
    rep.record(mat_dist(cover(h3), h_matrix(3, exact)), h3, label="H~_3")
    return rep.finish()


def check_pin4_vs_inn(samples: int = 1000, seed: int = 0, exact: bool = False,
                      eps: float = EPS, cover: Callable = emb.pin4_cover) -> VerificationReport:
    """pin4_cover(iota_3(x)) = inn(x) on S^3."""
    rng = np.random.default_rng(seed)
    rep = _report("cover[iota_3] = inn", exact, samples, seed, eps)
    for _ in range(samples):
        x = random_sphere_point(rng, 3, exact)
        rep.record(mat_dist(cover(emb.iota_3_point(x)), emb.inn_map(x)), x)
    return rep.finish()


# Clifford side

def check_parity(n: int, samples: int = 100, seed: int = 0, exact: bool = True,
                 eps: float = EPS, lift: Callable = emb.iota_n) -> VerificationReport:
    """iota_n(x) is an even versor iff n is even."""
    rng = np.random.default_rng(seed)
    want = "even" if n % 2 == 0 else "odd"
    rep = _report(f"parity[iota_{n}]", exact, samples, seed, eps)
    for _ in range(samples):
        x = random_sphere_point(rng, n, exact)
        if lift(x).parity != want:
            rep.fail(x, label=f"expected {want}")
    return rep.finish()


def check_covering_square(n: int, samples: int = 1000, seed: int = 0, exact: bool = False,
                          eps: float = EPS, lift: Callable = emb.iota_n) -> VerificationReport:
    """pi_h(iota_n(x)) = i_n(pi(x)), checked on x and -x, anchored at e_1."""
    if not 2 <= n <= 8:
        raise ValueError(f"covering square needs 2 <= n <= 8, got {n}")
    rng = np.random.default_rng(seed)
    one = Fraction(1) if exact else 1.0
    e1 = SpherePoint(tuple(one if i == 0 else 0 * one for i in range(n + 1)))
    pts = [e1] + [random_sphere_point(rng, n, exact) for _ in range(samples - 1)]
    rep = _report(f"covering-square[n={n}]", exact, len(pts), seed, eps)
    for x in pts:
        for y in (x, -x):
            try:
                rep.record(mat_dist(emb.pi_h(lift(y)), emb.i_n(ProjectivePoint(y))), y)
            except ValueError as exc:
                rep.fail(y, label=f"error: {exc}")
    hn = h_matrix(n, exact)
    rep.record(mat_dist(emb.pi_h(lift(e1)), hn), e1, label="anchor pi_h")
    rep.record(mat_dist(emb.i_n(ProjectivePoint(e1)), hn), e1, label="anchor i_n")
    return rep.finish()


def check_lifted_action(n: int, samples: int = 1000, seed: int = 0, exact: bool = False,
                        eps: float = EPS, cover: Callable = covering_matrix) -> VerificationReport:
    """Spin(n+1) acting on S^n through the cover: a right action that descends
    to P^n, fixes points under the identity, and realises h_n through h~_n."""
    dim = n + 1
    rng = np.random.default_rng(seed)
    rep = _report(f"lifted-action[n={n}]", exact, samples, seed, eps)

    def act(x, u):
        return cover(u).apply_row(x)

    ident = identity_versor(dim, exact)
    ht = h_tilde(n) if exact else _float_versor(h_tilde(n))
    hn = h_matrix(n, exact)
    for _ in range(samples):
        x = random_sphere_point(rng, n, exact)
        u1, u2 = random_versor(rng, dim, 2, exact), random_versor(rng, dim, 2, exact)
        try:
            rep.record(vec_dist(act(act(x, u1), u2), act(x, u1 * u2)), x, u1, u2,
                       label="associativity")
            rep.record(projective_dist(ProjectivePoint(act(x, u1)),
                                       ProjectivePoint(act(ProjectivePoint(x).representative, u1))),
                       x, u1, label="projective")
            rep.record(vec_dist(act(x, ident), x), x, label="identity")
            rep.record(vec_dist(act(x, ht), hn.apply_row(x)), x, label="h~_n")
        except ValueError as exc:
            rep.fail(x, u1, u2, label=f"error: {exc}")
    return rep.finish()


def _float_versor(u: Versor) -> Versor:
    return Versor(u.element.to_float(), u.parity, u.factor_count)


def check_covering_hom(n: int, samples: int = 1000, seed: int = 0, exact: bool = False,
                       eps: float = EPS, cover: Callable = covering_matrix) -> VerificationReport:
    """covering_matrix(uv) = covering_matrix(u) covering_matrix(v) on Pin+(n)."""
    rng = np.random.default_rng(seed)
    rep = _report(f"hom[cover Pin+({n})]", exact, samples, seed, eps)
    for _ in range(samples):
        u = random_versor(rng, n, int(rng.integers(1, 5)), exact)
        v = random_versor(rng, n, int(rng.integers(1, 5)), exact)
        rep.record(mat_dist(cover(u * v), cover(u) @ cover(v)), u, v)
    return rep.finish()


def check_covering_fiber(n: int, samples: int = 10_000, seed: int = 0, eps: float = EPS,
                         cover: Callable = covering_matrix) -> VerificationReport:
    """Degree two: among sampled versors and their negatives, u and -u share
    an image and no other pair does."""
    rng = np.random.default_rng(seed)
    us = []
    for _ in range(samples):
        u = random_versor(rng, n, int(rng.integers(1, 4)), False)
        us += [u, -u]
    rep = _report(f"fiber[cover Pin+({n})]", False, len(us), seed, eps)
    flat = np.array([list(cover(u).entries) for u in us], dtype=float)
    pairs = cKDTree(flat).query_pairs(r=eps, p=math.inf)
    partners = {i: 0 for i in range(len(us))}
    for i, j in sorted(pairs):
        if _sum_dist(us[i], us[j]) > eps:
            rep.fail(us[i], us[j], label="collision outside {u, -u}")
        partners[i] += 1
        partners[j] += 1
    for i in range(0, len(us), 2):
        if partners[i] == 0:
            rep.fail(us[i], label="u and -u do not collide")
    return rep.finish()


def _sum_dist(u: Versor, v: Versor) -> float:
    """Distance from v to -u, or inf if parities differ."""
    return u.dist(-v)


def check_covering_anchor(n: int) -> VerificationReport:
    """covering_matrix(+-h~_n) = h_n exactly."""
    rep = _report(f"cover[h~_{n}]", True, 2, None, EPS)
    ht = h_tilde(n)
    for u in (ht, -ht):
        rep.record(mat_dist(covering_matrix(u), h_matrix(n)), u)
    return rep.finish()


# finite tables

def check_abelian_coincidence(max_order: int = 16) -> VerificationReport:
    """Core, Conj(Inv) and Alex(Inv) tables agree entrywise on every abelian
    catalog group."""
    from .search import (alexander_table, core_table, group_catalog, inversion_automorphism,
                         twisted_conj_table)
    groups = [g for g in group_catalog(max_order) if g.is_abelian()]
    rep = _report(f"core = Conj(Inv) = Alex(Inv) [order <= {max_order}]", True,
                  len(groups), None, EPS)
    for g in groups:
        inv = inversion_automorphism(g)
        core = core_table(g).table
        for other in (twisted_conj_table(g, inv).table, alexander_table(g, inv).table):
            for x in g.elements:
                for y in g.elements:
                    if core[x][y] != other[x][y]:
                        rep.fail(g.name, x, y, label="entry differs")
    return rep.finish()
