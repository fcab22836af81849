"""Finite groups, their automorphisms, and a catalog scan for quandle
isomorphisms Core G ~ Conj(H, psi)."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

import numpy as np

from . import kernels
from .quandle import FiniteQuandle, cycle_type, inner_orbits

MAX_CATALOG_ORDER = 16


class FiniteGroup:
    """Group on {0..k-1} given by its Cayley table."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "", validate: bool = True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.name = name
        k = len(self.table)
        if validate:
            _check_group_table(self.table)
        self.identity_index = next(e for e in range(k)
                                   if all(self.table[e][x] == x for x in range(k)))
        e = self.identity_index
        self.inverse = tuple(next(y for y in range(k) if self.table[x][y] == e) for x in range(k))

    @classmethod
    def from_elements(cls, elements: Sequence, mul: Callable, name: str = "") -> "FiniteGroup":
        index = {e: i for i, e in enumerate(elements)}
        return cls([[index[mul(a, b)] for b in elements] for a in elements], name=name)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def identity(self) -> int:
        return self.identity_index

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def distance(self, a: int, b: int) -> Fraction:
        return Fraction(int(a != b))

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.order))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, x: int) -> int:
        n, y = 1, x
        while y != self.identity_index:
            y = self.table[y][x]
            n += 1
        return n

    def subgroup_closure(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity_index}
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generators(self) -> list[int]:
        """Small generating set, chosen greedily by element order."""
        gens: list[int] = []
        sub = {self.identity_index}
        by_order = sorted(self.elements, key=lambda x: (-self.element_order(x), x))
        while len(sub) < self.order:
            g = next(x for x in by_order if x not in sub)
            gens.append(g)
            sub = self.subgroup_closure(gens)
        return gens

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or self.order})"


def _check_group_table(t: tuple) -> None:
    k = len(t)
    if k == 0 or any(len(r) != k for r in t):
        raise ValueError("Cayley table must be a non-empty square array")
    full = set(range(k))
    for r in t:
        if set(r) != full:
            raise ValueError("Cayley table rows are not permutations")
    for c in range(k):
        if {t[r][c] for r in range(k)} != full:
            raise ValueError("Cayley table columns are not permutations")
    for a in range(k):
        for b in range(k):
            ab = t[a][b]
            for c in range(k):
                if t[ab][c] != t[a][t[b][c]]:
                    raise ValueError(f"not associative at {(a, b, c)}")
    if not any(all(t[e][x] == x == t[x][e] for x in range(k)) for e in range(k)):
        raise ValueError("no identity element")


# constructors

def cyclic(k: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % k for b in range(k)] for a in range(k)], name=f"Z{k}")


def dihedral(k: int) -> FiniteGroup:
    """Symmetries of the k-gon, order 2k; element r^i s^j."""
    els = [(i, j) for j in range(2) for i in range(k)]

    def mul(a, b):
        (i, j), (p, q) = a, b
        return ((i + (p if j == 0 else -p)) % k, (j + q) % 2)

    return FiniteGroup.from_elements(els, mul, name=f"D{k}")


def quaternion_group() -> FiniteGroup:
    """Q8 as the unit quaternions +-1, +-i, +-j, +-k."""
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    els = [tuple(s * c for c in u) for u in units for s in (1, -1)]

    def qmul(a, b):
        a1, a2, a3, a4 = a
        b1, b2, b3, b4 = b
        return (a1*b1 - a2*b2 - a3*b3 - a4*b4,
                a1*b2 + a2*b1 + a3*b4 - a4*b3,
                a1*b3 - a2*b4 + a3*b1 + a4*b2,
                a1*b4 + a2*b3 - a3*b2 + a4*b1)

    return FiniteGroup.from_elements(els, qmul, name="Q8")


def symmetric(n: int) -> FiniteGroup:
    els = list(itertools.permutations(range(n)))
    return FiniteGroup.from_elements(els, lambda p, q: tuple(p[i] for i in q), name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    els = [p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1]
    return FiniteGroup.from_elements(els, lambda p, q: tuple(p[i] for i in q), name=f"A{n}")


def _perm_sign(p: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    kb = b.order
    table = [[a.table[x // kb][y // kb] * kb + b.table[x % kb][y % kb]
              for y in range(a.order * kb)] for x in range(a.order * kb)]
    return FiniteGroup(table, name=f"{a.name}x{b.name}", validate=False)


# homomorphisms between finite groups

def _extend(g1: FiniteGroup, g2: FiniteGroup, gens: Sequence[int], images: Sequence[int]):
    """Unique map with phi(x g_i) = phi(x) images_i, or None if inconsistent."""
    phi = {g1.identity_index: g2.identity_index}
    frontier = [g1.identity_index]
    while frontier:
        nxt = []
        for x in frontier:
            for g, im in zip(gens, images):
                y = g1.table[x][g]
                val = g2.table[phi[x]][im]
                if y in phi:
                    if phi[y] != val:
                        return None
                else:
                    phi[y] = val
                    nxt.append(y)
        frontier = nxt
    return phi


def isomorphisms(g1: FiniteGroup, g2: FiniteGroup, first_only: bool = False) -> Iterator[tuple]:
    """Group isomorphisms g1 -> g2 as image tuples."""
    if g1.order != g2.order:
        return
    gens = g1.generators()
    orders2 = [g2.element_order(y) for y in g2.elements]
    cands = [[y for y in g2.elements if orders2[y] == g1.element_order(g)] for g in gens]
    for images in itertools.product(*cands):
        phi = _extend(g1, g2, gens, images)
        if phi is None or len(set(phi.values())) != g1.order:
            continue
        perm = tuple(phi[x] for x in g1.elements)
        yield perm
        if first_only:
            return


def groups_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    if g1.order != g2.order or g1.is_abelian() != g2.is_abelian():
        return False
    if Counter(map(g1.element_order, g1.elements)) != Counter(map(g2.element_order, g2.elements)):
        return False
    return next(isomorphisms(g1, g2, first_only=True), None) is not None


@dataclass(frozen=True)
class Automorphism:
    """Automorphism of a finite group as a permutation of element indices."""

    perm: tuple
    involutive: bool
    name: str = ""

    def __call__(self, g: int) -> int:
        return self.perm[g]

    def apply_inverse(self, g: int) -> int:
        return self.perm.index(g)


def automorphisms(g: FiniteGroup) -> list[Automorphism]:
    """All automorphisms, identity first, each validated exhaustively."""
    if g.order > MAX_CATALOG_ORDER:
        raise ValueError(f"automorphism enumeration limited to order <= {MAX_CATALOG_ORDER}")
    inv_perm = tuple(g.inverse)
    ident = tuple(g.elements)
    out = []
    for perm in sorted(isomorphisms(g, g)):
        for a in g.elements:
            for b in g.elements:
                if perm[g.table[a][b]] != g.table[perm[a]][perm[b]]:
                    raise AssertionError("extension produced a non-homomorphism")
        involutive = all(perm[perm[x]] == x for x in g.elements)
        name = "id" if perm == ident else ("Inv" if perm == inv_perm else "")
        out.append(Automorphism(perm, involutive, name))
    out.sort(key=lambda a: (a.perm != ident, a.perm))
    for i, a in enumerate(out):
        if not a.name:
            out[i] = Automorphism(a.perm, a.involutive, f"aut{i}")
    return out


# catalog

def group_catalog(max_order: int) -> list[FiniteGroup]:
    """Cyclic, dihedral, Q8, S3, S4, A4 and direct products, up to isomorphism."""
    if max_order > MAX_CATALOG_ORDER:
        raise ValueError(f"catalog bound is {MAX_CATALOG_ORDER}, got {max_order}")
    if max_order < 1:
        return []
    base: list[FiniteGroup] = [cyclic(k) for k in range(1, max_order + 1)]
    if max_order >= 6:
        base.append(symmetric(3))
    base += [dihedral(k) for k in range(3, max_order // 2 + 1)]
    if max_order >= 8:
        base.append(quaternion_group())
    if max_order >= 12:
        base.append(alternating(4))
    if max_order >= 24:
        base.append(symmetric(4))

    catalog: list[FiniteGroup] = []

    def add(g: FiniteGroup) -> bool:
        if any(groups_isomorphic(g, h) for h in catalog):
            return False
        catalog.append(g)
        return True

    for g in base:
        add(g)
    grew = True
    while grew:
        grew = False
        for a, b in itertools.combinations_with_replacement(list(catalog), 2):
            if a.order > 1 and b.order > 1 and a.order * b.order <= max_order:
                grew |= add(direct_product(a, b))
    catalog.sort(key=lambda g: g.order)
    return catalog


def group_by_name(name: str, max_order: int = MAX_CATALOG_ORDER) -> FiniteGroup:
    for g in group_catalog(max_order):
        if g.name == name:
            return g
    raise KeyError(name)


# quandle tables

def core_table(g: FiniteGroup) -> FiniteQuandle:
    t, inv = g.table, g.inverse
    return FiniteQuandle([[t[t[y][inv[x]]][y] for y in g.elements] for x in g.elements],
                         name=f"Core({g.name})")


def conj_table(g: FiniteGroup) -> FiniteQuandle:
    t, inv = g.table, g.inverse
    return FiniteQuandle([[t[t[inv[y]][x]][y] for y in g.elements] for x in g.elements],
                         name=f"Conj({g.name})")


def twisted_conj_table(g: FiniteGroup, psi) -> FiniteQuandle:
    t, inv = g.table, g.inverse
    return FiniteQuandle([[t[psi(t[inv[y]][x])][y] for y in g.elements] for x in g.elements],
                         name=f"Conj({g.name},{psi.name})")


def alexander_table(g: FiniteGroup, psi) -> FiniteQuandle:
    t, inv = g.table, g.inverse
    return FiniteQuandle([[t[psi(t[x][inv[y]])][y] for y in g.elements] for x in g.elements],
                         name=f"Alex({g.name},{psi.name})")


def inversion_automorphism(g: FiniteGroup) -> Automorphism:
    if not g.is_abelian():
        raise ValueError(f"inversion is not an automorphism of non-abelian {g.name}")
    return Automorphism(tuple(g.inverse), True, "Inv")


# quandle isomorphism

@dataclass
class IsoWitness:
    """Outcome of an isomorphism search: a bijection, or how absence was certified."""

    isomorphic: bool
    bijection: tuple | None = None
    certificate: dict = field(default_factory=dict)

    def validate(self, q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
        if not self.isomorphic:
            return True
        phi = self.bijection
        if sorted(phi) != list(range(q2.size)):
            return False
        return all(phi[q1.table[x][y]] == q2.table[phi[x]][phi[y]]
                   for x in range(q1.size) for y in range(q1.size))


def element_invariants(q: FiniteQuandle) -> list[tuple]:
    """Per element y: (cycle type of S_y, Inn-orbit size of y, fixed points of S_y)."""
    orbits = inner_orbits(q)
    sizes = Counter(orbits)
    out = []
    for y in range(q.size):
        col = q.column(y)
        fixed = sum(1 for x in range(q.size) if col[x] == x)
        out.append((cycle_type(col), sizes[orbits[y]], fixed))
    return out


def quandle_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle, prune: bool = True) -> IsoWitness:
    if q1.size != q2.size:
        return IsoWitness(False, certificate={"method": "size", "nodes": 0})
    k = q1.size
    if prune:
        inv1, inv2 = element_invariants(q1), element_invariants(q2)
        if Counter(inv1) != Counter(inv2):
            return IsoWitness(False, certificate={"method": "invariant-multiset", "nodes": 0})
        codes = {key: i for i, key in enumerate(sorted(set(inv1)))}
        l1 = [codes[v] for v in inv1]
        l2 = [codes[v] for v in inv2]
    else:
        l1 = l2 = [0] * k
    found, phi, nodes = kernels.find_isomorphism(q1.array(), q2.array(),
                                                 np.array(l1, dtype=np.int64),
                                                 np.array(l2, dtype=np.int64))
    method = "backtracking" if found else "exhausted"
    w = IsoWitness(bool(found), tuple(phi) if found else None,
                   {"method": method, "nodes": int(nodes), "pruned": prune})
    if found and not w.validate(q1, q2):
        raise AssertionError("search returned an invalid bijection")
    return w


def _require_quandle(q: FiniteQuandle) -> None:
    code, x, y, z = kernels.quandle_witness(q.array())
    if code:
        raise AssertionError(f"{q.name} violates Q{code} at {(x, y, z)}")


def search_core_vs_twisted(max_order: int, prune: bool = True) -> dict:
    """For each catalog G, test Core G against Conj(H, psi) for every catalog H
    with |H| = |G| and every psi in Aut H."""
    catalog = group_catalog(max_order)
    auts = {h.name: automorphisms(h) for h in catalog}
    findings = []
    summary = []
    for g in catalog:
        core = core_table(g)
        _require_quandle(core)
        matches = 0
        tested = 0
        for h in catalog:
            if h.order != g.order:
                continue
            for psi in auts[h.name]:
                tw = twisted_conj_table(h, psi)
                _require_quandle(tw)
                w = quandle_isomorphic(core, tw, prune=prune)
                tested += 1
                matches += w.isomorphic
                findings.append({
                    "G": g.name, "H": h.name,
                    "psi": list(psi.perm), "psi_name": psi.name,
                    "psi_involutive": psi.involutive,
                    "isomorphic": w.isomorphic,
                    "witness": list(w.bijection) if w.bijection else None,
                    "certificate": w.certificate,
                })
        summary.append({
            "G": g.name, "order": g.order, "abelian": g.is_abelian(),
            "pairs_tested": tested, "matches": matches,
            "verdict": "match" if matches else "no-match-in-catalog",
        })
    return {
        "max_order": max_order, "prune": prune,
        "catalog": [g.name for g in catalog],
        "summary": summary, "findings": findings,
    }


def verdicts(result: dict) -> list[tuple]:
    """(G, H, psi, isomorphic) for every finding; comparable across prune settings."""
    return [(f["G"], f["H"], tuple(f["psi"]), f["isomorphic"]) for f in result["findings"]]
