"""Quandles: the spherical and projective families, group-derived quandles,
finite operation tables, and axiom/structure checks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from . import kernels
from .numerics import EPS, DimensionError, Matrix, inner_product, is_exact, vec_dist
from .report import MAX_WITNESSES, VerificationReport


class SpherePoint(tuple):
    """Unit vector in R^{n+1}; ``dim`` is the ambient dimension n+1."""

    def __new__(cls, coords: Sequence, eps: float = EPS, check: bool = True):
        self = super().__new__(cls, coords)
        if not self:
            raise DimensionError("zero-dimensional sphere point")
        if check:
            norm2 = inner_product(self, self)
            if (norm2 != 1) if is_exact(norm2) else abs(norm2 - 1) > eps:
                raise ValueError(f"not a unit vector: |x|^2 = {norm2}")
        return self

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def exact(self) -> bool:
        return all(is_exact(c) for c in self)

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(tuple(-c for c in self), check=False)


def canonical_sign(coords: Sequence, eps: float = EPS) -> int:
    """+1 or -1 making the first nonzero coordinate positive."""
    exact = all(is_exact(c) for c in coords)
    for c in coords:
        if (c != 0) if exact else abs(c) >= eps:
            return 1 if c > 0 else -1
    raise ValueError("zero vector has no projective class")


class ProjectivePoint(tuple):
    """Class {x, -x} stored by its canonical representative."""

    def __new__(cls, x: Sequence, eps: float = EPS):
        s = canonical_sign(x, eps)
        coords = tuple(x) if s > 0 else tuple(-c for c in x)
        return super().__new__(cls, SpherePoint(coords, eps))

    @property
    def representative(self) -> SpherePoint:
        return SpherePoint(tuple(self), check=False)


def sphere_op(x: Sequence, y: Sequence) -> SpherePoint:
    """x ▷ y = 2<x,y> y - x."""
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    t = 2 * inner_product(x, y)
    return SpherePoint(tuple(t * b - a for a, b in zip(x, y)), check=False)


def projective_op(x: ProjectivePoint, y: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(sphere_op(x, y))


def projective_dist(x: Sequence, y: Sequence):
    """Distance between classes, insensitive to the representative's sign."""
    plus = vec_dist(x, y)
    minus = max(abs(a + b) for a, b in zip(x, y))
    return min(plus, minus)


def reflection_matrix(y: Sequence) -> Matrix:
    """Matrix of S_y acting on row vectors: 2 y^t y - I."""
    d = len(y)
    one = Fraction(1) if all(is_exact(c) for c in y) else 1.0
    return Matrix(tuple(tuple(2 * y[i] * y[j] - (one if i == j else 0 * one) for j in range(d))
                        for i in range(d)))


# group-derived operations; ``group`` needs mul(a, b) and inv(a)

def conj_op(g, h, group):
    """g ▷ h = h^-1 g h."""
    return group.mul(group.mul(group.inv(h), g), h)


def core_op(g, h, group):
    """g ▷ h = h g^-1 h."""
    return group.mul(group.mul(h, group.inv(g)), h)


def twisted_conj_op(g, h, psi: Callable, group):
    """g ▷ h = psi(h^-1 g) h."""
    return group.mul(psi(group.mul(group.inv(h), g)), h)


def alexander_op(g, h, psi: Callable, group):
    """g ▷ h = psi(g h^-1) h."""
    return group.mul(psi(group.mul(g, group.inv(h))), h)


# sampling

def random_sphere_point(rng: np.random.Generator, n: int, exact: bool = False) -> SpherePoint:
    """Point of S^n.  Float: normalized Gaussian.  Exact: inverse stereographic
    image of a random rational n-tuple, then a random signed coordinate permutation."""
    if not exact:
        while True:
            v = rng.standard_normal(n + 1)
            r = float(np.linalg.norm(v))
            if r > 1e-6:
                return SpherePoint(tuple(float(c) / r for c in v))
    q = [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 10))) for _ in range(n)]
    r2 = sum(c * c for c in q)
    den = r2 + 1
    coords = [2 * c / den for c in q] + [(r2 - 1) / den]
    perm = rng.permutation(n + 1)
    signs = rng.choice([-1, 1], size=n + 1)
    return SpherePoint(tuple(int(signs[i]) * coords[int(perm[i])] for i in range(n + 1)))


# generic quandle interface

@dataclass
class BatchOps:
    """Row-wise numpy versions of a float quandle's operations."""

    sample: Callable[[np.random.Generator, int], np.ndarray]
    op: Callable[[np.ndarray, np.ndarray], np.ndarray]
    distance: Callable[[np.ndarray, np.ndarray], np.ndarray]


def _batch_sphere_sample(n: int):
    def sample(rng: np.random.Generator, k: int) -> np.ndarray:
        v = rng.standard_normal((k, n + 1))
        return v / np.linalg.norm(v, axis=1, keepdims=True)
    return sample


def _batch_sphere_op(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return 2 * np.einsum("ij,ij->i", x, y)[:, None] * y - x


def _batch_vec_dist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.abs(a - b).max(axis=1)


def _batch_canonical(x: np.ndarray, eps: float = EPS) -> np.ndarray:
    first = np.argmax(np.abs(x) >= eps, axis=1)
    sign = np.sign(x[np.arange(len(x)), first])
    return x * sign[:, None]


def _batch_projective_dist(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.minimum(np.abs(a - b).max(axis=1), np.abs(a + b).max(axis=1))


@dataclass
class QuandleOps:
    """Operation, inverse operation, distance and seeded sampler of a quandle.

    ``elements`` is set for finite carriers, which are then checked exhaustively.
    ``antipode`` optionally maps a point to an adversarial partner used to
    stress injectivity checks.
    """

    name: str
    op: Callable[[Any, Any], Any]
    op_inv: Callable[[Any, Any], Any]
    distance: Callable[[Any, Any], Any]
    sampler: Callable[[np.random.Generator], Any] | None = None
    exact: bool = False
    elements: Sequence | None = None
    flatten: Callable[[Any], Sequence[float]] | None = None
    antipode: Callable[[Any], Any] | None = None
    batch: BatchOps | None = None

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "float"


def sphere_quandle(n: int, exact: bool = False) -> QuandleOps:
    return QuandleOps(
        name=f"S^{n}", op=sphere_op, op_inv=sphere_op, distance=vec_dist,
        sampler=lambda rng: random_sphere_point(rng, n, exact), exact=exact,
        flatten=lambda x: [float(c) for c in x], antipode=lambda x: -x,
        batch=None if exact else BatchOps(_batch_sphere_sample(n), _batch_sphere_op,
                                          _batch_vec_dist),
    )


def projective_quandle(n: int, exact: bool = False) -> QuandleOps:
    return QuandleOps(
        name=f"P^{n}", op=projective_op, op_inv=projective_op, distance=projective_dist,
        sampler=lambda rng: ProjectivePoint(random_sphere_point(rng, n, exact)), exact=exact,
        flatten=lambda x: [float(c) for c in x],
        antipode=lambda x: ProjectivePoint(tuple(-c for c in x)),
        batch=None if exact else BatchOps(
            lambda rng, k: _batch_canonical(_batch_sphere_sample(n)(rng, k)),
            lambda x, y: _batch_canonical(_batch_sphere_op(x, y)),
            _batch_projective_dist),
    )


class FiniteQuandle:
    """Carrier {0..k-1} with ``table[x][y] = x ▷ y``."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "", validate: bool = False):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("operation table must be a non-empty square array")
        self.table = rows
        self.name = name
        if validate:
            code, x, y, z = kernels.quandle_witness(np.array(rows, dtype=np.int64))
            if code:
                raise ValueError(f"not a quandle: axiom Q{code} fails at {(x, y, z)}")

    @classmethod
    def from_operation(cls, elements: Sequence, op: Callable, name: str = "",
                       key: Callable = lambda e: e) -> "FiniteQuandle":
        index = {key(e): i for i, e in enumerate(elements)}
        return cls([[index[key(op(x, y))] for y in elements] for x in elements], name=name)

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def op_inv(self, x: int, y: int) -> int:
        return self.column(y).index(x)

    def column(self, y: int) -> tuple:
        """S_y as a tuple: position x holds x ▷ y."""
        return tuple(row[y] for row in self.table)

    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteQuandle({self.name or self.size})"

    def to_text(self) -> str:
        lines = [str(self.size)] + [" ".join(map(str, row)) for row in self.table]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "") -> "FiniteQuandle":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty quandle text")
        k = int(tokens[0])
        values = [int(t) for t in tokens[1:]]
        if len(values) != k * k:
            raise ValueError(f"expected {k * k} table entries, found {len(values)}")
        return cls([values[i * k:(i + 1) * k] for i in range(k)], name=name)

    def as_ops(self) -> QuandleOps:
        return QuandleOps(
            name=self.name or f"finite({self.size})", op=self.op, op_inv=self.op_inv,
            distance=lambda a, b: Fraction(int(a != b)), exact=True,
            elements=range(self.size),
        )


def trivial_quandle(k: int) -> FiniteQuandle:
    return FiniteQuandle([[x] * k for x in range(k)], name=f"T{k}")


def dihedral_quandle(k: int) -> FiniteQuandle:
    """R_k: x ▷ y = 2y - x mod k."""
    return FiniteQuandle([[(2 * y - x) % k for y in range(k)] for x in range(k)], name=f"R{k}")


def core_cyclic(k: int) -> FiniteQuandle:
    """Core(Z/k) built from the group operation h g^-1 h."""
    return FiniteQuandle([[(y - x + y) % k for y in range(k)] for x in range(k)],
                         name=f"Core(Z/{k})")


# checks

def check_axioms(q, samples: int = 10_000, seed: int = 0, eps: float = EPS,
                 vectorized: bool = True) -> VerificationReport:
    """Q1/Q2/Q3: exhaustive on finite quandles, seeded sampling otherwise.

    Float quandles that carry numpy batch operations (and are involutory, so
    the inverse operation is the operation itself) are sampled in one batch
    unless ``vectorized`` is False.
    """
    if isinstance(q, FiniteQuandle):
        k = q.size
        rep = VerificationReport(f"axioms[{q.name or k}]", "exact", k ** 3, None, Fraction(0),
                                 tolerance=eps)
        code, x, y, z = kernels.quandle_witness(q.array())
        if code:
            inputs = {1: (x,), 2: (x, y), 3: (x, y, z)}[code]
            rep.fail(*inputs, label=f"Q{code}")
        return rep.finish()

    rep = VerificationReport(f"axioms[{q.name}]", q.mode, samples, seed, _zero(q), tolerance=eps)
    if q.elements is not None:
        els = list(q.elements)
        for x in els:
            rep.record(q.distance(q.op(x, x), x), x, label="Q1")
            for y in els:
                rep.record(q.distance(q.op_inv(q.op(x, y), y), x), x, y, label="Q2")
                rep.record(q.distance(q.op(q.op_inv(x, y), y), x), x, y, label="Q2")
                for z in els:
                    lhs = q.op(q.op(x, y), z)
                    rhs = q.op(q.op(x, z), q.op(y, z))
                    rep.record(q.distance(lhs, rhs), x, y, z, label="Q3")
        rep.samples = len(els) ** 3
        return rep.finish()

    if vectorized and q.batch is not None and q.op_inv is q.op:
        return _check_axioms_batch(q, rep, samples, seed)

    rng = np.random.default_rng(seed)
    for _ in range(samples):
        x, y, z = q.sampler(rng), q.sampler(rng), q.sampler(rng)
        rep.record(q.distance(q.op(x, x), x), x, label="Q1")
        rep.record(q.distance(q.op_inv(q.op(x, y), y), x), x, y, label="Q2")
        rep.record(q.distance(q.op(q.op_inv(x, y), y), x), x, y, label="Q2")
        lhs = q.op(q.op(x, y), z)
        rhs = q.op(q.op(x, z), q.op(y, z))
        rep.record(q.distance(lhs, rhs), x, y, z, label="Q3")
    return rep.finish()


def _check_axioms_batch(q: QuandleOps, rep: VerificationReport, samples: int,
                        seed: int) -> VerificationReport:
    b = q.batch
    rng = np.random.default_rng(seed)
    x, y, z = (b.sample(rng, samples) for _ in range(3))
    xy = b.op(x, y)
    residuals = {
        "Q1": (b.distance(b.op(x, x), x), (x,)),
        "Q2": (b.distance(b.op(xy, y), x), (x, y)),
        "Q3": (b.distance(b.op(xy, z), b.op(b.op(x, z), b.op(y, z))), (x, y, z)),
    }
    for label, (res, arrays) in residuals.items():
        worst = int(np.argmax(res))
        bad = np.flatnonzero(res > rep.tolerance)
        for i in [worst] + [int(j) for j in bad[:MAX_WITNESSES] if j != worst]:
            rep.record(float(res[i]), *(tuple(a[i].tolist()) for a in arrays), label=label)
    return rep.finish()


def _zero(q: QuandleOps):
    return Fraction(0) if q.exact else 0.0


def inner_group_generators(q: FiniteQuandle) -> list[tuple]:
    """The permutations S_y, y = 0..k-1, as image tuples."""
    gens = [q.column(y) for y in range(q.size)]
    for y, s in enumerate(gens):
        if sorted(s) != list(range(q.size)):
            raise ValueError(f"column {y} is not a permutation")
    return gens


def inner_group_order(q: FiniteQuandle) -> int:
    """|Inn X| by closure of the generators under composition."""
    gens = set(inner_group_generators(q))
    ident = tuple(range(q.size))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                r = tuple(s[i] for i in p)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return len(seen)


def inner_orbits(q: FiniteQuandle) -> list[int]:
    """Orbit id of each element under Inn X (union-find over x ~ x ▷ y)."""
    parent = list(range(q.size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(q.size):
        for v in q.table[x]:
            ra, rb = find(x), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(q.size)]


def is_algebraically_connected(q: FiniteQuandle) -> bool:
    return len(set(inner_orbits(q))) == 1


def is_faithful(q: FiniteQuandle) -> bool:
    cols = inner_group_generators(q)
    return len(set(cols)) == len(cols)


def sphere_maps_agree(x: Sequence, points: Sequence[Sequence]) -> bool:
    """True if S_x and S_{-x} coincide on every given point (exactly)."""
    neg = tuple(-c for c in x)
    return all(sphere_op(p, x) == sphere_op(p, neg) for p in points)


def cycle_type(perm: Sequence[int]) -> tuple:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))
