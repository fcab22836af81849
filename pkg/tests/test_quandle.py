from fractions import Fraction

import numpy as np
import pytest

from spinquandle.numerics import inner_product
from spinquandle.quandle import (FiniteQuandle, ProjectivePoint, SpherePoint, check_axioms,
                                 core_cyclic, cycle_type, dihedral_quandle, inner_group_order,
                                 inner_orbits, is_algebraically_connected, is_faithful,
                                 projective_op, projective_quandle, random_sphere_point,
                                 sphere_op, sphere_quandle, trivial_quandle)

F = Fraction


def test_sphere_op_basics():
    x = SpherePoint((F(1), F(0)))
    y = SpherePoint((F(0), F(1)))
    assert sphere_op(x, y) == (-1, 0)
    assert sphere_op(x, x) == x
    assert sphere_op(x, -x) == x


def test_sphere_op_stays_on_sphere_exactly():
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y = random_sphere_point(rng, 4, True), random_sphere_point(rng, 4, True)
        z = sphere_op(x, y)
        assert inner_product(z, z) == 1


def test_symmetries_agree_on_antipodes():
    # S_y = S_{-y}: the sphere quandle is not faithful
    rng = np.random.default_rng(1)
    for _ in range(20):
        x, y = random_sphere_point(rng, 3, True), random_sphere_point(rng, 3, True)
        assert sphere_op(x, y) == sphere_op(x, -y)


def test_non_unit_point_rejected():
    with pytest.raises(ValueError):
        SpherePoint((F(1), F(1)))


def test_projective_canonical_form():
    p = ProjectivePoint((F(0), F(-3, 5), F(4, 5)))
    assert p == (0, F(3, 5), F(-4, 5))
    assert ProjectivePoint(-p.representative) == p


def test_projective_op_well_defined():
    rng = np.random.default_rng(2)
    for _ in range(20):
        x, y = random_sphere_point(rng, 3, True), random_sphere_point(rng, 3, True)
        a = projective_op(ProjectivePoint(x), ProjectivePoint(y))
        b = projective_op(ProjectivePoint(-x), ProjectivePoint(-y))
        assert a == b == ProjectivePoint(sphere_op(x, y))


@pytest.mark.parametrize("n", [1, 2, 5])
def test_sphere_and_projective_axioms_exact(n):
    assert check_axioms(sphere_quandle(n, True), samples=200, seed=n).passed
    assert check_axioms(projective_quandle(n, True), samples=200, seed=n).passed


def test_finite_builders():
    assert core_cyclic(3) == dihedral_quandle(3)
    assert core_cyclic(3).table == ((0, 2, 1), (2, 1, 0), (1, 0, 2))
    for k in range(1, 13):
        assert check_axioms(core_cyclic(k)).passed


def test_axiom_failure_is_located():
    t = [list(r) for r in core_cyclic(4).table]
    t[1][1] = 0
    rep = check_axioms(FiniteQuandle(t, name="broken"))
    assert not rep.passed
    assert rep.witnesses[0][0] == "Q1"


def test_validate_flag():
    with pytest.raises(ValueError):
        FiniteQuandle([[0, 0], [0, 1]], validate=True)


def test_text_round_trip():
    q = dihedral_quandle(5)
    assert FiniteQuandle.from_text(q.to_text()) == q


def test_inner_structure():
    # dihedral quandle R_k: connected iff k odd; faithful iff k odd
    assert is_algebraically_connected(dihedral_quandle(5))
    assert not is_algebraically_connected(dihedral_quandle(4))
    assert is_faithful(dihedral_quandle(5))
    assert not is_faithful(dihedral_quandle(4))
    assert inner_group_order(dihedral_quandle(5)) == 10
    assert inner_group_order(trivial_quandle(3)) == 1
    assert len(set(inner_orbits(trivial_quandle(3)))) == 3


def test_cycle_type():
    assert cycle_type((1, 0, 2, 4, 3)) == (1, 2, 2)
    assert cycle_type(tuple(range(4))) == (1, 1, 1, 1)


@pytest.mark.parametrize("family", [sphere_quandle, projective_quandle])
def test_vectorized_axioms_agree_with_scalar(family):
    q = family(4)
    fast = check_axioms(q, samples=3000, seed=2)
    slow = check_axioms(q, samples=3000, seed=2, vectorized=False)
    assert fast.passed and slow.passed
    assert fast.residual < 1e-12 and slow.residual < 1e-12


def test_vectorized_axioms_negative_control():
    from dataclasses import replace
    q = sphere_quandle(3)
    broken = replace(q.batch, op=lambda x, y: 2 * (x * y).sum(axis=1)[:, None] * y + x)
    rep = check_axioms(replace(q, batch=broken), samples=100)
    assert not rep.passed
    assert {w[0] for w in rep.witnesses} >= {"Q1"}
