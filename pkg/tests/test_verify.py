"""Checkers on good inputs, and on corrupted inputs where they must fail."""
import json
from dataclasses import replace
from fractions import Fraction

import pytest

from spinquandle import embeddings as emb
from spinquandle import groups as grp
from spinquandle import verify as vf
from spinquandle.clifford import versor_from_unit_vectors
from spinquandle.numerics import Matrix, h_matrix
from spinquandle.quandle import FiniteQuandle, core_cyclic, sphere_op
from spinquandle.search import cyclic

F = Fraction


def corrupt_iota_1(p):
    m = emb.iota_1(p)
    (a, b), (c, d) = m.rows
    return Matrix(((a, -b), (c, d)))


def test_hom_passes_and_negative_control():
    f = emb.build_embedding("iota1", exact=True)
    assert vf.check_hom(f, 100).passed
    bad = replace(f, name="iota_1 corrupted", evaluator=corrupt_iota_1)
    rep = vf.check_hom(bad, 100)
    assert not rep.passed and rep.witnesses
    assert rep.residual != 0


def test_hom_float_inn():
    rep = vf.check_hom(emb.build_embedding("inn", 4), 1000)
    assert rep.passed and rep.residual < 1e-9


def test_hom_exhaustive_on_finite_domain():
    rep = vf.check_hom(emb.build_embedding("fB", base=cyclic(5), exact=True))
    assert rep.passed and rep.samples == 25


def test_hom_catches_evaluator_errors():
    f = emb.build_embedding("iota1", exact=True)
    bad = replace(f, evaluator=lambda p: emb.iota_1((p[0], p[0])))
    rep = vf.check_hom(bad, 10)
    assert not rep.passed
    assert rep.witnesses[0][0].startswith("error")


def test_injective_inn_fails_with_antipodal_witness():
    rep = vf.check_injective(emb.build_embedding("inn", 3), 200)
    assert not rep.passed
    label, x, y = rep.witnesses[0]
    x, y = eval(x), eval(y)
    assert all(abs(a + b) < 1e-12 for a, b in zip(x, y))


def test_injective_exact_detects_collision():
    f = emb.build_embedding("inn", 2, exact=True)
    rep = vf.check_injective(f, 20)
    assert not rep.passed
    assert vf.check_injective(emb.build_embedding("i-n", 2, exact=True), 20).passed


def test_injective_negative_control_on_projective():
    f = emb.build_embedding("i-n", 3)
    bad = replace(f, evaluator=lambda c: emb.i_n(c).scale(0.0))
    assert not vf.check_injective(bad, 50).passed


def test_diagram_63_negative_controls():
    assert vf.check_diagram_63(50, exact=True).passed
    assert not vf.check_diagram_63(50, exact=True, iota1=corrupt_iota_1).passed
    assert not vf.check_diagram_63(50, I1=lambda p: emb.script_I1(p).T).passed


def test_gamma_negative_control():
    assert vf.check_gamma(40, exact=True).passed
    bad = lambda g: grp.Z2SemidirectElement(g, 0)  # noqa: E731
    assert not vf.check_gamma(40, exact=True, gamma=bad).passed


def test_diagram_72_negative_control():
    assert vf.check_diagram_72(50, exact=True).passed
    swapped = lambda g, h: emb.iota_3(h, g)  # noqa: E731
    rep = vf.check_diagram_72(50, iota3=swapped)
    assert not rep.passed and rep.witnesses


def test_kernel_p4_negative_control():
    assert vf.check_kernel_p4(200).passed
    collapse = lambda g, h: Matrix.identity(4)  # noqa: E731
    rep = vf.check_kernel_p4(20, p4=collapse)
    assert not rep.passed
    assert any(w[0] == "binary tetrahedral kernel" for w in rep.witnesses)


def test_p4_hom_negative_control():
    assert not vf.check_p4_hom(20, p4=lambda g, h: emb.p4(h, g).T @ emb.p4(g, h)).passed


def test_pin4_cover_negative_control():
    h3 = h_matrix(3)

    def right_cover(x):
        m = emb.p4(x.g, x.h)
        return m if x.sign == 1 else m @ h3

    assert vf.check_pin4_cover_hom(40, exact=True).passed
    assert not vf.check_pin4_cover_hom(40, exact=True, cover=right_cover).passed
    assert not vf.check_pin4_vs_inn(40, exact=True, cover=right_cover).passed


def test_covering_square_negative_control():
    assert vf.check_covering_square(3, 30, exact=True).passed
    rep = vf.check_covering_square(3, 30, lift=lambda x: emb.iota_n(sphere_op(x, x[::-1])))
    assert not rep.passed
    with pytest.raises(ValueError):
        vf.check_covering_square(9, 1)


def test_lifted_action_negative_control():
    assert vf.check_lifted_action(2, 20, exact=True).passed
    bad = lambda u: vf.covering_matrix(u).T  # noqa: E731
    assert not vf.check_lifted_action(2, 20, exact=True, cover=bad).passed


def test_parity_negative_control():
    assert vf.check_parity(4, 10).passed
    rep = vf.check_parity(4, 10, lift=_odd_lift)
    assert not rep.passed


def _odd_lift(x):
    # one extra reflection flips the parity
    e1 = tuple(F(int(i == 0)) for i in range(len(x)))
    return emb.iota_n(x) * versor_from_unit_vectors([e1])


def test_covering_hom_and_fiber():
    assert vf.check_covering_hom(3, 100).passed
    assert vf.check_covering_fiber(3, 500).passed
    bad = lambda u: vf.covering_matrix(u).scale(0.0)  # noqa: E731
    assert not vf.check_covering_fiber(3, 20, cover=bad).passed
    assert vf.check_covering_anchor(4).passed


def test_axioms_negative_control():
    t = [list(r) for r in core_cyclic(5).table]
    t[0][1], t[0][2] = t[0][2], t[0][1]
    rep = vf.check_axioms(FiniteQuandle(t, name="swapped"))
    assert not rep.passed and rep.witnesses


def test_abelian_coincidence():
    assert vf.check_abelian_coincidence(12).passed


def test_reports_are_deterministic(tmp_path):
    paths = []
    for i in range(2):
        reps = [vf.check_diagram_72(30, seed=5), vf.check_hom(emb.build_embedding("inn", 3), 30)]
        p = tmp_path / f"r{i}.json"
        vf.dump_reports(reps, p)
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]
    doc = json.loads(paths[0])
    assert set(doc["reports"][0]) == {"name", "mode", "samples", "seed", "residual", "tolerance",
                                      "witnesses", "pass"}
