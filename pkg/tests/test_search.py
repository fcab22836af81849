import itertools
import json

import pytest

from spinquandle.quandle import FiniteQuandle, check_axioms, core_cyclic, dihedral_quandle
from spinquandle.search import (FiniteGroup, IsoWitness, alexander_table, automorphisms,
                                conj_table, core_table, cyclic, dihedral, direct_product,
                                group_by_name, group_catalog, groups_isomorphic,
                                inversion_automorphism, quandle_isomorphic, quaternion_group,
                                search_core_vs_twisted, symmetric, twisted_conj_table, verdicts)


def brute_force_iso(q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
    k = q1.size
    return any(all(p[q1.table[x][y]] == q2.table[p[x]][p[y]] for x in range(k) for y in range(k))
               for p in itertools.permutations(range(k)))


def test_catalog_order_4():
    assert [g.name for g in group_catalog(4)] == ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"]


def test_catalog_order_8_counts():
    cat = group_catalog(8)
    by_order = {}
    for g in cat:
        by_order[g.order] = by_order.get(g.order, 0) + 1
    # number of groups of each order up to 8
    assert by_order == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5}


def test_catalog_pairwise_non_isomorphic():
    cat = group_catalog(12)
    for a, b in itertools.combinations(cat, 2):
        assert not groups_isomorphic(a, b), (a.name, b.name)


def test_catalog_closed_under_products_at_8():
    cat = group_catalog(8)
    for a, b in itertools.product(cat, repeat=2):
        if a.order * b.order <= 8:
            p = direct_product(a, b)
            assert any(groups_isomorphic(p, g) for g in cat), p.name


def test_catalog_bound():
    with pytest.raises(ValueError):
        group_catalog(17)


def test_q8_group_axioms():
    q8 = quaternion_group()
    FiniteGroup(q8.table, validate=True)
    assert not q8.is_abelian()
    assert sorted(q8.element_order(x) for x in q8.elements) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_bad_cayley_table_rejected():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1, 2], [1, 0, 2], [2, 2, 0]])


@pytest.mark.parametrize("g,count", [(cyclic(5), 4), (direct_product(cyclic(2), cyclic(2)), 6),
                                     (symmetric(3), 6), (quaternion_group(), 24),
                                     (dihedral(4), 8), (cyclic(8), 4)],
                         ids=["Z5", "Z2xZ2", "S3", "Q8", "D4", "Z8"])
def test_automorphism_counts(g, count):
    auts = automorphisms(g)
    assert len(auts) == count
    assert auts[0].name == "id"
    for a in auts:
        assert a(g.identity()) == g.identity()


def test_inversion_is_automorphism_iff_abelian():
    for g in group_catalog(8):
        perms = {a.perm for a in automorphisms(g)}
        assert (tuple(g.inverse) in perms) == g.is_abelian(), g.name
    with pytest.raises(ValueError):
        inversion_automorphism(symmetric(3))


def test_core_table_z3():
    assert core_table(cyclic(3)).table == core_cyclic(3).table
    inv = inversion_automorphism(cyclic(3))
    assert twisted_conj_table(cyclic(3), inv) == core_table(cyclic(3))


def test_twisted_with_identity_is_conj():
    for g in (symmetric(3), quaternion_group()):
        ident = automorphisms(g)[0]
        assert twisted_conj_table(g, ident).table == conj_table(g).table


def test_all_tables_are_quandles():
    for g in group_catalog(8):
        assert check_axioms(core_table(g)).passed
        assert check_axioms(conj_table(g)).passed
        for a in automorphisms(g):
            assert check_axioms(twisted_conj_table(g, a)).passed
            assert check_axioms(alexander_table(g, a)).passed


def test_iso_reflexive_identity():
    w = quandle_isomorphic(core_cyclic(5), core_cyclic(5))
    assert w.isomorphic and w.validate(core_cyclic(5), core_cyclic(5))


def test_core_z4_vs_klein():
    klein = direct_product(cyclic(2), cyclic(2))
    assert all(core_table(klein).table[x][y] == x for x in range(4) for y in range(4))
    w = quandle_isomorphic(core_table(cyclic(4)), core_table(klein))
    assert not w.isomorphic
    assert w.certificate["method"] == "invariant-multiset"
    w = quandle_isomorphic(core_table(cyclic(4)), core_table(klein), prune=False)
    assert not w.isomorphic and w.certificate["method"] == "exhausted"


def test_core_z3_is_dihedral_r3():
    w = quandle_isomorphic(core_table(cyclic(3)), dihedral_quandle(3))
    assert w.isomorphic and w.bijection == (0, 1, 2)


def test_iso_agrees_with_brute_force_and_is_symmetric():
    tables = []
    for g in group_catalog(6):
        if g.order in (4, 6):
            tables.append(core_table(g))
            tables += [twisted_conj_table(g, a) for a in automorphisms(g)]
    for q1, q2 in itertools.combinations(tables, 2):
        if q1.size != q2.size:
            continue
        expected = brute_force_iso(q1, q2)
        for prune in (True, False):
            assert quandle_isomorphic(q1, q2, prune).isomorphic == expected
            assert quandle_isomorphic(q2, q1, prune).isomorphic == expected


def test_corrupted_witness_fails_validation():
    q = core_cyclic(5)
    assert not IsoWitness(True, (1, 0, 2, 3, 4)).validate(q, q)


def test_search_order_8():
    result = search_core_vs_twisted(8)
    summary = {s["G"]: s for s in result["summary"]}
    for g in group_catalog(8):
        if g.is_abelian():
            inv = list(g.inverse)
            assert any(f["G"] == f["H"] == g.name and f["psi"] == inv and f["isomorphic"]
                       for f in result["findings"]), g.name
    for name in ("Q8", "D4", "S3"):
        assert summary[name]["verdict"] == "no-match-in-catalog"
        assert all(f["certificate"]["method"] in ("invariant-multiset", "exhausted")
                   for f in result["findings"] if f["G"] == name)
    s3_targets = {f["H"] for f in result["findings"] if f["G"] == "S3"}
    assert s3_targets == {"Z6", "S3"}


def test_search_witnesses_revalidate():
    result = search_core_vs_twisted(6)
    for f in result["findings"]:
        if f["isomorphic"]:
            g, h = group_by_name(f["G"], 6), group_by_name(f["H"], 6)
            psi = next(a for a in automorphisms(h) if list(a.perm) == f["psi"])
            w = IsoWitness(True, tuple(f["witness"]))
            assert w.validate(core_table(g), twisted_conj_table(h, psi))


def test_search_report_deterministic():
    a = json.dumps(search_core_vs_twisted(6), sort_keys=True)
    b = json.dumps(search_core_vs_twisted(6), sort_keys=True)
    assert a == b


def test_pruning_does_not_change_verdicts():
    assert verdicts(search_core_vs_twisted(8, prune=True)) == verdicts(search_core_vs_twisted(8, prune=False))
