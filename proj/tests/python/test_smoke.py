import json

import pytest

import klv


def test_version():
    assert klv.__version__


def test_poly_arithmetic():
    p = klv.Poly([1, 1])
    q = klv.Poly.q()
    assert (p * p).coeffs() == [1, 2, 1]
    assert (p - klv.Poly.one()) == q
    assert p.eval_at_one() == 2
    assert str(p) == "1 + q"
    big = klv.Poly([10**30])
    assert (big * big).coeff(0) == 10**60


def test_permutations_and_bruhat():
    w = klv.Permutation.from_payload("321")
    assert w.length() == 3
    assert w.inverse() == w
    assert klv.bruhat_leq(klv.Permutation.from_payload("213"), w)
    assert len(klv.symmetric_group(4)) == 24


def test_classical_kl_table():
    t = klv.KLTable(4)
    e = klv.Permutation.identity(4)
    w = klv.Permutation([3, 4, 1, 2])
    assert t.poly(e, w).coeffs() == [1, 1]
    x = klv.Permutation.from_payload("1324")
    assert t.poly(x, w).coeffs() == [1, 1]
    assert t.mu(t.index_of(x), t.index_of(w)) == 1


def test_clan_model_counts():
    assert klv.make_clan_model(1, 1).size() == 3
    assert klv.make_clan_model(2, 2).size() == 21
    assert klv.make_clan_model(3, 3).size() == 215
    with pytest.raises(ValueError):
        klv.make_clan_model(9, 9)


def test_moves():
    m = klv.make_clan_model(1, 1)
    closed = m.index_of("+-")
    open_ = m.index_of("11")
    assert m.classify(1, closed) == klv.RootType.NONCOMPACT_TYPE_I
    assert m.cayley_up(1, closed) == open_
    assert sorted(m.cayley_down_fiber(1, open_)) == sorted(
        [m.index_of("+-"), m.index_of("-+")]
    )
    assert m.raising_pair(open_) == (1, closed)


def test_closure_poset():
    m = klv.make_clan_model(2, 1)
    poset = klv.build_poset(m)
    assert poset.size() == 6
    assert len(poset.covers()) == 6
    top = m.index_of("1+1")
    assert poset.down_set(top) == list(range(6))
    assert klv.poset_to_dot(poset).startswith("digraph closure")


def test_klv_table():
    m = klv.make_clan_model(2, 2)
    r = klv.klv_table(m)
    t = r.table
    p = t.poly(t.index_of("+--+"), t.index_of("1212"))
    assert p.coeffs() == [1, 1]
    assert r.mu.mu(t.index_of("+--+"), t.index_of("1212")) == 1
    nontrivial = sum(
        1
        for hi in range(t.size())
        for lo, poly in t.column(hi).items()
        if not poly.is_one()
    )
    assert nontrivial == 4


def test_hecke_action():
    m = klv.make_clan_model(1, 1)
    e = klv.ModuleElement.basis(m.index_of("+-"))
    te = klv.t_action(m, 1, e)
    assert te.coeff(m.index_of("11")) == klv.Poly.one()


def test_verification_reports():
    m = klv.make_clan_model(2, 1)
    r = klv.klv_table(m)
    poset = klv.build_poset(m)
    rep = klv.check_semicontinuity(r.table, poset)
    assert rep.ok()
    assert rep.counts.comparable_pairs == 15
    doc = json.loads(klv.report_to_json(rep))
    assert doc["violations"] == []
    assert "elapsed_ms" not in doc
    assert klv.check_paper_claims(r.table, poset, m).ok()
    assert klv.compare_engines(3).ok()


def test_diagonal_matches_classical():
    m = klv.make_diagonal_model(4)
    r = klv.klv_table(m)
    t = klv.KLTable(4)
    lo = m.index_of("1324")
    hi = m.index_of("3412")
    assert r.table.poly(lo, hi).coeffs() == [1, 1]
    assert r.table.poly(lo, hi) == t.poly(
        klv.Permutation.from_payload("1324"), klv.Permutation.from_payload("3412")
    )


def test_exports_deterministic():
    m = klv.make_clan_model(2, 1)
    r = klv.klv_table(m)
    assert klv.table_to_csv(r, True) == klv.table_to_csv(klv.klv_table(m), True)
    lines = klv.orbits_to_csv(m).strip().split("\n")
    assert lines[0] == "backend,payload,d"
    assert len(lines) == 7
