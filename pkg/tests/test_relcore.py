import json

import pytest
from hypothesis import given

import oracle as O
from helpers import PY, X, Y, Z, rels, preds
from mrl import powerops as po
from mrl import relcore as rc
from mrl.relcore import Relation, Test


def R(src, tgt, pairs):
    return Relation.from_pairs(src, tgt, pairs)


def test_universe_basics():
    u = rc.universe(2)
    assert [u.label(i) for i in range(2)] == ["a", "b"]
    p = rc.powerset(X)
    assert p.size == 4
    assert [p.label(i) for i in range(4)] == ["{}", "{a}", "{b}", "{a,b}"]
    assert p.index("{a}") == 1
    assert rc.powerset(rc.universe(0)).size == 1


def test_size_bounds():
    big = rc.universe(6, "B")
    with pytest.raises(rc.SizeBoundError):
        rc.powerset(big)
    rc.powerset(rc.powerset(rc.universe(4, "F")))
    with pytest.raises(rc.SizeBoundError):
        rc.powerset(rc.powerset(rc.universe(5, "G")))


def test_lattice_examples():
    assert rc.compl(rc.empty(X, Y)) == rc.top(X, Y)
    r = R(X, X, [(0, 1), (1, 1)])
    assert rc.inter(r, rc.compl(r)) == rc.empty(X, X)
    assert rc.union(R(X, X, [(0, 1)]), R(X, X, [(1, 0)])).pairs == [(0, 1), (1, 0)]


def test_composition_examples():
    assert rc.compose(R(X, X, [(0, 1)]), R(X, X, [(1, 0)])).pairs == [(0, 0)]
    r = R(X, PX := rc.powerset(X), [(0, 3)])
    assert rc.compose(r, po.has_element(X)).pairs == [(0, 0), (0, 1)]
    assert rc.converse(R(X, X, [(0, 1)])).pairs == [(1, 0)]
    assert rc.converse(rc.identity(X)) == rc.identity(X)


def test_residual_examples():
    one = po.eta(X)
    assert rc.lres(one, one) == rc.identity(X)
    s = R(Y, X, [(0, 0)])
    assert rc.lres(rc.top(X, X), s) == rc.top(X, Y)
    y1 = rc.universe(1, "W")
    omega = rc.rres(po.membership(y1), po.membership(y1))
    assert sorted(omega.pairs) == [(0, 0), (0, 1), (1, 1)]


def test_syq_examples():
    assert rc.syq(po.membership(Y), po.membership(Y)) == rc.identity(PY)
    y1 = rc.universe(1, "W")
    c = rc.syq(po.membership(y1), rc.compl(po.membership(y1)))
    assert sorted(c.pairs) == [(0, 1), (1, 0)]
    r = R(X, X, [(0, 0), (0, 1)])
    assert rc.syq(rc.converse(r), po.membership(X)).pairs == [(0, 3), (1, 0)]


def test_domain_and_predicates():
    assert rc.dom(rc.empty(X, Y)).members == 0
    assert rc.dom(R(X, rc.powerset(X), [(0, 3)])) == Test(X, 0b01)
    assert rc.dom(rc.identity(X)) == rc.full_test(X)
    assert rc.is_deterministic(rc.identity(X))
    assert not rc.is_univalent(R(X, X, [(0, 1), (0, 0)]))


def test_tests():
    assert rc.test_compl(rc.full_test(X)) == rc.empty_test(X)
    assert rc.test_compl(rc.empty_test(X)) == rc.full_test(X)
    for p in rc.all_tests(X):
        for q in rc.all_tests(X):
            assert rc.compose(rc.as_relation(p), rc.as_relation(q)) == rc.as_relation(rc.test_inter(p, q))
            assert rc.test_implies(p, q) == rc.test_union(rc.test_compl(p), q)


def test_sort_errors():
    with pytest.raises(rc.SortError):
        rc.union(rc.empty(X, Y), rc.empty(Y, X))
    with pytest.raises(rc.SortError):
        rc.compose(rc.empty(X, Y), rc.empty(X, Y))
    # same size, different name
    other = rc.universe(2, "Q")
    with pytest.raises(rc.SortError):
        rc.compose(rc.empty(X, Y), rc.empty(other, X))


def test_empty_universe():
    e = rc.universe(0, "E")
    r = rc.top(e, X)
    assert r.pairs == [] and rc.compl(r) == r
    assert rc.compose(rc.converse(r), r) == rc.empty(X, X)
    assert rc.lres(rc.empty(X, e), rc.empty(e, e)) == rc.top(X, e)


def test_enumeration():
    assert [r.pairs for r in rc.all_relations(rc.universe(1, "A"), rc.universe(1, "A"))] == [[], [(0, 0)]]
    assert sum(1 for _ in rc.all_tests(Y)) == 4


@given(rels(X, Y), rels(Y, Z))
def test_compose_matches_oracle(r, s):
    assert O.sets(rc.compose(r, s)) == O.compose(O.sets(r), O.sets(s))


@given(rels(X, Z), rels(Y, Z), rels(X, Y), rels(X, Z))
def test_residuals_match_oracle(t, s, r, u):
    assert O.sets(rc.lres(t, s)) == O.lres(O.sets(t), O.sets(s), O.carrier(X), O.carrier(Y))
    assert O.sets(rc.rres(r, u)) == O.rres(O.sets(r), O.sets(u), O.carrier(Y), O.carrier(Z))
    assert O.sets(rc.syq(r, u)) == O.syq(O.sets(r), O.sets(u), O.carrier(Y), O.carrier(Z))


@given(rels(X, Y), rels(Y, Z), rels(X, Z))
def test_modular_law(r, s, t):
    lhs = rc.inter(rc.compose(r, s), t)
    assert rc.subseteq(lhs, rc.compose(rc.inter(r, rc.compose(t, rc.converse(s))), s))


@given(rels(X, Y), rels(Y, Z), rels(X, Z))
def test_univalent_exchange(p, q, s):
    if rc.is_univalent(q):
        lhs = rc.inter(rc.compose(p, q), s)
        assert lhs == rc.compose(rc.inter(p, rc.compose(s, rc.converse(q))), q)


@given(rels(X, Z), rels(Y, Z), rels(X, Y))
def test_residual_dualities(t, s, r):
    assert rc.lres(t, s) == rc.compl(rc.compose(rc.compl(t), rc.converse(s)))
    u = rc.compose(r, s)
    assert rc.rres(r, u) == rc.converse(rc.lres(rc.converse(u), rc.converse(r)))


def test_galois_exhaustive():
    a = rc.universe(2, "A")
    for q in rc.all_relations(a, a):
        for s in rc.all_relations(a, a):
            for t in rc.all_relations(a, a):
                assert rc.subseteq(rc.compose(q, s), t) == rc.subseteq(q, rc.lres(t, s))


@given(rels(X, Y), preds(X))
def test_domain_properties(r, p):
    assert rc.dom(rc.compose(r, rc.top(Y, Y))) == rc.dom(r)
    d = rc.as_relation(rc.dom(r))
    assert rc.compose(d, r) == r
    if rc.compose(rc.as_relation(p), r) == r:
        assert rc.dom(r) <= p


def test_complement_iff_deterministic():
    # compose(T, -S) = -(compose(T, S)) for all S exactly when T is a total function
    for t in rc.all_relations(X, Y):
        always = all(rc.compose(t, rc.compl(s)) == rc.compl(rc.compose(t, s)) for s in rc.all_relations(Y, Z))
        assert always == rc.is_deterministic(t)


@given(rels(X, Y))
def test_operator_sugar(r):
    assert (r | ~r) == rc.top(X, Y)
    assert (r & ~r) == rc.empty(X, Y)
    assert (r - r) == rc.empty(X, Y)
    assert r <= r | r
    assert (r @ rc.identity(Y)) == r


@given(rels(X, rc.powerset(Y)))
def test_json_roundtrip(r):
    d = json.loads(json.dumps(rc.to_json(r)))
    assert rc.from_json(d, {"X": X, "Y": Y}) == r


def test_json_shape():
    r = R(X, PY, [(1, 3), (0, 0)])
    d = rc.to_json(r)
    assert d["pairs"] == [[0, []], [1, [0, 1]]]
    assert d["tgt"] == {"name": "P(Y)", "size": 4, "kind": "powerset", "of": {"name": "Y", "size": 2, "kind": "base"}}
    assert rc.to_json(Test(X, 2)) == {"universe": {"name": "X", "size": 2, "kind": "base"}, "members": [1]}


def test_json_size_mismatch():
    d = rc.to_json(rc.empty(X, Y))
    with pytest.raises(rc.SortError):
        rc.from_json(d, {"X": rc.universe(3, "X")})
