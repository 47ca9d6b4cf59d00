import pytest
from hypothesis import given

import oracle as O
from helpers import PX, PY, X, Y, multis, preds, rels
from mrl import multirel as mr
from mrl import powerops as po
from mrl import relcore as rc
from mrl.relcore import Relation

A1 = rc.universe(1, "A")
Y2 = rc.universe(2, "Y2")


def M(src, base, pairs):
    return Relation.from_pairs(src, rc.powerset(base), pairs)


R_AB = M(X, X, [(0, 3)])  # {(a,{a,b})}


def test_alpha_examples():
    assert mr.alpha(R_AB).pairs == [(0, 0), (0, 1)]
    s = Relation.from_pairs(X, Y, [(0, 1), (1, 0)])
    assert mr.alpha(rc.compose(s, po.eta(Y))) == s
    assert mr.alpha(rc.empty(X, PY)) == rc.empty(X, Y)


def test_inner_union_examples():
    r = M(X, Y, [(0, 1)])
    s = M(X, Y, [(0, 2)])
    assert mr.inner_union(r, s).pairs == [(0, 3)]
    assert mr.inner_union(R_AB, mr.one_iu(X, X)) == R_AB
    assert mr.inner_compl(mr.inner_compl(R_AB)) == R_AB


def test_constants():
    assert mr.one_iu(X, Y).pairs == [(0, 0), (1, 0)]
    assert mr.atoms_iu(A1, Y).pairs == [(0, 1), (0, 2)]
    assert mr.unit(X) == po.power_transpose(rc.identity(X))


def test_closures():
    assert mr.up(M(X, Y, [(0, 1)])).pairs == [(0, 1), (0, 3)]
    assert mr.nu(M(X, X, [(0, 0), (0, 1)])).pairs == [(0, 1)]


@given(multis(X, Y))
def test_closure_algebra(r):
    assert mr.down(mr.up(mr.down(r))) == mr.down(mr.up(r))
    assert mr.up(mr.up(r)) == mr.up(r)
    assert rc.subseteq(r, mr.up(r)) and rc.subseteq(r, mr.down(r))
    assert mr.convex(r) == rc.inter(mr.up(r), mr.down(r))
    assert mr.tau(r) == rc.inter(r, mr.one_iu(X, Y))


@given(multis(X, Y), multis(X, Y))
def test_inner_ops_match_oracle(r, s):
    ys = O.carrier(Y)
    assert O.sets(mr.up(r)) == O.up(O.sets(r), ys)
    assert O.sets(mr.down(r)) == O.down(O.sets(r))
    assert O.sets(mr.inner_union(r, s)) == O.inner_union(O.sets(r), O.sets(s))
    assert O.sets(mr.inner_compl(r)) == O.inner_compl(O.sets(r), ys)
    assert O.sets(mr.nu(r)) == O.nu(O.sets(r))
    assert O.sets(mr.alpha(r)) == O.alpha(O.sets(r))
    assert O.sets(mr.delta_i(r)) == O.delta_i(O.sets(r))
    assert O.sets(mr.delta_o(r)) == O.delta_o(O.sets(r), O.carrier(X))


def test_predicates():
    assert all(mr.is_inner_deterministic(rc.compose(s, po.eta(Y))) for s in rc.all_relations(X, Y))
    assert not mr.is_inner_total(mr.one_iu(X, Y))
    assert not mr.is_inner_univalent(R_AB)


def test_determinisations():
    r = M(X, X, [(0, 1), (0, 2)])
    assert mr.delta_o(r).pairs == [(0, 3), (1, 0)]
    assert mr.delta_i(r).pairs == [(0, 1), (0, 2)]


@given(multis(X, Y))
def test_determinisation_identities(r):
    assert mr.delta_i(mr.delta_o(r)) == mr.delta_i(r)
    assert mr.delta_i(mr.nu(r)) == mr.delta_i(r)
    assert mr.alpha(mr.nu(r)) == mr.alpha(r)
    assert mr.alpha(mr.down(r)) == mr.alpha(r)
    assert (mr.delta_i(r) == r) == mr.is_inner_deterministic(r)
    assert (mr.delta_o(r) == r) == rc.is_deterministic(r)


def test_lifts():
    assert mr.peleg_lift(mr.unit(X)) == rc.identity(PX)
    for r in mr.all_multirelations(X, Y):
        if rc.is_deterministic(r):
            assert mr.peleg_lift(r) == mr.kleisli_lift(r)
        assert rc.dom(mr.peleg_lift(r)) == po.power_test(rc.dom(r))


def test_peleg_examples():
    assert mr.peleg(R_AB, R_AB) == rc.empty(X, PX)
    assert mr.peleg(R_AB, mr.unit(X)) == R_AB
    assert mr.peleg(mr.unit(X), R_AB) == R_AB
    s = M(X, X, [(0, 1), (1, 3)])
    assert mr.peleg(R_AB, s).pairs == [(0, 3)]


@given(multis(X, Y), multis(Y, X))
def test_peleg_matches_choice_oracle(r, s):
    assert O.sets(mr.peleg(r, s)) == O.peleg(O.sets(r), O.sets(s))


def test_peleg_dual_oracle_exhaustive():
    # choice-function composition against composition with the Peleg lifting, all 256 x 256 pairs
    ms = list(mr.all_multirelations(X, Y))
    ns = list(mr.all_multirelations(Y, X))
    lifts = [mr.peleg_lift(s) for s in ns]
    for r in ms:
        for s, lift in zip(ns, lifts):
            assert mr.peleg(r, s) == rc.compose(r, lift)


@given(multis(X, Y))
def test_lift_oracles(r):
    assert mr.peleg_lift(r) == mr.peleg_lift_via_subrelations(r)
    assert mr.kleisli_lift(r) == rc.compose(po.image_functor(r), po.mu(Y))


@given(multis(X, Y), multis(Y, X))
def test_cocomposition_and_cofusion(r, s):
    assert mr.co_compose(r, s) == mr.inner_compl(mr.peleg(r, mr.inner_compl(s)))
    assert mr.cofusion(mr.cofusion(r)) == mr.cofusion(r)
    assert mr.cofission(r) == rc.inter(mr.up(r), mr.atoms_ii(X, Y))


def test_cofission_small():
    # over one-element universes: eta(Id) = {(a,{a})}; up gives {(a,{a})}; co-atoms are {(a,{})}
    one = mr.unit(A1)
    assert mr.cofission(one).pairs == []


@given(multis(X, Y), multis(X, Y), multis(Y, X))
def test_peleg_union_left(r, r2, s):
    assert mr.peleg(rc.union(r, r2), s) == rc.union(mr.peleg(r, s), mr.peleg(r2, s))


@given(multis(X, Y), multis(Y, X))
def test_residual_adjunction(r, s):
    t = mr.peleg(r, s)
    assert rc.subseteq(r, mr.mres(t, s))
    assert rc.subseteq(mr.peleg(mr.mres(t, s), s), t)
    assert mr.mres(rc.top(X, PX), s) == rc.top(X, PY)


def test_residual_galois_exhaustive_one_source():
    ms = list(mr.all_multirelations(A1, Y))
    ns = list(mr.all_multirelations(Y, Y2))
    ts = list(mr.all_multirelations(A1, Y2))
    for s in ns:
        for t in ts:
            res = mr.mres(t, s)
            for r in ms:
                assert rc.subseteq(mr.peleg(r, s), t) == rc.subseteq(r, res)


@given(multis(X, Y))
def test_preorders(r):
    assert mr.le_up(r, r)
    assert mr.le_down(rc.empty(X, PY), r)
    assert mr.le_convex(r, r)


def test_preorder_antisymmetry_on_inner_deterministic():
    dets = [r for r in mr.all_multirelations(X, Y) if mr.is_inner_deterministic(r)]
    for r in dets:
        for s in dets:
            if mr.le_down(r, s) and mr.le_down(s, r):
                assert r == s


@given(preds(Y))
def test_tests_as_multirelations(p):
    m = mr.mtest(p)
    assert mr.mtest_to_test(m) == p
    assert mr.alpha(m) == rc.as_relation(p)
    assert mr.peleg_lift(m) == rc.as_relation(po.power_test(p))


def test_sort_checks():
    with pytest.raises(rc.SortError):
        mr.peleg(R_AB, M(Y, Y, []))
    with pytest.raises(rc.SortError):
        mr.alpha(rc.empty(X, Y))
