from hypothesis import given

import oracle as O
from helpers import PX, PY, X, Y, Z, preds, rels
from mrl import multirel as mr
from mrl import powerops as po
from mrl import relcore as rc
from mrl.relcore import Relation, Test

W = rc.universe(1, "W")


def test_membership_and_has():
    assert po.membership(W).pairs == [(0, 1)]
    assert po.has_element(Y) == rc.converse(po.membership(Y))
    assert mr.up(po.eta(Y)) == po.membership(Y)


def test_power_transpose_examples():
    assert po.power_transpose(rc.identity(X)) == po.eta(X)
    assert po.power_transpose(rc.empty(X, Y)).pairs == [(0, 0), (1, 0)]
    r = Relation.from_pairs(X, X, [(0, 0), (0, 1)])
    assert po.power_transpose(r).pairs == [(0, 3), (1, 0)]


@given(rels(X, Y))
def test_power_transpose_oracle(r):
    s = O.sets(r)
    expect = {(a, frozenset(O.image(s, a))) for a in O.carrier(X)}
    assert O.sets(po.power_transpose(r)) == expect
    assert rc.is_deterministic(po.power_transpose(r))


def test_image_functor_examples():
    assert po.image_functor(rc.identity(X)) == rc.identity(PX)
    r = Relation.from_pairs(X, X, [(0, 1)])
    assert sorted(po.image_functor(r).pairs) == [(0, 0), (1, 2), (2, 0), (3, 2)]


@given(rels(X, Y), rels(Y, Z))
def test_image_functor_oracle_and_functoriality(r, s):
    pr = po.image_functor(r)
    rs = O.sets(r)
    expect = {(A, frozenset(b for (a, b) in rs if a in A)) for A in O.carrier(PX)}
    assert O.sets(pr) == expect
    assert rc.compose(pr, po.image_functor(s)) == po.image_functor(rc.compose(r, s))


def test_eta_mu():
    assert po.eta(X).pairs == [(0, 1), (1, 2)]
    # over |X| = 1: P(P(W)) = {{}, {{}}, {{a}}, {{},{a}}}
    assert po.mu(W).pairs == [(0, 0), (1, 0), (2, 1), (3, 1)]
    assert rc.compose(po.eta(PX), po.mu(X)) == rc.identity(PX)
    assert rc.compose(po.image_functor(po.eta(X)), po.mu(X)) == rc.identity(PX)


def test_mu_oracle():
    got = O.sets(po.mu(X))
    expect = {(F, frozenset().union(*F)) for F in O.carrier(rc.powerset(PX))}
    assert got == expect


def test_power_test():
    assert po.power_test(rc.full_test(X)) == rc.full_test(PX)
    assert po.power_test(rc.empty_test(X)) == Test(PX, 0b0001)
    assert sorted(po.power_test(Test(X, 0b01))) == [0, 1]


@given(preds(Y))
def test_power_test_oracle(p):
    ps = O.members(p)
    assert O.members(po.power_test(p)) == {A for A in O.carrier(PY) if A <= ps}


def test_omega_and_c():
    pw = rc.powerset(W)
    assert po.omega(W).pairs == [(0, 0), (0, 1), (1, 1)]
    assert po.comp_rel(W).pairs == [(0, 1), (1, 0)]
    assert rc.compose(po.comp_rel(Y), po.comp_rel(Y)) == rc.identity(PY)
    assert po.comp_rel(Y) == rc.converse(po.comp_rel(Y))
    assert rc.compose(rc.compl(po.membership(Y)), po.comp_rel(Y)) == po.membership(Y)
    assert rc.compose(po.membership(Y), po.comp_rel(Y)) == rc.compl(po.membership(Y))
    assert po.omega_conv(Y) == rc.converse(po.omega(Y))
    assert pw.size == 2


def test_omega_oracle():
    assert O.sets(po.omega(Y)) == {(A, B) for A in O.carrier(PY) for B in O.carrier(PY) if A <= B}


@given(rels(X, Y))
def test_transpose_with_complement_and_subset(r):
    lam = po.power_transpose(r)
    assert rc.compose(lam, po.comp_rel(Y)) == po.power_transpose(rc.compl(r))
    ni = po.has_element(Y)
    assert rc.compose(lam, po.omega(Y)) == rc.converse(rc.lres(ni, r))
    assert rc.lres(ni, r) == rc.converse(mr.dual(rc.compose(r, po.membership(Y))))


@given(rels(X, Y), rels(Y, Z))
def test_transpose_alpha(r, s):
    assert mr.alpha(po.power_transpose(r)) == r
    assert po.power_transpose(rc.compose(r, s)) == rc.compose(po.power_transpose(r), po.image_functor(s))
    assert po.power_transpose(po.has_element(X)) == rc.identity(PX)
    assert mr.alpha(po.eta(X)) == rc.identity(X)


def test_subsets_mask():
    # subsets of {a} inside a two-element base: {} and {a}
    assert po.subsets_mask(0b01, 2) == 0b0011
    assert po.subsets_mask(0b11, 2) == 0b1111
    assert po.subsets_mask(0, 2) == 1
