import pytest

import oracle as O
from mrl import cdl
from mrl import multirel as mr
from mrl import relcore as rc
from mrl.lawcheck import engine, registry
from mrl.relcore import Relation, Test

X = rc.universe(2, "X")
PX = rc.powerset(X)
R_AB = Relation.from_pairs(X, PX, [(0, 3)])


def test_star_examples():
    one = mr.unit(X)
    assert cdl.kleene_star(rc.empty(X, PX)).star == one
    assert cdl.kleene_star(one).star == one
    assert cdl.kleene_star(R_AB).star == rc.union(one, R_AB)


def test_star_fixpoint_and_leastness_exhaustive():
    one = mr.unit(X)
    ms = list(mr.all_multirelations(X, X))
    stars = {}
    for r in ms:
        res = cdl.kleene_star(r)
        s = res.star
        assert s == rc.union(one, mr.peleg(r, s))
        assert O.sets(s) == O.star(O.sets(r), O.carrier(X))
        stars[r] = s
    # leastness: every prefixpoint contains the star (sampled family of candidates T)
    for r in ms[::17]:
        for t in ms:
            if rc.subseteq(rc.union(one, mr.peleg(r, t)), t):
                assert rc.subseteq(stars[r], t)


def test_star_needs_square():
    y = rc.universe(3, "Y")
    with pytest.raises(rc.SortError):
        cdl.kleene_star(rc.empty(X, rc.powerset(y)))


def test_sixteen_axioms_registered():
    ids = [a.id for a in cdl.AXIOMS]
    assert ids == [f"G{i}" for i in range(1, 17)]
    assert [a.id for a in cdl.AXIOMS if a.expected == "FAILS"] == ["G3"]
    assert registry.get("G5").claim == cdl.BY_ID["G5"].claim


def test_box_composition_counterexample():
    res = cdl.goldblatt_axiom("G3", {"R": R_AB, "S": R_AB, "P": rc.empty_test(X)}, {"X": X})
    assert not res.holds
    lhs, rhs = res.sides
    assert lhs == Test(X, 0b11)
    assert rhs == Test(X, 0b10)


def test_axiom_instances():
    p, q = Test(X, 0b01), Test(X, 0b11)
    assert cdl.goldblatt_axiom("G2", {"R": R_AB}, {"X": X, "Y": X}).holds
    assert cdl.goldblatt_axiom("G15", {"P": p, "Q": q}, {"X": X}).holds
    with pytest.raises(KeyError):
        cdl.goldblatt_axiom("G15", {"P": p}, {"X": X})


def test_all_axioms_hold_on_singletons():
    # box-over-composition needs two elements to fail
    reports = cdl.goldblatt_suite({"X": 1, "Y": 1, "Z": 1})
    by = {r.law: r for r in reports}
    for ax in cdl.AXIOMS:
        assert by[ax.name].outcome == "PASS", ax.id


def test_repair_laws_small():
    for ax in cdl.EXTRA:
        r = engine.check(registry.get(ax.name), {"X": 2, "Y": 1, "Z": 2})
        assert r.outcome == "PASS"
