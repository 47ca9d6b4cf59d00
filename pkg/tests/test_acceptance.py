"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line with its wall time, also when
run directly with ``python3 tests/test_acceptance.py``.
"""

import json
import sys
import time
from contextlib import contextmanager

from click.testing import CliRunner

from mrl import cdl
from mrl import multirel as mr
from mrl import relcore as rc
from mrl.cli import main
from mrl.lawcheck import engine, registry
from mrl.relcore import Relation, Test

S2 = {"X": 2, "Y": 2}
S222 = {"X": 2, "Y": 2, "Z": 2}
LINES = []  # printed in the terminal summary, see conftest.py


@contextmanager
def criterion(n, title, budget=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        over = budget is not None and dt > budget
        status = "PASS" if ok and not over else "FAIL"
        note = f" (over the {budget:.0f} s budget)" if over else ""
        LINES.append(f"criterion {n}: {status}  {title}  {dt:.1f} s{note}")
    assert not over, f"criterion {n} took {dt:.1f} s, budget {budget} s"


def sweep(laws, sizes=None, **kw):
    reports = [engine.check(l, sizes, **kw) for l in laws]
    bad = [(r.law, r.outcome, r.reason) for r in reports if not r.matches]
    return reports, bad


def test_criterion_1_goldblatt_axioms():
    with criterion(1, "sixteen axioms at |X|=|Y|=2", budget=60):
        axioms = [registry.get(a.id) for a in cdl.AXIOMS]
        reports, bad = sweep(axioms, S2, mode="exhaustive")
        assert bad == []
        by = {r.law: r for r in reports}
        for ax in cdl.AXIOMS:
            want = "FAIL" if ax.id == "G3" else "PASS"
            assert by[ax.name].outcome == want, ax.id
        assert by["cdl.box-peleg"].witness
        x = rc.universe(2, "X")
        r = Relation.from_pairs(x, rc.powerset(x), [(0, 3)])
        res = cdl.goldblatt_axiom("G3", {"R": r, "S": r, "P": rc.empty_test(x)}, {"X": x})
        assert not res.holds
        assert res.sides == (Test(x, 0b11), Test(x, 0b10))


def test_criterion_2_repair_laws():
    with criterion(2, "repaired composition laws at |X|=|Y|=|Z|=2", budget=120):
        laws = [registry.get(a.name) for a in cdl.EXTRA]
        assert len(laws) == 3
        reports, bad = sweep(laws, S222, mode="exhaustive")
        assert bad == []
        for r in reports:
            assert r.outcome == "PASS" and r.checked + r.filtered == 256 * 256 * 4


HEAVY = {"peleg.weak-assoc", "peleg.assoc-univalent", "peleg.assoc-strict"}


def test_criterion_3_lemma_suites():
    with criterion(3, "peleg, determinism, tests, modal and box-equality sections"):
        laws = [l for s in ("peleg", "determinism", "tests", "modal", "box-equalities")
                for l in registry.section(s) if l.id not in HEAVY]
        reports, bad = sweep(laws, mode="exhaustive")
        assert bad == []
        slow = [(r.law, round(r.ms / 1000, 1)) for r in reports if r.ms > 10_000]
        assert slow == []
        assert registry.get("determinism.alpha-peleg-strict").expected == "FAILS"


def test_criterion_4_graph_suite():
    with criterion(4, "graph operators", budget=30):
        reports, bad = sweep(registry.section("graph"), mode="exhaustive")
        assert bad == []
        assert all(r.outcome == "PASS" for r in reports)


def test_criterion_5_peleg_associativity():
    with criterion(5, "dual oracle and associativity", budget=600):
        r = engine.check(registry.get("peleg.dual-oracle"), S222, mode="exhaustive")
        assert r.outcome == "PASS" and r.checked == 256 * 256
        strict = engine.check(registry.get("peleg.assoc-strict"), mode="exhaustive")
        assert strict.outcome == "FAIL" and strict.witness
        uni = engine.check(registry.get("peleg.assoc-univalent"), mode="exhaustive")
        assert uni.outcome == "PASS" and uni.checked > 0
        weak = engine.check(registry.get("peleg.weak-assoc"), mode="exhaustive")
        assert weak.outcome == "PASS" and weak.checked == 256 ** 3


def test_criterion_6_basis():
    with criterion(6, "derived definitions against direct implementations"):
        reports, _ = sweep(registry.section("basis"))
        assert [r.law for r in reports if r.outcome in ("FAIL", "VACUOUS")] == []
        assert all(r.reason for r in reports if r.outcome == "SKIPPED")


def test_criterion_7_star():
    with criterion(7, "star fixpoint, leastness and star axioms", budget=30):
        x = rc.universe(2, "X")
        one = mr.unit(x)
        ms = list(mr.all_multirelations(x, x))
        prefix = {}
        for r in ms:
            prefix[r] = [t for t in ms if rc.subseteq(rc.union(one, mr.peleg(r, t)), t)]
        for r in ms:
            s = cdl.kleene_star(r).star
            assert s == rc.union(one, mr.peleg(r, s))
            assert s in prefix[r] and all(rc.subseteq(s, t) for t in prefix[r])
        laws = registry.section("star") + [registry.get(g) for g in ("G6", "G7", "G13", "G14")]
        reports, bad = sweep(laws, S2, mode="exhaustive")
        assert bad == [] and all(r.outcome == "PASS" for r in reports)


def test_criterion_8_deterministic_reports():
    with criterion(8, "byte-identical JSON across runs and job counts"):
        run = CliRunner()
        for args in (["goldblatt", "--size", "X=2,Y=2"], ["check", "section:graph"]):
            outs = [run.invoke(main, args + ["--json", "--jobs", j]) for j in ("1", "1", "8")]
            assert all(o.exit_code == 0 for o in outs), outs[0].output
            assert outs[0].output == outs[1].output == outs[2].output
            json.loads(outs[0].output)
        s = ["check", "determinism.alpha-peleg-strict", "--mode", "sample", "--samples", "20000", "--json"]
        outs = [run.invoke(main, s + ["--jobs", j]).output for j in ("1", "8")]
        assert outs[0] == outs[1]


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, "-q"]))
