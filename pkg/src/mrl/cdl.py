"""Kleene star of square multirelations and the concurrent dynamic logic axioms.

In the axioms ``[R]`` is the atomised box (``boxa``), ``<R>`` the Peleg diamond
(``dias``), ``P -> Q`` is ``imp(P, Q)`` and ``full`` is the full test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import multirel as mr
from .relcore import Relation, RelError, SortError, union


@dataclass(frozen=True)
class StarResult:
    star: Relation
    iterations: int


class StarDivergence(RelError):
    """Iteration exceeded its bound; cannot happen for a monotone map on a finite lattice."""


def kleene_star(r: Relation) -> StarResult:
    """Least fixpoint of ``X -> unit | peleg(r, X)`` by iteration from the empty multirelation."""
    x = r.src
    if mr.base_of(r) != x:
        raise SortError(f"sort mismatch: star needs a square multirelation, got {x}<->{r.tgt}")
    one = mr.unit(x)
    cap = r.tgt.size * x.size + 2
    cur = Relation._make(x, r.tgt, (0,) * x.size)
    for k in range(1, cap + 1):
        nxt = union(one, mr.peleg(r, cur))
        if nxt.rows == cur.rows:
            return StarResult(cur, k)
        cur = nxt
    raise StarDivergence("star iteration did not stabilise")


@dataclass(frozen=True)
class Axiom:
    id: str
    name: str
    variables: Tuple[Tuple[str, str], ...]
    claim: str
    expected: str = "HOLDS"
    anchor: str = ""


_HET = (("R", "mrel(X,Y)"), ("S", "mrel(X,Y)"), ("P", "test(Y)"), ("Q", "test(Y)"))
_SQ = (("R", "mrel(X,X)"), ("S", "mrel(X,X)"), ("P", "test(X)"), ("Q", "test(X)"))


def _vars(pool, names: str):
    return tuple(v for v in pool if v[0] in names)


AXIOMS: List[Axiom] = [
    Axiom("G1", "cdl.box-implication", _vars(_HET, "RPQ"),
          "boxa(R, imp(P, Q)) <= imp(boxa(R, P), boxa(R, Q))", anchor="box distributes over implication"),
    Axiom("G2", "cdl.box-top", _vars(_HET, "R"), "boxa(R, full) = full", anchor="box of the full test"),
    Axiom("G3", "cdl.box-peleg", _vars(_SQ, "RSP"), "boxa(R * S, P) = boxa(R, boxa(S, P))",
          expected="FAILS", anchor="box multiplicative over Peleg composition (unsound)"),
    Axiom("G4", "cdl.box-union", _vars(_HET, "RSP"), "boxa(R | S, P) = boxa(R, P) & boxa(S, P)",
          anchor="box of a union"),
    Axiom("G5", "cdl.box-inner-union", _vars(_HET, "RSP"),
          "boxa(iu(R, S), P) = imp(dias(R, full), boxa(S, P)) & imp(dias(S, full), boxa(R, P))",
          anchor="box of an inner union"),
    Axiom("G6", "cdl.box-star-unfold", _vars(_SQ, "RP"),
          "boxa(star(R), P) <= P & boxa(R, boxa(star(R), P))", anchor="box star unfold"),
    Axiom("G7", "cdl.box-star-induction", _vars(_SQ, "RP"),
          "boxa(star(R), imp(P, boxa(R, P))) <= imp(P, boxa(star(R), P))", anchor="box star induction"),
    Axiom("G8", "cdl.box-test", _vars(_SQ, "PQ"), "boxa(mtest(P), Q) = imp(P, Q)", anchor="box of a test"),
    Axiom("G9", "cdl.box-dia-implication", _vars(_HET, "RPQ"),
          "boxa(R, imp(P, Q)) <= imp(dias(R, P), dias(R, Q))", anchor="box-diamond implication"),
    Axiom("G10", "cdl.dia-peleg", _vars(_SQ, "RSP"), "dias(R * S, P) = dias(R, dias(S, P))",
          anchor="diamond multiplicative over Peleg composition"),
    Axiom("G11", "cdl.dia-union", _vars(_HET, "RSP"), "dias(R | S, P) = dias(R, P) | dias(S, P)",
          anchor="diamond of a union"),
    Axiom("G12", "cdl.dia-inner-union", _vars(_HET, "RSP"),
          "dias(iu(R, S), P) = dias(R, P) & dias(S, P)", anchor="diamond of an inner union"),
    Axiom("G13", "cdl.dia-star-unfold", _vars(_SQ, "RP"),
          "P | dias(R, dias(star(R), P)) = dias(star(R), P)", anchor="diamond star unfold"),
    Axiom("G14", "cdl.star-induction-mixed", _vars(_SQ, "RP"),
          "boxa(star(R), imp(dias(R, P), P)) <= imp(dias(star(R), P), P)", anchor="diamond star induction"),
    Axiom("G15", "cdl.dia-test", _vars(_SQ, "PQ"), "dias(mtest(P), Q) = P & Q", anchor="diamond of a test"),
    Axiom("G16", "cdl.box-empty-dia-top", _vars(_HET, "R"), "boxa(R, empty) | dias(R, full) = full",
          anchor="box of empty or diamond of full"),
]

# further checks run by the suite next to the sixteen axioms
EXTRA: List[Axiom] = [
    Axiom("repair", "cdl.box-peleg-repair",
          (("R", "mrel(X,Y)"), ("S", "mrel(Y,Z)"), ("P", "test(Z)")),
          "boxa(R, boxa(S, P)) <= boxa(R * S, P)", anchor="repaired box over Peleg composition"),
    Axiom("repair-down", "cdl.box-peleg-down",
          (("R", "mrel(X,Y)"), ("S", "mrel(Y,Z)"), ("P", "test(Z)")),
          "boxa(down(R) * S, P) = boxa(R, boxa(S, P))", anchor="equality after down-closing"),
    Axiom("repair-total", "cdl.box-peleg-total",
          (("R", "mrel(X,Y)"), ("S", "mrel(Y,Z)"), ("P", "test(Z)")),
          "is_total(S) => boxa(R * S, P) = boxa(R, boxa(S, P))", anchor="equality for total second factor"),
]

BY_ID: Dict[str, Axiom] = {a.id: a for a in AXIOMS + EXTRA}
for _a in AXIOMS + EXTRA:
    BY_ID[_a.name] = _a


@dataclass
class AxiomResult:
    holds: bool
    sides: Optional[Tuple[object, ...]]  # evaluated sides of the comparison on failure
    witness: Optional[dict]


def goldblatt_axiom(axiom_id: str, bindings: dict, universes: Optional[dict] = None) -> AxiomResult:
    """Evaluate one axiom on one instance; on failure return the bindings and both sides."""
    from . import terms

    ax = BY_ID[axiom_id]
    missing = [v for v, _ in ax.variables if v not in bindings]
    if missing:
        raise KeyError(f"axiom {ax.id} needs bindings for {', '.join(missing)}")
    env = terms.Env(universes or {}, bindings)
    claim = terms.parse_claim(ax.claim)
    _, ok = terms.resolve(claim, env)
    if ok:
        return AxiomResult(True, None, None)
    sides = None
    if claim.kind == "cmp":
        sides = tuple(terms.evaluate(a, env) for a in claim.args)
    witness = {v: bindings[v] for v, _ in ax.variables}
    return AxiomResult(False, sides, witness)


def goldblatt_suite(sizes: Dict[str, int], mode: str = "exhaustive", **kw):
    """Sweep the sixteen axioms plus the repair laws; returns a list of reports."""
    from .lawcheck import registry, engine

    laws = registry.section("goldblatt")
    return [engine.check(law, sizes, mode=mode, **kw) for law in laws]
