"""Named laws, grouped by section.

Each entry states a claim in the expression language (see :mod:`mrl.terms`)
over typed variables.  Sorts: ``rel(A,B)``, ``mrel(X,Y)`` (that is
``rel(X,P(Y))``) and ``test(Y)``.  ``anchor`` is a short tag naming the
statement a law belongs to; :func:`audit` reports tags without laws.
"""

from __future__ import annotations

from typing import Dict, List

from .. import cdl
from .engine import Law

LAWS: List[Law] = []
_section = ""

S2 = (("X", 2), ("Y", 2), ("Z", 2))


def _vars(spec: str):
    out = []
    for part in spec.split(";"):
        part = part.strip()
        if part:
            name, sort = part.split(":", 1)
            out.append((name.strip(), sort.strip()))
    return tuple(out)


def law(id, variables, claim, side=(), expected="HOLDS", anchor="", sizes=S2, mode="auto", note=""):
    if isinstance(side, str):
        side = (side,)
    LAWS.append(Law(f"{_section}.{id}", _vars(variables), claim, tuple(side), expected, anchor, _section,
                    tuple(sizes), mode, note))


def section(name: str):
    global _section
    _section = name


# the statements the registry must cover
ANCHORS = [
    "peleg lifting and tests",
    "peleg composition basics",
    "alpha weakly preserves peleg composition",
    "alpha counterexample",
    "deterministic quantaloids",
    "determinisation isomorphism",
    "determinisation fixpoints",
    "determinism preorders",
    "transpose and alpha",
    "tests and power tests",
    "domain locality",
    "domain and determinisation",
    "relational modalities",
    "peleg modalities",
    "alpha modalities",
    "box via complement of universal part",
    "box via other modalities",
    "domain and inner determinisation via constants",
    "modal inclusions for nu",
    "modal coincidences",
    "modalities specialise to relations",
    "box via outer determinisation",
    "box and residual auxiliary",
    "box via left residual",
    "box equality patterns",
    "box equality remark",
    "complementation and subset relations",
    "transpose with complement and subset",
    "relational box graph without residual",
    "graph duality and conjugation",
    "alpha box graph without residual",
    "peleg graph duality",
    "graph operators specialise",
    "graph operators tabulate",
    "outer determinism and complement",
    "concurrent dynamic logic axioms",
    "repaired box composition",
    "modal actions",
    "kleene star",
    "basis definitions",
]


# -- Peleg composition, liftings, inner structure --------------------------------------------

section("peleg")
A = "peleg composition basics"
law("unit-left", "R:mrel(X,Y)", "one[X] * R = R", anchor=A)
law("unit-right", "R:mrel(X,Y)", "R * one[Y] = R", anchor=A)
law("union-left", "R:mrel(X,Y); S:mrel(X,Y); T:mrel(Y,Z)", "(R | S) * T = (R * T) | (S * T)", anchor=A,
    sizes=(("X", 1), ("Y", 2), ("Z", 2)), note="pointwise in the source, so one source element suffices")
law("weak-assoc", "R:mrel(X,Y); S:mrel(Y,Z); T:mrel(Z,W)", "(R * S) * T <= R * (S * T)", anchor=A,
    sizes=S2 + (("W", 2),))
law("assoc-univalent", "R:mrel(X,Y); S:mrel(Y,Z); T:mrel(Z,W)", "(R * S) * T = R * (S * T)",
    side="is_univalent(T)", anchor=A, sizes=S2 + (("W", 2),))
law("assoc-strict", "R:mrel(X,Y); S:mrel(Y,Z); T:mrel(Z,W)", "(R * S) * T = R * (S * T)",
    expected="FAILS", anchor=A, sizes=S2 + (("W", 2),))
law("dual-oracle", "R:mrel(X,Y); S:mrel(Y,Z)", "R * S = peleg_via_lift(R, S)", anchor=A)
law("lift-oracle", "R:mrel(X,Y)", "plift(R) = plift_sub(R)", anchor=A)
law("kleisli-lift", "R:mrel(X,Y)", "klift(R) = Pfun(R) ; mu[Y]", anchor=A)
law("kleisli-lift-alpha", "R:mrel(X,Y)", "klift(R) = Pfun(alpha(R))", anchor=A)
law("lifts-agree-det", "R:mrel(X,Y)", "plift(R) = klift(R)", side="is_det(R)", anchor=A)
law("residual-galois", "R:mrel(X,Y); S:mrel(Y,Z); T:mrel(X,Z)", "R * S <= T <=> R <= mres(T, S)", anchor=A,
    sizes=(("X", 1), ("Y", 2), ("Z", 2)), note="pointwise in the source, so one source element suffices")
law("inner-union-comm", "R:mrel(X,Y); S:mrel(X,Y)", "iu(R, S) = iu(S, R)", anchor=A)
law("inner-union-assoc", "R:mrel(X,Y); S:mrel(X,Y); T:mrel(X,Y)", "iu(iu(R, S), T) = iu(R, iu(S, T))", anchor=A,
    sizes=(("X", 1), ("Y", 2)), note="pointwise in the source")
law("inner-union-unit", "R:mrel(X,Y)", "iu(R, one_iu[X,Y]) = R", anchor=A)
law("inner-compl-involution", "R:mrel(X,Y)", "icpl(icpl(R)) = R", anchor=A)
law("inner-compl-C", "R:mrel(X,Y)", "icpl(R) = R ; C[Y]", anchor=A)
law("up-omega", "R:mrel(X,Y)", "up(R) = R ; Omega[Y]", anchor=A)
law("down-omega", "R:mrel(X,Y)", "down(R) = R ; Omega[Y]^", anchor=A)
law("up-down-duality", "R:mrel(X,Y)", "down(R) = icpl(up(icpl(R)))", anchor=A)
law("nu-def", "R:mrel(X,Y)", "nu(R) = minus(R, one_iu[X,Y])", anchor=A)
law("inner-total-def", "R:mrel(X,Y)", "is_inner_total(R) <=> R <= ~one_iu[X,Y]", anchor=A)
law("inner-univalent-def", "R:mrel(X,Y)", "is_inner_univalent(R) <=> R <= A_iu[X,Y] | one_iu[X,Y]", anchor=A)
law("mu-lift-id", "", "mu[X] = klift(Id[P(X)])", anchor=A)
law("test-right", "R:mrel(X,Y); P:test(Y)", "R * mtest(P) = R ; ptest(P)", anchor=A)
law("test-left", "R:mrel(X,Y); P:test(X)", "mtest(P) * R = P ; R", anchor=A)
law("test-plift", "P:test(X)", "plift(mtest(P)) = ptest(P)", anchor=A)
law("test-iso", "P:test(X)", "mtest_inv(mtest(P)) = P", anchor=A)
law("test-iso-alpha", "P:test(X)", "alpha(mtest(P)) = P", anchor=A)

A = "peleg lifting and tests"
law("lift-domain", "R:mrel(X,Y)", "dom(plift(R)) = ptest(dom(R))", anchor=A)
law("lift-test", "R:mrel(X,Y); P:test(X)", "plift(P ; R) = ptest(P) ; plift(R)", anchor=A)
law("unit-test", "P:test(X)", "one[X] ; ptest(P) = P ; one[X]", anchor=A)


# -- determinism ------------------------------------------------------------------------------

section("determinism")
A = "alpha weakly preserves peleg composition"
law("alpha-peleg-incl", "R:mrel(X,Y); S:mrel(Y,Z)", "alpha(R * S) <= alpha(R) ; alpha(S)", anchor=A)
law("alpha-peleg-inner-det", "R:mrel(X,Y); S:mrel(Y,Z)", "alpha(R * S) = alpha(R) ; alpha(S)",
    side=("is_inner_det(R)", "is_inner_det(S)"), anchor=A)
law("alpha-peleg-outer-det", "R:mrel(X,Y); S:mrel(Y,Z)", "alpha(R * S) = alpha(R) ; alpha(S)",
    side=("is_det(R)", "is_det(S)"), anchor=A)
law("alpha-peleg-strict", "R:mrel(X,Y); S:mrel(Y,Z)", "alpha(R * S) = alpha(R) ; alpha(S)",
    expected="FAILS", anchor=A)

A = "alpha counterexample"
_R = "{(a,{a,b})}:X<->P(X)"
law("example-peleg-empty", "", f"{_R} * {_R} = empty[X,P(X)]", anchor=A)
law("example-alpha-empty", "", f"alpha({_R} * {_R}) = empty[X,X]", anchor=A)
law("example-alpha", "", f"alpha({_R}) = {{(a,a),(a,b)}}:X<->X", anchor=A)
law("example-alpha-square", "", f"alpha({_R}) ; alpha({_R}) = alpha({_R})", anchor=A)
law("example-strict", "", f"alpha({_R} * {_R}) < alpha({_R}) ; alpha({_R})", anchor=A)

A = "deterministic quantaloids"
M = "meta: instance-level only"
law("transpose-peleg", "R:rel(X,Y); S:rel(Y,Z)", "Lambda(R ; S) = Lambda(R) * Lambda(S)", anchor=A, note=M)
law("transpose-id", "", "Lambda(Id[X]) = one[X]", anchor=A, note=M)
law("transpose-union", "R:rel(X,Y); S:rel(X,Y)", "Lambda(R | S) = iu(Lambda(R), Lambda(S))", anchor=A, note=M)
law("transpose-bijective", "R:rel(X,Y)", "alpha(Lambda(R)) = R", anchor=A, note=M)
law("transpose-surjective", "f:mrel(X,Y)", "Lambda(alpha(f)) = f", side="is_det(f)", anchor=A, note=M)
law("unit-compose", "R:rel(X,Y); S:rel(Y,Z)", "eta(R ; S) = eta(R) * eta(S)", anchor=A, note=M)
law("unit-union", "R:rel(X,Y); S:rel(X,Y)", "eta(R | S) = eta(R) | eta(S)", anchor=A, note=M)
law("unit-id", "", "eta(Id[X]) = one[X]", anchor=A, note=M)
law("unit-bijective", "R:rel(X,Y)", "alpha(eta(R)) = R", anchor=A, note=M)
law("unit-surjective", "f:mrel(X,Y)", "eta(alpha(f)) = f", side="is_inner_det(f)", anchor=A, note=M)
law("inner-union-idempotent-det", "f:mrel(X,Y)", "iu(f, f) = f", side="is_det(f)", anchor=A, note=M)
law("transpose-outer-det", "R:rel(X,Y)", "is_det(Lambda(R))", anchor=A, note=M)
law("unit-inner-det", "R:rel(X,Y)", "is_inner_det(eta(R))", anchor=A, note=M)

A = "determinisation isomorphism"
law("do-di-inverse", "R:mrel(X,Y)", "do(di(R)) = R", side="is_det(R)", anchor=A, note=M)
law("di-do-inverse", "R:mrel(X,Y)", "di(do(R)) = R", side="is_inner_det(R)", anchor=A, note=M)
law("di-functor", "R:mrel(X,Y); S:mrel(Y,Z)", "di(R * S) = di(R) * di(S)", side=("is_det(R)", "is_det(S)"),
    anchor=A, note=M)
law("do-functor", "R:mrel(X,Y); S:mrel(Y,Z)", "do(R * S) = do(R) * do(S)",
    side=("is_inner_det(R)", "is_inner_det(S)"), anchor=A, note=M)
law("di-expansion", "R:mrel(X,Y)", "di(R) = eta(alpha(R))", anchor=A)
law("do-expansion", "R:mrel(X,Y)", "do(R) = Lambda(alpha(R))", anchor=A)

A = "determinisation fixpoints"
law("di-fixpoints", "R:mrel(X,Y)", "di(R) = R <=> is_inner_det(R)", anchor=A)
law("do-fixpoints", "R:mrel(X,Y)", "do(R) = R <=> is_det(R)", anchor=A)

A = "determinism preorders"
for cls in ("is_inner_det", "is_det"):
    tag = "inner" if cls == "is_inner_det" else "outer"
    sides = (f"{cls}(R)", f"{cls}(S)")
    law(f"down-antisymmetric-{tag}", "R:mrel(X,Y); S:mrel(X,Y)", "and(le_down(R, S), le_down(S, R)) => R = S",
        side=sides, anchor=A)
    law(f"up-antisymmetric-{tag}", "R:mrel(X,Y); S:mrel(X,Y)", "and(le_up(R, S), le_up(S, R)) => R = S",
        side=sides, anchor=A)
law("preorders-coincide-outer", "R:mrel(X,Y); S:mrel(X,Y)", "le_down(R, S) <=> le_up(R, S)",
    side=("is_det(R)", "is_det(S)"), anchor=A)
law("down-is-inclusion-inner", "R:mrel(X,Y); S:mrel(X,Y)", "le_down(R, S) <=> sub(R, S)",
    side=("is_inner_det(R)", "is_inner_det(S)"), anchor=A)
law("up-is-superset-inner", "R:mrel(X,Y); S:mrel(X,Y)", "le_up(S, R) <=> sub(R, S)",
    side=("is_inner_det(R)", "is_inner_det(S)"), anchor=A)

A = "transpose and alpha"
law("alpha-transpose", "R:rel(X,Y)", "alpha(Lambda(R)) = R", anchor=A)
law("transpose-alpha", "f:mrel(X,Y)", "Lambda(alpha(f)) = f", side="is_det(f)", anchor=A)
law("det-transpose", "f:mrel(X,Y); T:rel(P(Y),Z)", "f ; Lambda(T) = Lambda(f ; T)", side="is_det(f)", anchor=A)
law("transpose-has", "", "Lambda(ni[X]) = Id[P(X)]", anchor=A)
law("transpose-image", "R:rel(X,Y); S:rel(Y,Z)", "Lambda(R ; S) = Lambda(R) ; Pfun(S)", anchor=A)
law("transpose-det", "f:mrel(X,Y)", "Lambda(f) = f ; eta[P(Y)]", side="is_det(f)", anchor=A)
law("alpha-unit", "", "alpha(eta[X]) = Id[X]", anchor=A)


# -- tests and domain -----------------------------------------------------------------------------

section("tests")
A = "tests and power tests"
law("power-test-restrict", "R:mrel(X,Y); P:test(Y)", "R ; ptest(P) = R & U[X,P(Y)] ; ptest(P)", anchor=A)
law("power-test-remove", "R:mrel(X,Y); P:test(Y)", "R ; ~ptest(P) = minus(R, U[X,P(Y)] ; ptest(P))", anchor=A)
law("down-unit-lift", "P:test(Y)", "plift(down(one[Y])) ; ptest(P) = shrink_into(P)", anchor=A)
law("universal-down-closed", "P:test(Y)", "down(U[X,P(Y)] ; ptest(P)) = U[X,P(Y)] ; ptest(P)", anchor=A)
law("nu-power-test", "R:mrel(X,Y); P:test(Y)", "nu(R ; ptest(P)) = nu(R) ; ptest(P)", anchor=A)
law("alpha-unit-test", "R:mrel(X,Y); P:test(Y)",
    "alpha(R) ; mtest(P) = di(R) ; ptest(P) = di(down(R) ; ptest(P)) = di(nu(down(R)) ; ptest(P))", anchor=A)
law("power-test-expansion", "P:test(Y)", "ptest(P) = (in[Y] \\ (P ; in[Y])) & Id[P(Y)]", anchor=A)
law("power-test-expansion-U", "P:test(Y)", "ptest(P) = (in[Y] \\ (P ; U[Y,P(Y)])) & Id[P(Y)]", anchor=A)
law("power-test-below-id", "P:test(Y)", "ptest(P) <= ptest(full[Y]) = Id[P(Y)]", anchor=A)

A = "domain locality"
law("locality", "R:mrel(X,Y); S:mrel(Y,Z)", "dom(R ; plift(S)) = dom(R ; ptest(dom(S)))", anchor=A)
law("test-domain", "R:mrel(X,Y); P:test(X)", "dom(mtest(P) * R) = P & dom(R)", anchor=A)
law("power-test-domain", "R:mrel(X,Y); P:test(Y)", "dom(R ; ptest(P)) = dias(R, P)", anchor=A)
law("test-domains", "P:test(X)", "dom(P) = P = dom(mtest(P))", anchor=A)

A = "domain and determinisation"
law("domains-agree", "R:mrel(X,Y)",
    "dom(di(R)) = dom(alpha(R)) = dom(alpha(nu(R))) = dom(nu(R)) = dom(nu(do(R)))", anchor=A)
law("alpha-test-domain", "R:mrel(X,Y); P:test(Y)", "dom(alpha(R) ; P) = dom(nu(down(R)) ; ptest(P))", anchor=A)
law("alpha-neg-test-domain", "R:mrel(X,Y); P:test(Y)", "dom(alpha(R) ; ~P) = dom(R ; ~ptest(P))", anchor=A)
law("neg-power-test", "P:test(Y)", "~dom(ni[Y] ; ~P) = ptest(P)", anchor=A)


# -- modal operators -------------------------------------------------------------------------------

section("modal")
A = "relational modalities"
law("diar-def", "R:rel(X,Y); Q:test(Y)", "diar(R, Q) = dom(R ; Q)", anchor=A)
law("boxr-def", "R:rel(X,Y); Q:test(Y)", "boxr(R, Q) = ~dom(R ; ~Q)", anchor=A)
law("boxr-dual", "R:rel(X,Y); Q:test(Y)", "boxr(R, Q) = ~diar(R, ~Q)", anchor=A)
law("backward-diamond", "R:rel(X,Y); P:test(X)", "diar(R^, P) = cod(P ; R)", anchor=A)

A = "peleg modalities"
law("dias-def", "R:mrel(X,Y); P:test(Y)", "dias(R, P) = dom(R * mtest(P))", anchor=A)
law("boxs-def", "R:mrel(X,Y); P:test(Y)", "boxs(R, P) = ~dom(R * mtest(~P))", anchor=A)
law("dias-relational", "R:mrel(X,Y); P:test(Y)", "dias(R, P) = diar(R, ptest(P))", anchor=A)
law("boxs-relational", "R:mrel(X,Y); P:test(Y)", "boxs(R, P) = boxr(R, ~ptest(~P))", anchor=A)
law("dias-dual", "R:mrel(X,Y); P:test(Y)", "dias(R, P) = ~boxs(R, ~P)", anchor=A)
law("boxs-dual", "R:mrel(X,Y); P:test(Y)", "boxs(R, P) = ~dias(R, ~P)", anchor=A)

A = "alpha modalities"
law("boxa-def", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxr(alpha(R), P)", anchor=A)
law("diaa-def", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = diar(alpha(R), P)", anchor=A)
law("diaa-dual", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = ~boxa(R, ~P)", anchor=A)
law("boxa-dual", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~diaa(R, ~P)", anchor=A)
law("boxa-power-test", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~diar(R, ~ptest(P)) = boxr(R, ptest(P))", anchor=A)
law("diaa-power-test", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = diar(R, ~ptest(~P))", anchor=A)

A = "box via complement of universal part"
law("box-universal", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~dom(minus(R, U[X,P(Y)] ; ptest(P)))", anchor=A)

A = "box via other modalities"
law("box-chain", "R:mrel(X,Y); P:test(Y)",
    "boxa(R, P) = boxs(nu(down(R)), P) = boxs(di(R), P) = boxa(do(R), P) = boxa(di(R), P) = dias(do(R), P)",
    anchor=A, note="last link uses the Peleg diamond; outer deterministic arguments swap the two families")
law("dia-chain", "R:mrel(X,Y); P:test(Y)",
    "diaa(R, P) = dias(nu(down(R)), P) = dias(di(R), P) = diaa(do(R), P) = diaa(di(R), P) = boxs(do(R), P)",
    anchor=A, note="last link uses the Peleg box")

A = "domain and inner determinisation via constants"
law("domain-inner-union", "R:mrel(X,Y)", "mtest(dom(R)) = iu(R * one_iu[Y,X], one[X])", anchor=A)
law("di-inner-inter", "R:mrel(X,Y)", "di(R) = ii(R, U[X,P(Y)]) & A_iu[X,Y]", anchor=A)

A = "modal inclusions for nu"
law("dias-nu", "R:mrel(X,Y); P:test(Y)", "dias(nu(R), P) <= diaa(R, P)", anchor=A)
law("boxa-nu", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) <= boxs(nu(R), P)", anchor=A,
    note="De Morgan dual of the diamond inclusion")

A = "modal coincidences"
law("inner-det-box", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxs(R, P)", side="is_inner_det(R)", anchor=A)
law("inner-det-dia", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = dias(R, P)", side="is_inner_det(R)", anchor=A)
law("outer-det-box", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = dias(R, P)", side="is_det(R)", anchor=A)
law("outer-det-dia", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = boxs(R, P)", side="is_det(R)", anchor=A)
law("det-box-dia", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = diaa(R, P)", side=("is_det(R)", "is_inner_det(R)"),
    anchor=A, note="both determinisms together: a total function into singletons")

A = "modalities specialise to relations"
law("boxa-unit", "R:rel(X,Y); P:test(Y)", "boxa(eta(R), P) = boxr(alpha(eta(R)), P) = boxr(R, P)", anchor=A)
law("diaa-unit", "R:rel(X,Y); P:test(Y)", "diaa(eta(R), P) = diar(R, P)", anchor=A)
law("dias-unit", "R:rel(X,Y); P:test(Y)", "dias(eta(R), P) = dom(R ; one[Y] ; ptest(P)) = diar(R, P)", anchor=A)
law("boxs-unit", "R:rel(X,Y); P:test(Y)", "boxs(eta(R), P) = boxr(R, P)", anchor=A)

A = "box via outer determinisation"
law("box-fusion", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~dom(do(R) ; ~ptest(P))", anchor=A)

A = "box and residual auxiliary"
law("box-galois", "R:mrel(X,Y); P:test(X); Q:test(Y)", "P <= boxa(R, Q) <=> P ; R <= R ; ptest(Q)", anchor=A)

A = "box via left residual"
law("box-residual-universal", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ((U[X,P(Y)] ; ptest(P)) / R) & Id[X]",
    anchor=A, note="the intersection is with the identity on the source")
law("box-residual-self", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ((R ; ptest(P)) / R) & Id[X]", anchor=A,
    note="the intersection is with the identity on the source")


# -- box equality patterns ---------------------------------------------------------------------

section("box-equalities")
A = "box equality patterns"
law("alpha-down", "R:mrel(X,Y)", "alpha(down(R)) = alpha(R)", anchor=A)
law("alpha-nu", "R:mrel(X,Y)", "alpha(nu(R)) = alpha(R)", anchor=A)
law("box-down", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxa(down(R), P)", anchor=A)
law("box-nu", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxa(nu(R), P)", anchor=A)
law("nu-down-idempotent", "R:mrel(X,Y)", "nu(down(nu(down(R)))) = nu(down(R))", anchor=A)
law("di-idempotent", "R:mrel(X,Y)", "di(di(R)) = di(R)", anchor=A)
law("do-idempotent", "R:mrel(X,Y)", "do(do(R)) = do(R)", anchor=A)
law("down-idempotent", "R:mrel(X,Y)", "down(down(R)) = down(R)", anchor=A)
law("boxs-nu-down", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxs(nu(down(nu(down(R)))), P)", anchor=A)
law("boxs-nu-of-down", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = boxs(nu(down(down(R))), P)", anchor=A)
law("box-fusion-idempotent", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~dom(do(do(R)) ; ~ptest(P))", anchor=A)
law("di-nu", "R:mrel(X,Y)", "di(nu(R)) = di(R)", anchor=A)
law("di-do", "R:mrel(X,Y)", "di(do(R)) = di(R)", anchor=A)
law("alpha-di", "R:mrel(X,Y)", "alpha(di(R)) = alpha(R)", anchor=A)
law("alpha-do", "R:mrel(X,Y)", "alpha(do(R)) = alpha(R)", anchor=A)
law("boxr-transpose", "S:rel(X,Y); P:test(Y)", "boxr(S, P) = boxa(Lambda(S), P)", anchor=A)

A = "box equality remark"
law("box-all-arguments", "R:mrel(X,Y); P:test(Y)",
    "boxa(R, P) = boxa(do(R), P) = boxa(di(R), P) = boxa(down(R), P) = boxa(nu(R), P)", anchor=A)
law("down-do-extensive", "R:mrel(X,Y)", "R <= down(do(R))", anchor=A)
law("down-do-idempotent", "R:mrel(X,Y)", "down(do(down(do(R)))) = down(do(R))", anchor=A)
law("down-do-monotone", "R:mrel(X,Y); S:mrel(X,Y)", "R <= S => down(do(R)) <= down(do(S))", anchor=A)
law("down-extensive", "R:mrel(X,Y)", "R <= down(R)", anchor=A)
law("down-monotone", "R:mrel(X,Y); S:mrel(X,Y)", "R <= S => down(R) <= down(S)", anchor=A)
law("nu-interior", "R:mrel(X,Y)", "nu(R) <= R", anchor=A)
law("nu-idempotent", "R:mrel(X,Y)", "nu(nu(R)) = nu(R)", anchor=A)
law("nu-monotone", "R:mrel(X,Y); S:mrel(X,Y)", "R <= S => nu(R) <= nu(S)", anchor=A)
law("do-closure-down-order", "R:mrel(X,Y)", "le_down(R, do(R))", anchor=A)
law("do-monotone-down-order", "R:mrel(X,Y); S:mrel(X,Y)", "le_down(R, S) => le_down(do(R), do(S))", anchor=A)
law("di-interior-down-order", "R:mrel(X,Y)", "le_down(di(R), R)", anchor=A)
law("di-monotone-down-order", "R:mrel(X,Y); S:mrel(X,Y)", "le_down(R, S) => le_down(di(R), di(S))", anchor=A)


# -- graphs of modal operators -------------------------------------------------------------------

section("graph")
A = "graph operators tabulate"
law("gdiar", "R:rel(X,Y)", "gdiar(R) = tgdiar(R)", anchor=A)
law("gboxr", "R:rel(X,Y)", "gboxr(R) = tgboxr(R)", anchor=A)
law("gdias", "R:mrel(X,Y)", "gdias(R) = tgdias(R)", anchor=A)
law("gboxs", "R:mrel(X,Y)", "gboxs(R) = tgboxs(R)", anchor=A)
law("gdiaa", "R:mrel(X,Y)", "gdiaa(R) = tgdiaa(R)", anchor=A)
law("gboxa", "R:mrel(X,Y)", "gboxa(R) = tgboxa(R)", anchor=A)
law("gdiar-image", "R:rel(X,Y)", "gdiar(R) = Pfun(R^)", anchor=A)
law("gboxr-residual", "R:rel(X,Y)", "gboxr(R) = Lambda(ni[Y] / R)", anchor=A)
law("backward-diamond-graph", "R:rel(X,Y)", "Pfun(R) = tgdiar(R^)", anchor=A)
law("backward-box-graph", "R:rel(X,Y)", "Lambda(ni[X] / R^) = tgboxr(R^)", anchor=A)

A = "complementation and subset relations"
law("omega-residual", "", "Omega[Y] = in[Y] \\ in[Y] = ~(ni[Y] ; ~in[Y])", anchor=A)
law("superset-complement", "", "Omega[Y]^ = ~(~ni[Y] ; in[Y])", anchor=A,
    note="the complemented form with the negation on the has-relation yields the superset relation")
law("C-syq", "", "C[Y] = syq(in[Y], ~in[Y]) = Lambda(~ni[Y])", anchor=A)
law("C-involution", "", "C[Y] ; C[Y] = Id[P(Y)]", anchor=A)
law("C-symmetric", "", "C[Y] = C[Y]^", anchor=A)
law("C-nonmember", "", "~in[Y] ; C[Y] = in[Y]", anchor=A)
law("C-member", "", "in[Y] ; C[Y] = ~in[Y]", anchor=A)
law("in-omega", "", "in[Y] ; Omega[Y] = in[Y]", anchor=A)
law("omega-has", "", "Omega[Y]^ ; ni[Y] = ni[Y]", anchor=A)

A = "outer determinism and complement"
law("det-preserves-complement", "T:rel(X,Y); S:rel(Y,Z)", "T ; ~S = ~(T ; S)", side="is_det(T)", anchor=A)
law("complement-forces-det", "T:rel(X,Y)",
    "is_det(T) <=> and(eq(T ; ~empty[Y,Y], ~(T ; empty[Y,Y])), eq(T ; ~Id[Y], ~T))", anchor=A,
    note="the two instances S = empty and S = Id already force determinism")

A = "transpose with complement and subset"
law("transpose-C", "R:rel(X,Y)", "Lambda(R) ; C[Y] = Lambda(~R)", anchor=A)
law("transpose-omega", "R:rel(X,Y)", "Lambda(R) ; Omega[Y] = R^ \\ in[Y] = (ni[Y] / R)^", anchor=A)
law("residual-dual", "R:rel(X,Y)", "ni[Y] / R = ((R ; in[Y])^d)^", anchor=A)

A = "relational box graph without residual"
law("gboxr-dual", "R:rel(X,Y)", "gboxr(R) = Lambda(((R ; in[Y])^d)^)", anchor=A)
law("gdiar-transpose", "R:rel(X,Y)", "gdiar(R) = Lambda((R ; in[Y])^)", anchor=A)

A = "graph duality and conjugation"
law("de-morgan", "R:rel(X,Y)", "C[Y] ; gdiar(R) ; C[X] = gboxr(R)", anchor=A)
law("de-morgan-inverse", "R:rel(X,Y)", "gdiar(R) = C[Y] ; gboxr(R) ; C[X]", anchor=A)
law("conjugation-graph", "R:rel(X,Y)", "C[X] ; (gdiar(R) ; Omega[X])^ = gdiar(R^) ; C[Y] ; Omega[Y]^", anchor=A)
law("galois-graph", "R:rel(X,Y)", "gboxr(R) ; Omega[X]^ = (gdiar(R^) ; Omega[Y])^", anchor=A)
law("conjugation", "R:rel(X,Y); P:test(Y); Q:test(X)", "diar(R, P) <= ~Q <=> diar(R^, Q) <= ~P", anchor=A)
law("galois", "R:rel(X,Y); P:test(X); Q:test(Y)", "diar(R^, P) <= Q <=> P <= boxr(R, Q)", anchor=A)
law("de-morgan-alpha", "R:mrel(X,Y)", "C[Y] ; gdiaa(R) ; C[X] = gboxa(R)", anchor=A)
law("galois-graph-alpha", "R:mrel(X,Y)", "gboxa(R) ; Omega[X]^ = (gdiar(alpha(R)^) ; Omega[Y])^", anchor=A)

A = "alpha box graph without residual"
law("gboxa-residual", "R:mrel(X,Y)", "gboxa(R) = Lambda(Omega[Y]^ / R) = Lambda(((R ; ni[Y] ; in[Y])^d)^)", anchor=A)
law("gdiaa-transpose", "R:mrel(X,Y)", "gdiaa(R) = Lambda((R ; ni[Y] ; in[Y])^)", anchor=A)
law("residual-currying", "R:mrel(X,Y)", "Omega[Y]^ / R = ni[Y] / alpha(R)", anchor=A)

A = "peleg graph duality"
law("de-morgan-peleg", "R:mrel(X,Y)", "gdias(R) = C[Y] ; gboxs(R) ; C[X]", anchor=A)
law("de-morgan-peleg-inverse", "R:mrel(X,Y)", "gboxs(R) = C[Y] ; gdias(R) ; C[X]", anchor=A)

A = "graph operators specialise"
law("dia-transpose-unit", "S:rel(X,Y)", "gdiar(S) = gdiaa(Lambda(S)) = gdiaa(eta(S))", anchor=A)
law("box-transpose-unit", "S:rel(X,Y)", "gboxr(S) = gboxa(Lambda(S)) = gboxa(eta(S))", anchor=A)
law("dia-determinisations", "R:mrel(X,Y)", "gdiaa(R) = gdiaa(do(R)) = gdiaa(di(R))", anchor=A)
law("box-determinisations", "R:mrel(X,Y)", "gboxa(R) = gboxa(do(R)) = gboxa(di(R))", anchor=A)
law("dia-peleg-relational", "S:rel(X,Y)", "gdiar(S) = gdias(S ; in[Y]) = gdias(eta(S))", anchor=A)
law("box-peleg-relational", "S:rel(X,Y)", "gboxr(S) = gboxs(S ; in[Y]) = gboxs(eta(S))", anchor=A)
law("dia-alpha-peleg", "R:mrel(X,Y)", "gdiaa(R) = gdias(R ; ni[Y] ; in[Y]) = gdias(di(R))", anchor=A)
law("box-alpha-peleg", "R:mrel(X,Y)", "gboxa(R) = gboxs(R ; ni[Y] ; in[Y]) = gboxs(di(R))", anchor=A)
law("dia-box-transpose", "S:rel(X,Y)", "gdiar(S) = gboxs(Lambda(S))", anchor=A)
law("box-dia-transpose", "S:rel(X,Y)", "gboxr(S) = gdias(Lambda(S))", anchor=A)
law("dia-box-outer", "R:mrel(X,Y)", "gdiaa(R) = gboxs(do(R))", anchor=A)
law("box-dia-outer", "R:mrel(X,Y)", "gboxa(R) = gdias(do(R))", anchor=A)
law("up-unit", "S:rel(X,Y)", "up(eta(S)) = S ; in[Y]", anchor=A)


# -- concurrent dynamic logic ------------------------------------------------------------------------

section("goldblatt")
A = "concurrent dynamic logic axioms"
for ax in cdl.AXIOMS:
    LAWS.append(Law(ax.name, ax.variables, ax.claim, (), ax.expected, A, "goldblatt", (("X", 2), ("Y", 2)),
                    "auto", ax.id))
A = "repaired box composition"
for ax in cdl.EXTRA:
    LAWS.append(Law(ax.name, ax.variables, ax.claim, (), ax.expected, A, "goldblatt", S2, "auto", ax.id))

A = "modal actions"
law("transpose-box-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)",
    "boxa(Lambda(R) * Lambda(S), P) = boxa(Lambda(R), boxa(Lambda(S), P))", anchor=A)
law("transpose-dia-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)",
    "diaa(Lambda(R) * Lambda(S), P) = diaa(Lambda(R), diaa(Lambda(S), P))", anchor=A)
law("transpose-id-action", "P:test(X)", "boxa(Lambda(Id[X]), P) = P = diaa(Lambda(Id[X]), P)", anchor=A)
law("unit-box-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)",
    "boxa(eta(R) * eta(S), P) = boxa(eta(R), boxa(eta(S), P))", anchor=A)
law("unit-dia-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)",
    "diaa(eta(R) * eta(S), P) = diaa(eta(R), diaa(eta(S), P))", anchor=A)
law("unit-id-action", "P:test(X)", "boxa(eta(Id[X]), P) = P = diaa(eta(Id[X]), P)", anchor=A)
law("relational-box-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)", "boxr(R ; S, P) = boxr(R, boxr(S, P))", anchor=A)
law("relational-dia-action", "R:rel(X,Y); S:rel(Y,Z); P:test(Z)", "diar(R ; S, P) = diar(R, diar(S, P))", anchor=A)
law("peleg-dia-action", "R:mrel(X,Y); S:mrel(Y,Z); P:test(Z)", "dias(R * S, P) = dias(R, dias(S, P))", anchor=A)
law("peleg-box-action", "R:mrel(X,Y); S:mrel(Y,Z); P:test(Z)", "boxs(R * S, P) = boxs(R, boxs(S, P))", anchor=A)
law("peleg-test-assoc", "R:mrel(X,Y); S:mrel(Y,Z); P:test(Z)", "(R * S) * mtest(P) = R * (S * mtest(P))",
    anchor=A)

section("star")
A = "kleene star"
law("fixpoint", "R:mrel(X,X)", "star(R) = one[X] | R * star(R)", anchor=A)
law("least", "R:mrel(X,X); T:mrel(X,X)", "one[X] | R * T <= T => star(R) <= T", anchor=A)
law("contains-unit", "R:mrel(X,X)", "one[X] <= star(R)", anchor=A)
law("contains-base", "R:mrel(X,X)", "R <= star(R)", anchor=A)


# -- basis derivations ----------------------------------------------------------------------------

section("basis")
A = "basis definitions"
_B = [
    ("union", "R:rel(X,Y); S:rel(X,Y)", "R | S = ~(~R & ~S)"),
    ("minus", "R:rel(X,Y); S:rel(X,Y)", "minus(R, S) = R & ~S"),
    ("empty", "R:rel(X,Y)", "empty[X,Y] = R & ~R"),
    ("top", "R:rel(X,Y)", "U[X,Y] = ~(R & ~R)"),
    ("up", "R:mrel(X,Y)", "up(R) = iu(R, U[X,P(Y)])"),
    ("membership", "", "in[X] = up(one[X])"),
    ("identity", "", "Id[X] = one[X] / one[X]"),
    ("converse", "R:rel(X,Y)", "R^ = ~(~Id[Y] / R)"),
    ("composition", "S:rel(X,Y); R:rel(Y,Z)", "S ; R = ~(~S / R^)"),
    ("has-element", "", "ni[X] = in[X]^"),
    ("right-residual", "R:rel(X,Y); S:rel(X,Z)", "R \\ S = (S^ / R^)^"),
    ("syq", "R:rel(X,Y); S:rel(X,Z)", "syq(R, S) = (R \\ S) & (R^ / S^)"),
    ("transpose", "R:rel(X,Y)", "Lambda(R) = syq(R^, in[Y])"),
    ("image", "R:rel(X,Y)", "Pfun(R) = Lambda(ni[X] ; R)"),
    ("kleisli-lift", "R:mrel(X,Y)", "klift(R) = Pfun(R ; ni[Y])"),
    ("mu", "", "mu[X] = klift(Id[P(X)])"),
    ("omega", "", "Omega[X] = in[X] \\ in[X]"),
    ("complementation", "", "C[X] = syq(in[X], ~in[X])"),
    ("inner-complement", "R:mrel(X,Y)", "icpl(R) = R ; C[Y]"),
    ("inner-intersection", "R:mrel(X,Y); S:mrel(X,Y)", "ii(R, S) = icpl(iu(icpl(R), icpl(S)))"),
    ("down", "R:mrel(X,Y)", "down(R) = ii(R, U[X,P(Y)])"),
    ("convex", "R:mrel(X,Y)", "convex(R) = up(R) & down(R)"),
    ("inner-union-unit", "", "one_iu[X,X] = ii(one[X], icpl(one[X]))"),
    ("inner-intersection-unit", "", "one_ii[X,X] = icpl(one_iu[X,X])"),
    ("dual", "R:mrel(X,Y)", "R^d = ~icpl(R)"),
    ("co-composition", "R:mrel(X,Y); S:mrel(Y,Z)", "cocomp(R, S) = icpl(R * icpl(S))"),
    ("peleg-lift", "R:mrel(X,Y)", "plift(R) = (Lambda(ni[X] ; one[X]) * (one[X]^ ; R ; one[P(Y)])) ; mu[Y]"),
    ("multirelational-residual", "T:mrel(X,Z); S:mrel(Y,Z)", "mres(T, S) = T / plift(S)"),
    ("atoms", "", "A_iu[X,Y] = U[X,Y] ; one[Y]"),
    ("co-atoms", "", "A_ii[X,Y] = icpl(A_iu[X,Y])"),
    ("nu", "R:mrel(X,Y)", "nu(R) = minus(R, one_iu[X,Y])"),
    ("tau", "R:mrel(X,Y)", "tau(R) = R & one_iu[X,Y]"),
    ("alpha", "R:mrel(X,Y)", "alpha(R) = R ; ni[Y]"),
    ("inner-determinisation", "R:mrel(X,Y)", "di(R) = down(R) & A_iu[X,Y]"),
    ("outer-determinisation", "R:mrel(X,Y)", "do(R) = one[X] ; klift(R)"),
    ("cofission", "R:mrel(X,Y)", "cofission(R) = up(R) & A_ii[X,Y]"),
    ("cofusion", "R:mrel(X,Y)", "cofusion(R) = icpl(do(icpl(R)))"),
    ("domain", "R:mrel(X,Y)", "dom(R) = Id[X] & R ; R^"),
    ("test-complement", "P:test(X)", "~P = minus(Id[X], P)"),
    ("relational-intersection", "R:rel(X,Y); S:rel(X,Y)", "R & S = alpha(eta(R) & eta(S))"),
    ("diar", "R:rel(X,Y); Q:test(Y)", "diar(R, Q) = dom(R ; Q)"),
    ("boxr", "R:rel(X,Y); Q:test(Y)", "boxr(R, Q) = ~diar(R, ~Q)"),
    ("dias", "R:mrel(X,Y); P:test(Y)", "dias(R, P) = dom(R * mtest(P))"),
    ("boxs", "R:mrel(X,Y); P:test(Y)", "boxs(R, P) = ~dias(R, ~P)"),
    ("diaa", "R:mrel(X,Y); P:test(Y)", "diaa(R, P) = diar(alpha(R), P)"),
    ("boxa", "R:mrel(X,Y); P:test(Y)", "boxa(R, P) = ~diaa(R, ~P)"),
    ("gdiar", "R:rel(X,Y)", "tgdiar(R) = Pfun(R^)"),
    ("gboxr", "R:rel(X,Y)", "tgboxr(R) = Lambda(ni[Y] / R)"),
    ("gdias", "R:mrel(X,Y)", "tgdias(R) = Lambda(up(R)^)"),
    ("gboxs", "R:mrel(X,Y)", "tgboxs(R) = Lambda((up(R)^d)^)"),
    ("gdiaa", "R:mrel(X,Y)", "tgdiaa(R) = Pfun(alpha(R)^)"),
    ("gboxa", "R:mrel(X,Y)", "tgboxa(R) = Lambda(ni[Y] / alpha(R))"),
    ("le-up", "R:mrel(X,Y); S:mrel(X,Y)", "le_up(R, S) <=> S <= iu(R, U[X,P(Y)])"),
    ("le-down", "R:mrel(X,Y); S:mrel(X,Y)", "le_down(R, S) <=> R <= ii(S, U[X,P(Y)])"),
    ("le-convex", "R:mrel(X,Y); S:mrel(X,Y)", "le_convex(R, S) <=> and(le_down(R, S), le_up(R, S))"),
]
for _id, _v, _c in _B:
    law(_id, _v, _c, anchor=A)


# -- lookup ---------------------------------------------------------------------------------------

BY_ID: Dict[str, Law] = {}
for _l in LAWS:
    if _l.id in BY_ID:
        raise RuntimeError(f"duplicate law id {_l.id}")
    BY_ID[_l.id] = _l
for _ax in cdl.AXIOMS + cdl.EXTRA:
    BY_ID.setdefault(_ax.id, BY_ID[_ax.name])

SECTIONS = sorted({l.section for l in LAWS})


def get(law_id: str) -> Law:
    try:
        return BY_ID[law_id]
    except KeyError:
        raise KeyError(f"unknown law {law_id!r}") from None


def section_laws(name: str) -> List[Law]:
    out = [l for l in LAWS if l.section == name]
    if not out:
        raise KeyError(f"unknown section {name!r}; known: {', '.join(SECTIONS)}")
    return out


# alias used by cdl.goldblatt_suite
section = section_laws  # noqa: F811


def select(spec: str) -> List[Law]:
    """``all``, ``section:<name>`` or a single law id."""
    if spec == "all":
        return list(LAWS)
    if spec.startswith("section:"):
        return section_laws(spec.split(":", 1)[1])
    return [get(spec)]


def audit() -> List[str]:
    """Anchors without any registered law (should be empty)."""
    covered = {l.anchor for l in LAWS}
    return [a for a in ANCHORS if a not in covered]
