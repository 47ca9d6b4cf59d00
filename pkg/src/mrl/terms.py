"""Expression language over relations, multirelations and tests.

Grammar, loosest binding first::

    claim    := bexpr (('<=>' | '=>') bexpr)?
    bexpr    := expr (('=' | '<=' | '>=' | '<' | '!=') expr)*
    expr     := meet (('/' | '\\') meet)*        residuals
    meet     := conj ('|' conj)*                 join
    conj     := seq ('&' seq)*                   meet
    seq      := unary ((';' | '*') unary)*       composition / Peleg
    unary    := '~' unary | postfix
    postfix  := primary ('^' | '^d' | '~')*
    primary  := NAME | NAME '[' univs ']' | NAME '(' args ')'
              | literal ':' sort | '(' expr ')'

Constants written without a universe annotation (``empty``, ``Id``, ``full``,
``in`` ...) are resolved from the sort of the neighbouring operand; when that
is impossible the evaluator asks for an annotation.  Resolution happens once
per term (:func:`resolve`), after which the term only names concrete kernel
functions and can be compiled into a flat program.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from . import cdl
from . import modal as md
from . import multirel as mr
from . import powerops as po
from . import relcore as rc
from .relcore import Relation, SortError, Test, Universe


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class EvalError(ValueError):
    """Unbound variables, unknown names, unresolvable constants."""


# -- terms ---------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    kind: str  # var | const | app | lit | cmp | iff | implies
    name: str
    args: Tuple["Term", ...] = ()
    index: Tuple[str, ...] = ()  # universe expressions for const / lit
    payload: Any = None  # literal elements; comparator list for cmp

    def __str__(self) -> str:
        return show(self)


INFIX = {"lres": "/", "rres": "\\", "or": "|", "and": "&", "seq": ";", "peleg": "*"}
POSTFIX = {"conv": "^", "dual": "^d", "neg": "~"}


def show(t: Term) -> str:
    if t.kind == "var":
        return t.name
    if t.kind == "const":
        return f"{t.name}[{','.join(t.index)}]" if t.index else t.name
    if t.kind == "lit":
        return t.payload[0]
    if t.kind == "cmp":
        parts = [show(t.args[0])]
        for op, a in zip(t.payload, t.args[1:]):
            parts += [op, show(a)]
        return " ".join(parts)
    if t.kind in ("iff", "implies"):
        op = "<=>" if t.kind == "iff" else "=>"
        return f"{show(t.args[0])} {op} {show(t.args[1])}"
    if t.name in INFIX:
        return f"({show(t.args[0])} {INFIX[t.name]} {show(t.args[1])})"
    if t.name in POSTFIX:
        return f"({show(t.args[0])}){POSTFIX[t.name]}"
    return f"{t.name}({', '.join(show(a) for a in t.args)})"


# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|"
    r"(?P<op><=>|<->|=>|<=|>=|!=|\^d(?![A-Za-z0-9_])|[=<>;*&|\\/^~()\[\]{},:]))"
)


def _lex(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("eof", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self, off: int = 0):
        return self.toks[min(self.i + off, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str):
        kind, val, pos = self.peek()
        where = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"{msg}, found {where}", self.text, pos)

    def accept(self, val: str) -> bool:
        kind, v, _ = self.peek()
        if kind == "op" and v == val:
            self.i += 1
            return True
        return False

    def expect(self, val: str):
        if not self.accept(val):
            self.error(f"expected {val!r}")

    def at_op(self, *vals) -> Optional[str]:
        kind, v, _ = self.peek()
        if kind == "op" and v in vals:
            return v
        return None

    # claims
    def claim(self) -> Term:
        left = self.bexpr()
        op = self.at_op("<=>", "=>")
        if op:
            self.next()
            right = self.bexpr()
            left = Term("iff" if op == "<=>" else "implies", op, (left, right))
        return left

    def bexpr(self) -> Term:
        first = self.expr()
        ops = []
        args = [first]
        while True:
            op = self.at_op("=", "<=", ">=", "<", "!=")
            if not op:
                break
            self.next()
            ops.append(op)
            args.append(self.expr())
        if not ops:
            return first
        return Term("cmp", "cmp", tuple(args), payload=tuple(ops))

    def _binary(self, sub, table) -> Term:
        left = sub()
        while True:
            op = self.at_op(*table)
            if not op:
                return left
            self.next()
            left = Term("app", table[op], (left, sub()))

    def expr(self) -> Term:
        return self._binary(self.meet, {"/": "lres", "\\": "rres"})

    def meet(self) -> Term:
        return self._binary(self.conj, {"|": "or"})

    def conj(self) -> Term:
        return self._binary(self.seq, {"&": "and"})

    def seq(self) -> Term:
        return self._binary(self.unary, {";": "seq", "*": "peleg"})

    def unary(self) -> Term:
        if self.accept("~"):
            return Term("app", "neg", (self.unary(),))
        return self.postfix()

    def postfix(self) -> Term:
        t = self.primary()
        while True:
            op = self.at_op("^", "^d", "~")
            if not op:
                return t
            # a '~' followed by an operand is a prefix of the next factor, not a postfix here
            if op == "~" and self._starts_operand(1):
                return t
            self.next()
            t = Term("app", {"^": "conv", "^d": "dual", "~": "neg"}[op], (t,))

    def _starts_operand(self, off: int) -> bool:
        kind, v, _ = self.peek(off)
        return kind in ("name", "num") or (kind == "op" and v in ("(", "{", "~"))

    def primary(self) -> Term:
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.next()
            t = self.expr()
            self.expect(")")
            return t
        if kind == "op" and val == "{":
            return self.literal()
        if kind != "name":
            self.error("expected an operand")
        self.next()
        if self.accept("["):
            idx = [self.universe_expr()]
            while self.accept(","):
                idx.append(self.universe_expr())
            self.expect("]")
            return Term("const", val, index=tuple(idx))
        if self.accept("("):
            args = []
            if not self.accept(")"):
                args.append(self.expr())
                while self.accept(","):
                    args.append(self.expr())
                self.expect(")")
            return Term("app", val, tuple(args))
        if val in CONSTANTS:
            return Term("const", val)
        return Term("var", val)

    def universe_expr(self) -> str:
        kind, val, _ = self.peek()
        if kind != "name":
            self.error("expected a universe name")
        self.next()
        if val == "P" and self.accept("("):
            inner = self.universe_expr()
            self.expect(")")
            return f"P({inner})"
        return val

    def literal(self) -> Term:
        start = self.peek()[2]
        self.expect("{")
        items = []
        if not self.accept("}"):
            items.append(self.lit_item())
            while self.accept(","):
                items.append(self.lit_item())
            self.expect("}")
        self.expect(":")
        sort = [self.universe_expr()]
        if self.accept("<->"):
            sort.append(self.universe_expr())
        end = self.toks[self.i - 1]
        src_text = self.text[start : end[2] + len(end[1])]
        return Term("lit", "lit", index=tuple(sort), payload=(src_text, tuple(items)))

    def lit_item(self):
        if self.at_op("("):
            self.next()
            a = self.element()
            self.expect(",")
            b = self.element()
            self.expect(")")
            return ("pair", a, b)
        return self.element()

    def element(self):
        kind, val, _ = self.peek()
        if kind == "name":
            self.next()
            return ("atom", val)
        if kind == "num":
            self.next()
            return ("int", int(val))
        if self.accept("{"):
            members = []
            if not self.accept("}"):
                members.append(self.element())
                while self.accept(","):
                    members.append(self.element())
                self.expect("}")
            return ("set", tuple(members))
        self.error("expected an element")


def parse(text: str) -> Term:
    p = _Parser(text)
    t = p.expr()
    if p.peek()[0] != "eof":
        p.error("unexpected trailing input")
    return t


def parse_claim(text: str) -> Term:
    p = _Parser(text)
    t = p.claim()
    if p.peek()[0] != "eof":
        p.error("unexpected trailing input")
    return t


# -- environments -----------------------------------------------------------------


class Env:
    """Declared universes plus named bindings."""

    def __init__(self, universes: Optional[Dict[str, Universe]] = None, bindings: Optional[dict] = None):
        self.universes = dict(universes or {})
        self.bindings = dict(bindings or {})

    @classmethod
    def from_sizes(cls, sizes: Dict[str, int], bindings: Optional[dict] = None) -> "Env":
        return cls({k: rc.universe(v, name=k) for k, v in sizes.items()}, bindings)

    def universe(self, expr: str) -> Universe:
        if expr.startswith("P(") and expr.endswith(")"):
            return rc.powerset(self.universe(expr[2:-1]))
        try:
            return self.universes[expr]
        except KeyError:
            raise EvalError(f"undeclared universe {expr!r}") from None

    def with_bindings(self, bindings: dict) -> "Env":
        return Env(self.universes, {**self.bindings, **bindings})


# -- constants ----------------------------------------------------------------------


def _src_base(u: Universe) -> Universe:
    if u.base is None:
        raise SortError(f"sort mismatch: {u} is not a powerset universe")
    return u.base


# name -> (arity, builder(universes), from_src, from_tgt); from_* give the index from one end
CONSTANTS: Dict[str, tuple] = {
    "Id": (1, lambda u: rc.identity(u), lambda s: (s,), lambda t: (t,)),
    "empty": (2, lambda x, y: rc.empty(x, y), None, None),
    "U": (2, lambda x, y: rc.top(x, y), None, None),
    "top": (2, lambda x, y: rc.top(x, y), None, None),
    "full": (1, lambda u: rc.full_test(u), None, None),
    "none": (1, lambda u: rc.empty_test(u), None, None),
    "in": (1, po.membership, lambda s: (s,), lambda t: (_src_base(t),)),
    "ni": (1, po.has_element, lambda s: (_src_base(s),), lambda t: (t,)),
    "Omega": (1, po.omega, lambda s: (_src_base(s),), lambda t: (_src_base(t),)),
    "C": (1, po.comp_rel, lambda s: (_src_base(s),), lambda t: (_src_base(t),)),
    "eta": (1, po.eta, lambda s: (s,), lambda t: (_src_base(t),)),
    "one": (1, po.eta, lambda s: (s,), lambda t: (_src_base(t),)),
    "mu": (1, po.mu, lambda s: (_src_base(_src_base(s)),), lambda t: (_src_base(t),)),
    "one_iu": (2, mr.one_iu, None, None),
    "one_ii": (2, mr.one_ii, None, None),
    "A_iu": (2, mr.atoms_iu, None, None),
    "A_ii": (2, mr.atoms_ii, None, None),
}


class Pending:
    """An unannotated constant awaiting its universes from context."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def fail(self):
        raise EvalError(f"cannot infer the universes of constant {self.name!r}; annotate it, e.g. {self.name}[X,...]")

    def like(self, v) -> Tuple[str, tuple]:
        """Resolve to the sort of value ``v``."""
        arity = CONSTANTS[self.name][0]
        if isinstance(v, Test):
            if self.name in ("empty", "none"):
                return "none", (v.universe,)
            if self.name in ("full", "Id"):
                return "full", (v.universe,)
            self.fail()
        if isinstance(v, Relation):
            if self.name in ("full", "none"):
                self.fail()
            if arity == 2:
                return self.name, (v.src, v.tgt)
            if v.src == v.tgt or self.name == "Id":
                if v.src != v.tgt:
                    self.fail()
                return self.name, (v.src,)
            return self.from_src(v.src)
        self.fail()

    def test_on(self, u: Universe) -> Tuple[str, tuple]:
        if self.name in ("empty", "none"):
            return "none", (u,)
        if self.name in ("full", "Id"):
            return "full", (u,)
        self.fail()

    def from_src(self, u: Universe):
        f = CONSTANTS[self.name][2]
        if f is None:
            self.fail()
        return self.name, f(u)

    def from_tgt(self, u: Universe):
        f = CONSTANTS[self.name][3]
        if f is None:
            self.fail()
        return self.name, f(u)


def _uname(u: Universe) -> str:
    return u.name


def build_constant(name: str, universes: tuple):
    arity, builder = CONSTANTS[name][:2]
    if len(universes) != arity:
        raise EvalError(f"constant {name!r} takes {arity} universe(s)")
    return builder(*universes)


# -- concrete kernel functions --------------------------------------------------------


def _eq(a, b) -> bool:
    if isinstance(a, Test):
        rc._same_universe(a, b)
        return a.members == b.members
    rc._same_sort(a, b)
    return a.rows == b.rows


def _le(a, b) -> bool:
    if isinstance(a, Test):
        return a <= b
    return rc.subseteq(a, b)


def _lt(a, b) -> bool:
    return _le(a, b) and not _eq(a, b)


def _eta_of(r: Relation) -> Relation:
    return rc.compose(r, po.eta(r.tgt))


def _shrink_into(p: Test) -> Relation:
    py = rc.powerset(p.universe)
    rows = []
    for a in range(py.size):
        m = a & p.members
        rows.append(po.subsets_mask(m, p.universe.size))
    return Relation._make(py, py, tuple(rows))


def _star(r: Relation) -> Relation:
    return cdl.kleene_star(r).star


# concrete name -> (function, arg kinds); kinds: r relation, t test, b bool, a any
CONCRETE: Dict[str, tuple] = {
    "union": (rc.union, "rr"),
    "inter": (rc.inter, "rr"),
    "minus": (rc.minus, "rr"),
    "compl": (rc.compl, "r"),
    "compose": (rc.compose, "rr"),
    "converse": (rc.converse, "r"),
    "lres": (rc.lres, "rr"),
    "rres": (rc.rres, "rr"),
    "syq": (rc.syq, "rr"),
    "dom": (rc.dom, "r"),
    "cod": (rc.cod, "r"),
    "is_total": (rc.is_total, "r"),
    "is_univalent": (rc.is_univalent, "r"),
    "is_det": (rc.is_deterministic, "r"),
    "is_test": (rc.is_test, "r"),
    "test_union": (rc.test_union, "tt"),
    "test_inter": (rc.test_inter, "tt"),
    "test_compl": (rc.test_compl, "t"),
    "test_minus": (lambda p, q: rc.test_inter(p, rc.test_compl(q)), "tt"),
    "imp": (rc.test_implies, "tt"),
    "as_rel": (rc.as_relation, "t"),
    "as_test": (rc.as_test, "r"),
    "Lambda": (po.power_transpose, "r"),
    "Pfun": (po.image_functor, "r"),
    "ptest": (po.power_test, "t"),
    "eta_of": (_eta_of, "r"),
    "peleg": (mr.peleg, "rr"),
    "peleg_via_lift": (mr.peleg_via_lift, "rr"),
    "iu": (mr.inner_union, "rr"),
    "ii": (mr.inner_inter, "rr"),
    "icpl": (mr.inner_compl, "r"),
    "dual": (mr.dual, "r"),
    "up": (mr.up, "r"),
    "down": (mr.down, "r"),
    "convex": (mr.convex, "r"),
    "nu": (mr.nu, "r"),
    "tau": (mr.tau, "r"),
    "alpha": (mr.alpha, "r"),
    "di": (mr.delta_i, "r"),
    "do": (mr.delta_o, "r"),
    "cofission": (mr.cofission, "r"),
    "cofusion": (mr.cofusion, "r"),
    "cocomp": (mr.co_compose, "rr"),
    "mres": (mr.mres, "rr"),
    "klift": (mr.kleisli_lift, "r"),
    "plift": (mr.peleg_lift, "r"),
    "plift_sub": (mr.peleg_lift_via_subrelations, "r"),
    "mtest": (mr.mtest, "t"),
    "mtest_inv": (mr.mtest_to_test, "r"),
    "is_inner_total": (mr.is_inner_total, "r"),
    "is_inner_univalent": (mr.is_inner_univalent, "r"),
    "is_inner_det": (mr.is_inner_deterministic, "r"),
    "le_up": (mr.le_up, "rr"),
    "le_down": (mr.le_down, "rr"),
    "le_convex": (mr.le_convex, "rr"),
    "diar": (md.dia_r, "rt"),
    "boxr": (md.box_r, "rt"),
    "dias": (md.dia_star, "rt"),
    "boxs": (md.box_star, "rt"),
    "diaa": (md.dia_alpha, "rt"),
    "boxa": (md.box_alpha, "rt"),
    "gdiar": (md.gdia_r, "r"),
    "gboxr": (md.gbox_r, "r"),
    "gdias": (md.gdia_star, "r"),
    "gboxs": (md.gbox_star, "r"),
    "gdiaa": (md.gdia_alpha, "r"),
    "gboxa": (md.gbox_alpha, "r"),
    "tgdiar": (md.tab_dia_r, "r"),
    "tgboxr": (md.tab_box_r, "r"),
    "tgdias": (md.tab_dia_star, "r"),
    "tgboxs": (md.tab_box_star, "r"),
    "tgdiaa": (md.tab_dia_alpha, "r"),
    "tgboxa": (md.tab_box_alpha, "r"),
    "shrink_into": (_shrink_into, "t"),
    "star": (_star, "r"),
    "eq": (_eq, "aa"),
    "sub": (_le, "aa"),
    "lt": (_lt, "aa"),
    "not": (lambda x: not x, "b"),
    "all": (lambda *xs: all(xs), "b*"),
    "any": (lambda *xs: any(xs), "b*"),
    "implies": (lambda x, y: (not x) or y, "bb"),
}

# surface function names users may write that differ from the concrete ones
ALIASES = {
    "and": None,  # overloaded, see _resolve_surface
    "or": None,
    "neg": None,
    "conv": None,
    "seq": None,
    "tcompl": "test_compl",
    "compose": "compose",
    "converse": "converse",
    "complement": None,
    "inter": None,
    "union": None,
    "det": "is_det",
    "is_deterministic": "is_det",
    "peleg_lift": "plift",
    "kleisli_lift": "klift",
    "power_test": "ptest",
    "power_transpose": "Lambda",
    "delta_i": "di",
    "delta_o": "do",
    "inner_compl": "icpl",
    "le": "sub",
    "iff": None,
}

# which argument's universe types a test argument of a modal operator
_TEST_FROM = {
    "diar": lambda r: r.tgt,
    "boxr": lambda r: r.tgt,
    "dias": lambda r: mr.base_of(r),
    "boxs": lambda r: mr.base_of(r),
    "diaa": lambda r: mr.base_of(r),
    "boxa": lambda r: mr.base_of(r),
}

SURFACE_NAMES = sorted(set(CONCRETE) | {k for k in ALIASES} | {"eta", "minus"})


# -- resolution --------------------------------------------------------------------


def _const_term(name: str, universes: tuple) -> Term:
    return Term("const", name, index=tuple(u.name for u in universes))


def _as_rel_term(t: Term) -> Term:
    return Term("app", "as_rel", (t,))


def _as_test_term(t: Term) -> Term:
    return Term("app", "as_test", (t,))


def _coerce(term: Term, val, kind: str):
    """Coerce one evaluated argument to the kind a concrete op expects."""
    if kind == "r":
        if isinstance(val, Test):
            return _as_rel_term(term), rc.as_relation(val)
        if isinstance(val, Relation):
            return term, val
        raise SortError(f"expected a relation, got {_describe(val)} in {show(term)}")
    if kind == "t":
        if isinstance(val, Test):
            return term, val
        if isinstance(val, Relation):
            return _as_test_term(term), rc.as_test(val)
        raise SortError(f"expected a test, got {_describe(val)} in {show(term)}")
    if kind == "b":
        if isinstance(val, bool):
            return term, val
        raise SortError(f"expected a truth value, got {_describe(val)} in {show(term)}")
    return term, val


def _describe(v) -> str:
    if isinstance(v, Relation):
        return f"a relation {v.src}<->{v.tgt}"
    if isinstance(v, Test):
        return f"a test on {v.universe}"
    if isinstance(v, bool):
        return "a truth value"
    return type(v).__name__


def _fill_pending(env: Env, name: str, terms: list, vals: list) -> None:
    """Resolve unannotated constants among the arguments of ``name`` in place."""
    idx = [i for i, v in enumerate(vals) if isinstance(v, Pending)]
    if not idx:
        return
    known = [v for v in vals if not isinstance(v, Pending)]
    for i in idx:
        p = vals[i]
        if name in _TEST_FROM and i == 1 and not isinstance(vals[0], Pending):
            cname, us = p.test_on(_TEST_FROM[name](rc.as_relation(vals[0]) if isinstance(vals[0], Test) else vals[0]))
        elif name in ("seq", "compose") and len(vals) == 2 and known:
            other = vals[1 - i]
            other = rc.as_relation(other) if isinstance(other, Test) else other
            if i == 0:
                cname, us = p.from_tgt(other.src)
            else:
                cname, us = p.from_src(other.tgt)
        elif name == "peleg" and len(vals) == 2 and known:
            other = vals[1 - i]
            if i == 0:
                cname, us = p.from_tgt(rc.powerset(other.src))
            else:
                cname, us = p.from_src(mr.base_of(other))
        elif known and name in _HOMOGENEOUS:
            cname, us = p.like(known[0])
        else:
            p.fail()
        vals[i] = build_constant(cname, us)
        terms[i] = _const_term(cname, us)


_HOMOGENEOUS = {
    "and", "or", "minus", "union", "inter", "iu", "ii", "eq", "sub", "lt", "le_up", "le_down",
    "le_convex", "imp", "cmp", "test_union", "test_inter",
}


def _surface(name: str, vals: list) -> str:
    """Pick the concrete op for an overloaded surface name given argument values."""
    tests = [isinstance(v, Test) for v in vals]
    if vals and all(isinstance(v, bool) for v in vals):
        if name in ("and", "inter"):
            return "all"
        if name in ("or", "union"):
            return "any"
        if name in ("neg", "complement"):
            return "not"
    if name in ("and", "inter"):
        return "test_inter" if all(tests) else "inter"
    if name in ("or", "union"):
        return "test_union" if all(tests) else "union"
    if name == "minus":
        return "test_minus" if all(tests) else "minus"
    if name in ("neg", "complement"):
        return "test_compl" if all(tests) else "compl"
    if name == "conv":
        return "converse"
    if name == "seq":
        return "compose"
    if name == "eta":
        return "eta_of"
    if name == "iff":
        return "eq"
    alias = ALIASES.get(name, name)
    if alias is None or alias not in CONCRETE:
        raise EvalError(f"unknown operation {name!r}")
    return alias


def resolve(term: Term, env: Env) -> Tuple[Term, Any]:
    """Evaluate ``term`` once, returning the value and a fully annotated, concrete term."""
    k = term.kind
    if k == "var":
        if term.name not in env.bindings:
            raise EvalError(f"unbound variable {term.name!r}")
        return term, env.bindings[term.name]
    if k == "const":
        if term.name not in CONSTANTS:
            raise EvalError(f"unknown constant {term.name!r}")
        if not term.index:
            return term, Pending(term.name)
        us = tuple(env.universe(e) for e in term.index)
        return term, build_constant(term.name, us)
    if k == "lit":
        return term, literal_value(term, env)
    if k == "cmp":
        terms = []
        vals = []
        for a in term.args:
            t2, v = resolve(a, env)
            terms.append(t2)
            vals.append(v)
        _fill_pending(env, "cmp", terms, vals)
        # a chain mixing tests and relations is compared as relations throughout
        if any(isinstance(v, Relation) for v in vals):
            for j, v in enumerate(vals):
                if isinstance(v, Test):
                    terms[j], vals[j] = _as_rel_term(terms[j]), rc.as_relation(v)
        ok = True
        for j, op in enumerate(term.payload):
            ok = ok and compare(op, vals[j], vals[j + 1])
        return Term("cmp", "cmp", tuple(terms), payload=term.payload), ok
    if k in ("iff", "implies"):
        (ta, a), (tb, b) = resolve(term.args[0], env), resolve(term.args[1], env)
        for v, t in ((a, ta), (b, tb)):
            if not isinstance(v, bool):
                raise SortError(f"expected a truth value on each side of {term.name}, got {_describe(v)} in {show(t)}")
        val = (a == b) if k == "iff" else ((not a) or b)
        return Term(k, term.name, (ta, tb)), val
    # application
    name = term.name
    if name not in CONCRETE and name not in ALIASES and name not in ("eta", "minus"):
        raise EvalError(f"unknown operation {name!r}")
    terms = []
    vals = []
    for a in term.args:
        t2, v = resolve(a, env)
        terms.append(t2)
        vals.append(v)
    _fill_pending(env, name, terms, vals)
    cname = _surface(name, vals)
    fn, kinds = CONCRETE[cname]
    if kinds.endswith("*"):
        kinds = kinds[0] * len(vals)
    if len(kinds) != len(vals):
        raise EvalError(f"{name} takes {len(kinds)} argument(s), got {len(vals)}")
    if cname in ("eq", "sub", "lt") and isinstance(vals[0], Test) != isinstance(vals[1], Test):
        kinds = "rr"
    for j, kd in enumerate(kinds):
        terms[j], vals[j] = _coerce(terms[j], vals[j], kd)
    try:
        value = fn(*vals)
    except SortError as e:
        raise SortError(f"{e} in {show(term)}") from None
    return Term("app", cname, tuple(terms)), value


def compare(op: str, a, b) -> bool:
    if op == "=":
        return _eq(a, b)
    if op == "!=":
        return not _eq(a, b)
    if op == "<=":
        return _le(a, b)
    if op == ">=":
        return _le(b, a)
    if op == "<":
        return _lt(a, b)
    raise EvalError(f"unknown comparator {op!r}")


def evaluate(text_or_term, env: Env):
    t = parse_claim(text_or_term) if isinstance(text_or_term, str) else text_or_term
    _, v = resolve(t, env)
    if isinstance(v, Pending):
        v.fail()
    return v


# -- compilation of resolved terms -------------------------------------------------------


def compile_term(term: Term, env: Env, var_slots: Dict[str, int]) -> Callable[[list], Any]:
    """Closure evaluating a *resolved* term against a list of variable values."""
    k = term.kind
    if k == "var":
        i = var_slots[term.name]
        return lambda vs: vs[i]
    if k in ("const", "lit"):
        _, v = resolve(term, env)
        return lambda vs: v
    if k == "cmp":
        subs = [compile_term(a, env, var_slots) for a in term.args]
        ops = term.payload

        def run_cmp(vs):
            vals = [f(vs) for f in subs]
            return all(compare(op, vals[j], vals[j + 1]) for j, op in enumerate(ops))

        return run_cmp
    if k in ("iff", "implies"):
        f, g = (compile_term(a, env, var_slots) for a in term.args)
        if k == "iff":
            return lambda vs: f(vs) == g(vs)
        return lambda vs: (not f(vs)) or g(vs)
    fn = CONCRETE[term.name][0]
    subs = [compile_term(a, env, var_slots) for a in term.args]
    if len(subs) == 1:
        (f,) = subs
        return lambda vs: fn(f(vs))
    if len(subs) == 2:
        f, g = subs
        return lambda vs: fn(f(vs), g(vs))
    return lambda vs: fn(*(s(vs) for s in subs))


# -- literals and rendering -----------------------------------------------------------------


def _elem_index(u: Universe, e) -> int:
    kind = e[0]
    if kind == "int":
        if not 0 <= e[1] < u.size:
            raise EvalError(f"element {e[1]} not in universe {u.name}")
        return e[1]
    if kind == "set":
        if u.base is None:
            raise EvalError(f"set literal used as an element of non-powerset universe {u.name}")
        m = 0
        for x in e[1]:
            m |= 1 << _elem_index(u.base, x)
        return m
    try:
        return u.index(e[1])
    except KeyError as exc:
        raise EvalError(str(exc.args[0])) from None


def literal_value(term: Term, env: Env):
    sort = [env.universe(s) for s in term.index]
    items = term.payload[1]
    if len(sort) == 1:
        u = sort[0]
        m = 0
        for it in items:
            if it[0] == "pair":
                raise EvalError("pair in a test literal")
            m |= 1 << _elem_index(u, it)
        return Test._make(u, m)
    src, tgt = sort
    pairs = []
    for it in items:
        if it[0] != "pair":
            raise EvalError("relation literals list pairs (x,y)")
        pairs.append((_elem_index(src, it[1]), _elem_index(tgt, it[2])))
    return Relation.from_pairs(src, tgt, pairs)


def render(v) -> str:
    """Text form parseable back by :func:`parse` (given the same universes)."""
    if isinstance(v, Relation):
        body = ",".join(f"({v.src.label(i)},{v.tgt.label(j)})" for i, j in v.pairs)
        return f"{{{body}}}:{v.src.name}<->{v.tgt.name}"
    if isinstance(v, Test):
        body = ",".join(v.universe.label(i) for i in v)
        return f"{{{body}}}:{v.universe.name}"
    if isinstance(v, bool):
        return "true" if v else "false"
    raise TypeError(f"cannot render {type(v).__name__}")
