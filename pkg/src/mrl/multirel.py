"""Multirelations ``X <-> P(Y)``: inner structure, determinisation, liftings, Peleg composition.

A multirelation is an ordinary :class:`Relation` whose target is a powerset
universe.  Each row is a family of subsets encoded as a bitmask over subset
indices.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import powerops as po
from .relcore import (
    Relation,
    SizeBoundError,
    SortError,
    Test,
    Universe,
    as_relation,
    bits,
    compl,
    compose,
    dom,
    inter,
    lres,
    powerset,
    subseteq,
    union,
)

MAX_SUBRELATION_CHOICES = 8


def base_of(r: Relation) -> Universe:
    if r.tgt.base is None:
        raise SortError(f"sort mismatch: {r.tgt} is not a powerset universe")
    return r.tgt.base


def is_multirelation(r: Relation) -> bool:
    return r.tgt.base is not None


# -- family kernels (families are bitmasks over subset indices) ---------------------


@lru_cache(maxsize=1 << 16)
def join(f: int, g: int) -> int:
    """``{A | B : A in f, B in g}``."""
    out = 0
    gb = bits(g)
    for a in bits(f):
        for b in gb:
            out |= 1 << (a | b)
    return out


@lru_cache(maxsize=1 << 16)
def meet(f: int, g: int) -> int:
    out = 0
    gb = bits(g)
    for a in bits(f):
        for b in gb:
            out |= 1 << (a & b)
    return out


@lru_cache(maxsize=1 << 16)
def flatten(f: int) -> int:
    """Union of all members of the family ``f``."""
    acc = 0
    for a in bits(f):
        acc |= a
    return acc


@lru_cache(maxsize=1 << 16)
def _up_family(f: int, n: int) -> int:
    out = 0
    for b in range(1 << n):
        for a in bits(f):
            if a & ~b == 0:
                out |= 1 << b
                break
    return out


@lru_cache(maxsize=1 << 16)
def _down_family(f: int, n: int) -> int:
    out = 0
    for b in range(1 << n):
        for a in bits(f):
            if b & ~a == 0:
                out |= 1 << b
                break
    return out


@lru_cache(maxsize=1 << 16)
def _compl_family(f: int, n: int) -> int:
    full = (1 << n) - 1
    out = 0
    for a in bits(f):
        out |= 1 << (full ^ a)
    return out


def _singletons(m: int) -> int:
    out = 0
    for b in bits(m):
        out |= 1 << (1 << b)
    return out


def _multi(src: Universe, y: Universe, rows) -> Relation:
    return Relation._make(src, powerset(y), tuple(rows))


# -- constants -----------------------------------------------------------------


def unit(x: Universe) -> Relation:
    return po.eta(x)


def one_iu(x: Universe, y: Universe) -> Relation:
    return _multi(x, y, (1,) * x.size)


def one_ii(x: Universe, y: Universe) -> Relation:
    return _multi(x, y, (1 << y.full,) * x.size)


def atoms_iu(x: Universe, y: Universe) -> Relation:
    return _multi(x, y, (_singletons(y.full),) * x.size)


def atoms_ii(x: Universe, y: Universe) -> Relation:
    return inner_compl(atoms_iu(x, y))


# -- tests as multirelations -----------------------------------------------------------


def mtest(p: Test) -> Relation:
    """Multirelational test ``{(a, {a}) | a in p}``."""
    return compose(as_relation(p), po.eta(p.universe))


def mtest_to_test(r: Relation) -> Test:
    """Inverse of :func:`mtest` for sub-unit multirelations."""
    x = r.src
    if r.tgt != powerset(x):
        raise SortError("sort mismatch: not a square multirelation")
    m = 0
    for i, row in enumerate(r.rows):
        if row & ~(1 << (1 << i)):
            raise SortError("multirelation is not below the unit")
        if row:
            m |= 1 << i
    return Test._make(x, m)


# -- alpha, inner structure ------------------------------------------------------------


def alpha(r: Relation) -> Relation:
    """Atomisation ``compose(r, has_element)``: ``(a, b)`` iff ``b`` is in some inner set of ``a``."""
    y = base_of(r)
    return Relation._make(r.src, y, tuple(flatten(row) for row in r.rows))


def inner_union(r: Relation, s: Relation) -> Relation:
    if r.src != s.src or r.tgt != s.tgt:
        raise SortError()
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(join(a, b) for a, b in zip(r.rows, s.rows)))


def inner_inter(r: Relation, s: Relation) -> Relation:
    if r.src != s.src or r.tgt != s.tgt:
        raise SortError()
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(meet(a, b) for a, b in zip(r.rows, s.rows)))


def inner_compl(r: Relation) -> Relation:
    n = base_of(r).size
    return Relation._make(r.src, r.tgt, tuple(_compl_family(row, n) for row in r.rows))


def dual(r: Relation) -> Relation:
    return compl(inner_compl(r))


def up(r: Relation) -> Relation:
    n = base_of(r).size
    return Relation._make(r.src, r.tgt, tuple(_up_family(row, n) for row in r.rows))


def down(r: Relation) -> Relation:
    n = base_of(r).size
    return Relation._make(r.src, r.tgt, tuple(_down_family(row, n) for row in r.rows))


def convex(r: Relation) -> Relation:
    return inter(up(r), down(r))


def nu(r: Relation) -> Relation:
    """Drop the pairs with empty inner set."""
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(row & ~1 for row in r.rows))


def tau(r: Relation) -> Relation:
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(row & 1 for row in r.rows))


def is_inner_total(r: Relation) -> bool:
    base_of(r)
    return all(row & 1 == 0 for row in r.rows)


def is_inner_univalent(r: Relation) -> bool:
    allowed = _singletons(base_of(r).full) | 1
    return all(row & ~allowed == 0 for row in r.rows)


def is_inner_deterministic(r: Relation) -> bool:
    allowed = _singletons(base_of(r).full)
    return all(row & ~allowed == 0 for row in r.rows)


# -- determinisation -----------------------------------------------------------------


def delta_o(r: Relation) -> Relation:
    """Outer determinisation: each source element maps to the union of its inner sets."""
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(1 << flatten(row) for row in r.rows))


def delta_i(r: Relation) -> Relation:
    """Inner determinisation: singletons of every reachable inner element."""
    base_of(r)
    return Relation._make(r.src, r.tgt, tuple(_singletons(flatten(row)) for row in r.rows))


def cofission(r: Relation) -> Relation:
    return inter(up(r), atoms_ii(r.src, base_of(r)))


def cofusion(r: Relation) -> Relation:
    return inner_compl(delta_o(inner_compl(r)))


# -- liftings and Peleg composition -------------------------------------------------------


def _choice_unions(rows: tuple, subset: int) -> int:
    """Family of ``union f(subset)`` over all choices ``f(b) in rows[b]``."""
    fam = 1
    for b in bits(subset):
        g = rows[b]
        if not g:
            return 0
        fam = join(fam, g)
    return fam


def peleg(r: Relation, s: Relation) -> Relation:
    """Peleg composition by direct per-element choice; never materializes ``P(src(s))`` relations."""
    if base_of(r) != s.src:
        raise SortError(f"sort mismatch: {r.tgt} vs {s.src}")
    base_of(s)
    srows = s.rows
    memo = {}
    out = []
    for row in r.rows:
        acc = 0
        for b in bits(row):
            fam = memo.get(b)
            if fam is None:
                fam = memo[b] = _choice_unions(srows, b)
            acc |= fam
        out.append(acc)
    return Relation._make(r.src, s.tgt, tuple(out))


def kleisli_lift(r: Relation) -> Relation:
    return po.image_functor(alpha(r))


def peleg_lift(r: Relation) -> Relation:
    """``P(src) <-> P(Y)``: ``(A, B)`` iff ``B`` is a union of one inner set chosen per member of ``A``."""
    base_of(r)
    px = powerset(r.src)
    rows = r.rows
    return Relation._make(px, r.tgt, tuple(_choice_unions(rows, a) for a in range(px.size)))


def _domain_subrelations(r: Relation):
    """All univalent ``s <= r`` with ``dom(s) = dom(r)``."""
    options = []
    for row in r.rows:
        choices = bits(row)
        if len(choices) > MAX_SUBRELATION_CHOICES:
            raise SizeBoundError("too many choices per element for subrelation enumeration")
        options.append([1 << c for c in choices] if choices else [0])
    for rows in itertools.product(*options):
        yield Relation._make(r.src, r.tgt, rows)


def peleg_lift_via_subrelations(r: Relation) -> Relation:
    """Peleg lifting as the power test of ``dom(r)`` followed by the union of Kleisli lifts
    of all domain-preserving univalent subrelations."""
    acc = None
    for s in _domain_subrelations(r):
        k = kleisli_lift(s)
        acc = k if acc is None else union(acc, k)
    return compose(as_relation(po.power_test(dom(r))), acc)


def peleg_via_lift(r: Relation, s: Relation) -> Relation:
    return compose(r, peleg_lift(s))


def co_compose(r: Relation, s: Relation) -> Relation:
    return inner_compl(peleg(r, inner_compl(s)))


def mres(t: Relation, s: Relation) -> Relation:
    """Right adjoint of ``peleg(-, s)``: ``peleg(r, s) <= t`` iff ``r <= mres(t, s)``."""
    if t.tgt != s.tgt:
        raise SortError()
    return lres(t, peleg_lift(s))


# -- preorders ---------------------------------------------------------------------------


def le_up(r: Relation, s: Relation) -> bool:
    return subseteq(s, up(r))


def le_down(r: Relation, s: Relation) -> bool:
    return subseteq(r, down(s))


def le_convex(r: Relation, s: Relation) -> bool:
    return le_down(r, s) and le_up(r, s)


def all_multirelations(x: Universe, y: Universe):
    from .relcore import all_relations

    return all_relations(x, powerset(y))


