"""Box and diamond operators over relations and multirelations.

Function-style operators map a test on the target (base) universe to a test on
the source universe and never build powerset relations.  Graph-style operators
return the predicate transformer as a relation ``P(Y) <-> P(X)``.  Backward
modalities are the forward ones applied to a converse.
"""

from __future__ import annotations

from typing import Callable

from . import multirel as mr
from . import powerops as po
from .relcore import (
    Relation,
    SortError,
    Test,
    Universe,
    converse,
    lres,
    powerset,
)


def _check_rel(r: Relation, q: Test) -> None:
    if r.tgt is not q.universe and r.tgt != q.universe:
        raise SortError(f"sort mismatch: relation into {r.tgt}, test on {q.universe}")


def _check_multi(r: Relation, p: Test) -> None:
    if mr.base_of(r) != p.universe:
        raise SortError(f"sort mismatch: multirelation into {r.tgt}, test on {p.universe}")


# -- relational -----------------------------------------------------------------


def dia_r(r: Relation, q: Test) -> Test:
    _check_rel(r, q)
    qm = q.members
    m = 0
    for i, row in enumerate(r.rows):
        if row & qm:
            m |= 1 << i
    return Test._make(r.src, m)


def box_r(r: Relation, q: Test) -> Test:
    _check_rel(r, q)
    out = q.members ^ q.universe.full
    m = 0
    for i, row in enumerate(r.rows):
        if not row & out:
            m |= 1 << i
    return Test._make(r.src, m)


# -- Peleg style -------------------------------------------------------------------


def dia_star(r: Relation, p: Test) -> Test:
    """Elements with some inner set inside ``p``."""
    _check_multi(r, p)
    fam = po.subsets_mask(p.members, p.universe.size)
    m = 0
    for i, row in enumerate(r.rows):
        if row & fam:
            m |= 1 << i
    return Test._make(r.src, m)


def box_star(r: Relation, p: Test) -> Test:
    """Elements all of whose inner sets meet ``p``."""
    _check_multi(r, p)
    fam = po.subsets_mask(p.members ^ p.universe.full, p.universe.size)
    m = 0
    for i, row in enumerate(r.rows):
        if not row & fam:
            m |= 1 << i
    return Test._make(r.src, m)


# -- atomised (alpha) style ----------------------------------------------------------


def dia_alpha(r: Relation, p: Test) -> Test:
    _check_multi(r, p)
    return dia_r(mr.alpha(r), p)


def box_alpha(r: Relation, p: Test) -> Test:
    """Elements all of whose inner sets lie inside ``p``."""
    _check_multi(r, p)
    return box_r(mr.alpha(r), p)


# -- graph style ------------------------------------------------------------------------


def gdia_r(r: Relation) -> Relation:
    return po.image_functor(converse(r))


def gbox_r(r: Relation) -> Relation:
    return po.power_transpose(lres(po.has_element(r.tgt), r))


def gdia_star(r: Relation) -> Relation:
    return po.power_transpose(converse(mr.up(r)))


def gbox_star(r: Relation) -> Relation:
    return po.power_transpose(converse(mr.dual(mr.up(r))))


def gdia_alpha(r: Relation) -> Relation:
    return gdia_r(mr.alpha(r))


def gbox_alpha(r: Relation) -> Relation:
    return gbox_r(mr.alpha(r))


def tabulate(op: Callable[[Relation, Test], Test], r: Relation, y: Universe) -> Relation:
    """``{(Q, op(r, Q)) | Q <= y}`` as a relation ``P(y) <-> P(src)``."""
    py = powerset(y)
    px = powerset(r.src)
    rows = tuple(1 << op(r, Test._make(y, q)).members for q in range(py.size))
    return Relation._make(py, px, rows)


def tab_dia_r(r: Relation) -> Relation:
    return tabulate(dia_r, r, r.tgt)


def tab_box_r(r: Relation) -> Relation:
    return tabulate(box_r, r, r.tgt)


def tab_dia_star(r: Relation) -> Relation:
    return tabulate(dia_star, r, mr.base_of(r))


def tab_box_star(r: Relation) -> Relation:
    return tabulate(box_star, r, mr.base_of(r))


def tab_dia_alpha(r: Relation) -> Relation:
    return tabulate(dia_alpha, r, mr.base_of(r))


def tab_box_alpha(r: Relation) -> Relation:
    return tabulate(box_alpha, r, mr.base_of(r))
