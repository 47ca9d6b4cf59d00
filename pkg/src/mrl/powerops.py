"""Power-allegory constants and constructions over powerset universes.

All named constants are memoized per universe; the caches are idempotent,
so concurrent population is harmless.
"""

from __future__ import annotations

from functools import lru_cache

from .relcore import (
    Relation,
    Test,
    Universe,
    bits,
    converse,
    powerset,
)


@lru_cache(maxsize=None)
def membership(y: Universe) -> Relation:
    """``y <-> P(y)``: ``(b, A)`` iff ``b`` is a member of ``A``."""
    py = powerset(y)
    rows = []
    for b in range(y.size):
        row = 0
        for a in range(py.size):
            if a >> b & 1:
                row |= 1 << a
        rows.append(row)
    return Relation._make(y, py, tuple(rows))


@lru_cache(maxsize=None)
def has_element(y: Universe) -> Relation:
    return converse(membership(y))


def power_transpose(r: Relation) -> Relation:
    """Send each source element to (the singleton family of) its image set."""
    return Relation._make(r.src, powerset(r.tgt), tuple(1 << row for row in r.rows))


def image_functor(r: Relation) -> Relation:
    """``P(src) <-> P(tgt)``: a subset ``A`` maps to the union of the images of its members."""
    px = powerset(r.src)
    ptgt = powerset(r.tgt)
    rows = r.rows
    out = []
    for a in range(px.size):
        acc = 0
        for i in bits(a):
            acc |= rows[i]
        out.append(1 << acc)
    return Relation._make(px, ptgt, tuple(out))


@lru_cache(maxsize=None)
def eta(x: Universe) -> Relation:
    return Relation._make(x, powerset(x), tuple(1 << (1 << i) for i in range(x.size)))


@lru_cache(maxsize=None)
def mu(x: Universe) -> Relation:
    """``P(P(x)) <-> P(x)``: a family maps to the union of its members."""
    return image_functor(has_element(x))


def power_test(p: Test) -> Test:
    """The test on ``P(u)`` holding exactly the subsets of ``p``."""
    return Test._make(powerset(p.universe), subsets_mask(p.members, p.universe.size))


@lru_cache(maxsize=1 << 12)
def subsets_mask(m: int, n: int) -> int:
    """Family (as a bitmask over subset indices) of all subsets of ``m`` within ``n`` bits."""
    fam = 0
    for a in range(1 << n):
        if a & ~m == 0:
            fam |= 1 << a
    return fam


@lru_cache(maxsize=None)
def omega(y: Universe) -> Relation:
    """Subset order on ``P(y)``."""
    py = powerset(y)
    rows = []
    for a in range(py.size):
        row = 0
        for b in range(py.size):
            if a & ~b == 0:
                row |= 1 << b
        rows.append(row)
    return Relation._make(py, py, tuple(rows))


@lru_cache(maxsize=None)
def omega_conv(y: Universe) -> Relation:
    return converse(omega(y))


@lru_cache(maxsize=None)
def comp_rel(y: Universe) -> Relation:
    """Complementation on ``P(y)``: ``A`` maps to ``y - A``."""
    py = powerset(y)
    full = y.full
    return Relation._make(py, py, tuple(1 << (full ^ a) for a in range(py.size)))
