"""Finite universes and the heterogeneous relational calculus.

A relation ``X <-> Y`` is stored as a tuple of row bitmasks, one int per source
element; bit ``j`` of row ``i`` is set iff ``(i, j)`` is in the relation.
Powerset universes index their elements by subset bitmask, so a row of a
relation into a powerset is itself a bitmask over bitmasks ("a family").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


class RelError(Exception):
    """Base class for errors raised by the kernel."""


class SortError(RelError):
    """Operands live in incompatible universes."""

    def __init__(self, message: str = "sort mismatch"):
        super().__init__(message)


class SizeBoundError(RelError):
    """A universe construction would exceed the configured size bounds."""

    def __init__(self, message: str = "universe too large"):
        super().__init__(message)


@dataclass
class Bounds:
    # powerset of a base universe needs base.size <= max_base
    max_base: int = 5
    # powerset of a powerset (e.g. for mu) needs base.size <= max_double_base
    max_double_base: int = 4


BOUNDS = Bounds()

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Universe:
    name: str
    size: int
    base: Optional["Universe"] = None
    labels: Optional[tuple] = field(default=None, compare=False, repr=False)

    @property
    def is_powerset(self) -> bool:
        return self.base is not None

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def label(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise IndexError(f"element {i} not in universe {self.name}")
        if self.labels is not None:
            return self.labels[i]
        if self.base is not None:
            return "{" + ",".join(self.base.label(j) for j in bits(i)) + "}"
        if self.size <= len(_LETTERS):
            return _LETTERS[i]
        return f"e{i}"

    def index(self, label: str) -> int:
        for i in range(self.size):
            if self.label(i) == label:
                return i
        raise KeyError(f"no element {label!r} in universe {self.name}")

    def __str__(self) -> str:
        return self.name


_fresh = itertools.count()


def universe(size: int, name: Optional[str] = None, labels: Optional[Sequence[str]] = None) -> Universe:
    if size < 0:
        raise ValueError("universe size must be nonnegative")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != size or len(set(labels)) != size:
            raise ValueError("labels must be distinct and match the size")
    if name is None:
        name = f"_u{next(_fresh)}"
    return Universe(name, size, None, labels)


@lru_cache(maxsize=None)
def _powerset(u: Universe, max_base: int, max_double: int) -> Universe:
    if u.base is None:
        if u.size > max_base:
            raise SizeBoundError()
    elif u.base.base is not None or u.base.size > max_double:
        raise SizeBoundError()
    return Universe(f"P({u.name})", 1 << u.size, u)


def powerset(u: Universe) -> Universe:
    """Carrier of all subsets of ``u``; element ``k`` is the subset with member bits ``k``."""
    return _powerset(u, BOUNDS.max_base, BOUNDS.max_double_base)


# -- bit helpers -------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def bits(x: int) -> tuple:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# -- values ------------------------------------------------------------------


class Relation:
    """Immutable relation between two finite universes."""

    __slots__ = ("src", "tgt", "rows", "_hash")

    def __init__(self, src: Universe, tgt: Universe, rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != src.size:
            raise ValueError("one row per source element required")
        full = tgt.full
        for r in rows:
            if r < 0 or r & ~full:
                raise IndexError("relation index out of bounds")
        self.src = src
        self.tgt = tgt
        self.rows = rows
        self._hash = hash((src.name, tgt.name, rows))

    @classmethod
    def _make(cls, src: Universe, tgt: Universe, rows: tuple) -> "Relation":
        self = object.__new__(cls)
        self.src = src
        self.tgt = tgt
        self.rows = rows
        self._hash = hash((src.name, tgt.name, rows))
        return self

    @classmethod
    def from_pairs(cls, src: Universe, tgt: Universe, pairs: Iterable[tuple]) -> "Relation":
        rows = [0] * src.size
        for i, j in pairs:
            if not (0 <= i < src.size and 0 <= j < tgt.size):
                raise IndexError("relation index out of bounds")
            rows[i] |= 1 << j
        return cls._make(src, tgt, tuple(rows))

    @classmethod
    def from_code(cls, src: Universe, tgt: Universe, code: int) -> "Relation":
        m = tgt.size
        full = tgt.full
        return cls._make(src, tgt, tuple((code >> (i * m)) & full for i in range(src.size)))

    @property
    def code(self) -> int:
        """Pair-set bitmask; row ``i`` occupies bits ``i*|tgt|`` onwards."""
        m = self.tgt.size
        c = 0
        for i, r in enumerate(self.rows):
            c |= r << (i * m)
        return c

    @property
    def pairs(self) -> list:
        return [(i, j) for i, r in enumerate(self.rows) for j in bits(r)]

    def __contains__(self, pair) -> bool:
        i, j = pair
        return bool(self.rows[i] >> j & 1)

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.rows == other.rows and self.src == other.src and self.tgt == other.tgt

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ",".join(f"({self.src.label(i)},{self.tgt.label(j)})" for i, j in self.pairs)
        return f"Relation({self.src}<->{self.tgt}: {{{body}}})"

    # operator sugar; all checks happen in the functions
    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return inter(self, other)

    def __sub__(self, other):
        return minus(self, other)

    def __invert__(self):
        return compl(self)

    def __le__(self, other):
        return subseteq(self, other)

    def __matmul__(self, other):
        return compose(self, other)


class Test:
    """A subset of a carrier, interchangeable with a sub-identity relation."""

    __test__ = False  # keep pytest from collecting this class
    __slots__ = ("universe", "members", "_hash")

    def __init__(self, universe: Universe, members: int):
        if members < 0 or members & ~universe.full:
            raise IndexError("test member out of range")
        self.universe = universe
        self.members = members
        self._hash = hash((universe.name, members, "test"))

    @classmethod
    def _make(cls, universe: Universe, members: int) -> "Test":
        self = object.__new__(cls)
        self.universe = universe
        self.members = members
        self._hash = hash((universe.name, members, "test"))
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Test):
            return NotImplemented
        return self.members == other.members and self.universe == other.universe

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[int]:
        return iter(bits(self.members))

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def __repr__(self) -> str:
        body = ",".join(self.universe.label(i) for i in bits(self.members))
        return f"Test({self.universe}: {{{body}}})"

    def __le__(self, other) -> bool:
        _same_universe(self, other)
        return self.members & ~other.members == 0

    def __or__(self, other):
        return test_union(self, other)

    def __and__(self, other):
        return test_inter(self, other)

    def __invert__(self):
        return test_compl(self)


# -- sort checks ---------------------------------------------------------------


def _same_sort(r: Relation, s: Relation) -> None:
    if (r.src is not s.src and r.src != s.src) or (r.tgt is not s.tgt and r.tgt != s.tgt):
        raise SortError(f"sort mismatch: {r.src}<->{r.tgt} vs {s.src}<->{s.tgt}")


def _same_universe(p: Test, q: Test) -> None:
    if p.universe is not q.universe and p.universe != q.universe:
        raise SortError(f"sort mismatch: test on {p.universe} vs test on {q.universe}")


def _match(u: Universe, v: Universe) -> None:
    if u is not v and u != v:
        raise SortError(f"sort mismatch: {u} vs {v}")


# -- boolean lattice -------------------------------------------------------------


def empty(src: Universe, tgt: Universe) -> Relation:
    return Relation._make(src, tgt, (0,) * src.size)


def top(src: Universe, tgt: Universe) -> Relation:
    return Relation._make(src, tgt, (tgt.full,) * src.size)


def identity(u: Universe) -> Relation:
    return Relation._make(u, u, tuple(1 << i for i in range(u.size)))


def union(r: Relation, s: Relation) -> Relation:
    _same_sort(r, s)
    return Relation._make(r.src, r.tgt, tuple(a | b for a, b in zip(r.rows, s.rows)))


def inter(r: Relation, s: Relation) -> Relation:
    _same_sort(r, s)
    return Relation._make(r.src, r.tgt, tuple(a & b for a, b in zip(r.rows, s.rows)))


def compl(r: Relation) -> Relation:
    full = r.tgt.full
    return Relation._make(r.src, r.tgt, tuple(a ^ full for a in r.rows))


def minus(r: Relation, s: Relation) -> Relation:
    _same_sort(r, s)
    return Relation._make(r.src, r.tgt, tuple(a & ~b for a, b in zip(r.rows, s.rows)))


def subseteq(r: Relation, s: Relation) -> bool:
    _same_sort(r, s)
    for a, b in zip(r.rows, s.rows):
        if a & ~b:
            return False
    return True


# -- composition, converse, residuals ----------------------------------------------


def compose(r: Relation, s: Relation) -> Relation:
    _match(r.tgt, s.src)
    srows = s.rows
    out = []
    for row in r.rows:
        acc = 0
        for j in bits(row):
            acc |= srows[j]
        out.append(acc)
    return Relation._make(r.src, s.tgt, tuple(out))


def converse(r: Relation) -> Relation:
    cols = [0] * r.tgt.size
    for i, row in enumerate(r.rows):
        bit = 1 << i
        for j in bits(row):
            cols[j] |= bit
    return Relation._make(r.tgt, r.src, tuple(cols))


def lres(t: Relation, s: Relation) -> Relation:
    """Left residual ``t / s``: largest ``q`` with ``compose(q, s) <= t``."""
    _match(t.tgt, s.tgt)
    return compl(compose(compl(t), converse(s)))


def rres(r: Relation, s: Relation) -> Relation:
    """Right residual ``r \\ s``: largest ``q`` with ``compose(r, q) <= s``."""
    _match(r.src, s.src)
    return compl(compose(converse(r), compl(s)))


def syq(t: Relation, s: Relation) -> Relation:
    """Symmetric quotient: ``(y, z)`` iff column ``y`` of ``t`` equals column ``z`` of ``s``."""
    _match(t.src, s.src)
    tcols = converse(t).rows
    scols = converse(s).rows
    out = []
    for c in tcols:
        row = 0
        for z, d in enumerate(scols):
            if c == d:
                row |= 1 << z
        out.append(row)
    return Relation._make(t.tgt, s.tgt, tuple(out))


# -- tests and domain ------------------------------------------------------------


def test_of(members: Iterable[int], u: Universe) -> Test:
    m = 0
    for i in members:
        if not 0 <= i < u.size:
            raise IndexError(f"element {i} not in universe {u.name}")
        m |= 1 << i
    return Test._make(u, m)


def full_test(u: Universe) -> Test:
    return Test._make(u, u.full)


def empty_test(u: Universe) -> Test:
    return Test._make(u, 0)


def test_compl(p: Test) -> Test:
    return Test._make(p.universe, p.members ^ p.universe.full)


def test_union(p: Test, q: Test) -> Test:
    _same_universe(p, q)
    return Test._make(p.universe, p.members | q.members)


def test_inter(p: Test, q: Test) -> Test:
    _same_universe(p, q)
    return Test._make(p.universe, p.members & q.members)


def test_implies(p: Test, q: Test) -> Test:
    """Material implication ``~p | q`` on tests."""
    _same_universe(p, q)
    return Test._make(p.universe, (p.members ^ p.universe.full) | q.members)


def as_relation(p: Test) -> Relation:
    u = p.universe
    m = p.members
    return Relation._make(u, u, tuple(m & (1 << i) for i in range(u.size)))


def as_test(r: Relation) -> Test:
    if not is_test(r):
        raise SortError("relation is not a test")
    m = 0
    for i, row in enumerate(r.rows):
        if row:
            m |= 1 << i
    return Test._make(r.src, m)


def dom(r: Relation) -> Test:
    m = 0
    for i, row in enumerate(r.rows):
        if row:
            m |= 1 << i
    return Test._make(r.src, m)


def cod(r: Relation) -> Test:
    m = 0
    for row in r.rows:
        m |= row
    return Test._make(r.tgt, m)


# -- predicates ------------------------------------------------------------------


def is_total(r: Relation) -> bool:
    return all(r.rows)


def is_univalent(r: Relation) -> bool:
    return all(row & (row - 1) == 0 for row in r.rows)


def is_deterministic(r: Relation) -> bool:
    return all(row and row & (row - 1) == 0 for row in r.rows)


def is_test(r: Relation) -> bool:
    if r.src != r.tgt:
        return False
    return all(row & ~(1 << i) == 0 for i, row in enumerate(r.rows))


# -- enumeration ----------------------------------------------------------------


def all_relations(src: Universe, tgt: Universe) -> Iterator[Relation]:
    """Every relation ``src <-> tgt`` in increasing pair-set bitmask order."""
    n = src.size * tgt.size
    for code in range(1 << n):
        yield Relation.from_code(src, tgt, code)


def all_tests(u: Universe) -> Iterator[Test]:
    for m in range(1 << u.size):
        yield Test._make(u, m)


# -- JSON ------------------------------------------------------------------------


def universe_to_json(u: Universe) -> dict:
    if u.base is None:
        return {"name": u.name, "size": u.size, "kind": "base"}
    return {"name": u.name, "size": u.size, "kind": "powerset", "of": universe_to_json(u.base)}


def universe_from_json(d, known: Optional[dict] = None) -> Universe:
    """Resolve a declared universe; ``known`` maps base names to universes and is extended in place."""
    known = {} if known is None else known
    if isinstance(d, str):
        # shorthand: "X" or "P(X)" naming an already declared base universe
        if d.startswith("P(") and d.endswith(")"):
            return powerset(universe_from_json(d[2:-1], known))
        if d not in known:
            raise SortError(f"undeclared universe {d}")
        return known[d]
    if d.get("kind", "base") == "powerset":
        u = powerset(universe_from_json(d["of"], known))
    else:
        name = d["name"]
        u = known.get(name)
        if u is None:
            u = known[name] = universe(int(d["size"]), name)
    if u.size != d.get("size", u.size):
        raise SortError(f"sort mismatch: universe {u.name} has size {u.size}, data says {d['size']}")
    return u


def element_to_json(u: Universe, i: int):
    if u.base is None:
        return i
    return [element_to_json(u.base, j) for j in bits(i)]


def element_from_json(u: Universe, v) -> int:
    if u.base is None:
        if not isinstance(v, int) or not 0 <= v < u.size:
            raise ValueError(f"element {v!r} not in universe {u.name}")
        return v
    return mask_of(element_from_json(u.base, x) for x in v)


def to_json(v) -> dict:
    """Relations as sorted index pairs, tests as sorted member lists."""
    if isinstance(v, Test):
        u = v.universe
        return {"universe": universe_to_json(u), "members": [element_to_json(u, i) for i in bits(v.members)]}
    return {
        "src": universe_to_json(v.src),
        "tgt": universe_to_json(v.tgt),
        "pairs": [[element_to_json(v.src, i), element_to_json(v.tgt, j)] for i, j in sorted(v.pairs)],
    }


def from_json(d: dict, known: Optional[dict] = None):
    known = {} if known is None else known
    if "members" in d:
        u = universe_from_json(d["universe"], known)
        return Test._make(u, mask_of(element_from_json(u, x) for x in d["members"]))
    src = universe_from_json(d["src"], known)
    tgt = universe_from_json(d["tgt"], known)
    pairs = [(element_from_json(src, a), element_from_json(tgt, b)) for a, b in d["pairs"]]
    return Relation.from_pairs(src, tgt, pairs)
