"""Set-comprehension reference implementations used as test oracles.

Everything here works on plain Python sets of pairs, with powerset elements
as frozensets of base indices.  Nothing is shared with the bitmask kernels.
"""

from itertools import combinations, product

from mrl import relcore as rc


def elem(u, i):
    if u.base is None:
        return i
    return frozenset(elem(u.base, j) for j in rc.bits(i))


def carrier(u):
    return [elem(u, i) for i in range(u.size)]


def sets(r):
    """Relation -> set of pairs of decoded elements."""
    return {(elem(r.src, i), elem(r.tgt, j)) for i, j in r.pairs}


def members(p):
    return {elem(p.universe, i) for i in p}


def subsets(xs):
    xs = list(xs)
    return [frozenset(c) for k in range(len(xs) + 1) for c in combinations(xs, k)]


def image(r, a):
    return {b for (x, b) in r if x == a}


def compose(r, s):
    return {(a, c) for (a, b) in r for (b2, c) in s if b == b2}


def converse(r):
    return {(b, a) for (a, b) in r}


def lres(t, s, xs, ys):
    # t / s for t : X<->Z, s : Y<->Z
    return {(x, y) for x in xs for y in ys if all((x, z) in t for (y2, z) in s if y2 == y)}


def rres(r, s, ys, zs):
    # r \ s for r : X<->Y, s : X<->Z
    return {(y, z) for y in ys for z in zs if all((x, z) in s for (x, y2) in r if y2 == y)}


def syq(r, s, ys, zs):
    return {(y, z) for y in ys for z in zs
            if {x for (x, y2) in r if y2 == y} == {x for (x, z2) in s if z2 == z}}


def alpha(r):
    return {(a, b) for (a, B) in r for b in B}


def peleg(r, s):
    """(a,C) iff some (a,B) in r and a choice of (b, D_b) in s for each b in B with C the union."""
    out = set()
    for (a, B) in r:
        options = [[D for (b2, D) in s if b2 == b] for b in sorted(B)]
        for pick in product(*options):
            out.add((a, frozenset().union(*pick)))
    return out


def unit(xs):
    return {(a, frozenset([a])) for a in xs}


def up(r, ys):
    return {(a, A) for (a, B) in r for A in subsets(ys) if B <= A}


def down(r):
    return {(a, A) for (a, B) in r for A in subsets(B)}


def inner_union(r, s):
    return {(a, A | B) for (a, A) in r for (a2, B) in s if a == a2}


def inner_compl(r, ys):
    full = frozenset(ys)
    return {(a, full - A) for (a, A) in r}


def nu(r):
    return {(a, A) for (a, A) in r if A}


def delta_i(r):
    return {(a, frozenset([b])) for (a, b) in alpha(r)}


def delta_o(r, xs):
    return {(a, frozenset().union(*[B for (x, B) in r if x == a])) for a in xs}


def dom(r):
    return {a for (a, _) in r}


def dia_r(r, q):
    return {a for (a, b) in r if b in q}


def box_r(r, q, xs):
    return {a for a in xs if all(b in q for b in image(r, a))}


def dia_star(r, p):
    return {a for (a, B) in r if B <= p}


def box_star(r, p, xs):
    return {a for a in xs if all(B & p for B in image(r, a))}


def dia_alpha(r, p):
    return {a for (a, B) in r if B & p}


def box_alpha(r, p, xs):
    return {a for a in xs if all(B <= p for B in image(r, a))}


def star(r, xs):
    cur = set()
    while True:
        nxt = unit(xs) | peleg(r, cur)
        if nxt == cur:
            return cur
        cur = nxt
