"""Shared universes and hypothesis strategies."""

from hypothesis import strategies as st

from mrl import relcore as rc

X = rc.universe(2, "X")
Y = rc.universe(2, "Y")
Z = rc.universe(3, "Z")
PX = rc.powerset(X)
PY = rc.powerset(Y)
PZ = rc.powerset(Z)


def rels(src, tgt):
    return st.integers(0, (1 << (src.size * tgt.size)) - 1).map(lambda c: rc.Relation.from_code(src, tgt, c))


def preds(u):
    return st.integers(0, u.full).map(lambda m: rc.Test(u, m))


def multis(src, base):
    return rels(src, rc.powerset(base))


def lit(text, **sizes):
    """Evaluate a literal in an environment with the given universe sizes."""
    from mrl import terms
    return terms.evaluate(text, terms.Env.from_sizes(sizes or {"X": 2}))
