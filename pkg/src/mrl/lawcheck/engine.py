"""Sweep engine: enumerate or sample instance spaces and evaluate a law on each.

A law is resolved once against probe values, flattened into a DAG of kernel
calls with common subterms shared, and compiled to nested Python loops.  Each
node is computed at the loop depth of the deepest variable it mentions, so a
subterm depending only on the outer variables is evaluated once per outer
iteration instead of once per instance.  Closed subterms are folded at compile
time.
"""

from __future__ import annotations

import math
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .. import relcore as rc
from .. import terms as T
from ..relcore import Relation, RelError, Test, Universe

DEFAULT_SEED = 0xC0FFEE
DEFAULT_SAMPLES = 100_000
VAR_CAP = 1 << 24  # values per variable in exhaustive mode
DEFAULT_MAX_SPACE = 1 << 25  # instances in exhaustive mode


@dataclass(frozen=True)
class Law:
    id: str
    variables: Tuple[Tuple[str, str], ...]
    claim: str
    side: Tuple[str, ...] = ()
    expected: str = "HOLDS"
    anchor: str = ""
    section: str = ""
    sizes: Tuple[Tuple[str, int], ...] = (("X", 2), ("Y", 2), ("Z", 2))
    mode: str = "auto"
    note: str = ""

    def default_sizes(self) -> Dict[str, int]:
        return dict(self.sizes)


@dataclass
class CheckReport:
    law: str
    anchor: str
    section: str
    sizes: Dict[str, int]
    mode: dict
    checked: int
    filtered: int
    outcome: str  # PASS | FAIL | VACUOUS | SKIPPED
    expected: str
    witness: Optional[Dict[str, str]] = None
    sides: Optional[List[str]] = None
    reason: Optional[str] = None
    ms: float = 0.0
    # serialized witness bindings, loadable as an environment file for `mrl eval`
    witness_values: Optional[dict] = None

    @property
    def matches(self) -> bool:
        if self.outcome == "SKIPPED":
            return True
        if self.expected == "FAILS":
            return self.outcome == "FAIL"
        return self.outcome == "PASS"

    def to_json(self, timings: bool = False) -> dict:
        d = {
            "law": self.law,
            "anchor": self.anchor,
            "section": self.section,
            "sizes": dict(sorted(self.sizes.items())),
            "mode": self.mode,
            "checked": self.checked,
            "filtered": self.filtered,
            "outcome": self.outcome,
            "expected": self.expected,
            "matches": self.matches,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.witness_values is not None:
            d["witness_values"] = self.witness_values
        if self.sides is not None:
            d["sides"] = self.sides
        if self.reason is not None:
            d["reason"] = self.reason
        if timings:
            d["ms"] = round(self.ms, 1)
        return d

    def line(self) -> str:
        flag = "ok" if self.matches else "UNEXPECTED"
        sz = ",".join(f"{k}={v}" for k, v in sorted(self.sizes.items()))
        text = f"{self.outcome:8} {self.law:40} [{sz}] checked={self.checked} filtered={self.filtered} ({flag})"
        if self.reason:
            text += f" reason: {self.reason}"
        if self.witness:
            text += "\n    witness: " + ", ".join(f"{k} = {v}" for k, v in self.witness.items())
        if self.sides:
            text += "\n    sides:   " + " vs ".join(self.sides)
        return text


# -- instance spaces --------------------------------------------------------------------

_SORT = re.compile(r"^\s*(rel|mrel|test)\s*\((.*)\)\s*$")


def _split_args(s: str) -> List[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur.strip())
    return out


class Space:
    """All values of one sort, indexed canonically (relations by pair-set bitmask)."""

    def __init__(self, sort: str, env: T.Env):
        m = _SORT.match(sort)
        if not m:
            raise ValueError(f"bad sort {sort!r}")
        kind, args = m.group(1), _split_args(m.group(2))
        self.sort = sort
        if kind == "test":
            (u,) = args
            self.kind = "test"
            self.universe = env.universe(u)
            self.size = 1 << self.universe.size
        else:
            a, b = args
            self.kind = "rel"
            self.src = env.universe(a)
            self.tgt = env.universe(b)
            if kind == "mrel":
                self.tgt = rc.powerset(self.tgt)
            self.size = 1 << (self.src.size * self.tgt.size)

    @property
    def is_relation(self) -> bool:
        return self.kind == "rel"

    def value(self, i: int):
        if self.kind == "test":
            return Test._make(self.universe, i)
        return Relation.from_code(self.src, self.tgt, i)

    def values(self) -> list:
        return [self.value(i) for i in range(self.size)]


def enumerate_sort(sort: str, sizes: Dict[str, int]):
    """Stream every value of ``sort`` in canonical order."""
    sp = Space(sort, T.Env.from_sizes(sizes))
    if sp.size > VAR_CAP:
        raise ValueError(f"space of {sort} has {sp.size} values, above the cap {VAR_CAP}")
    return (sp.value(i) for i in range(sp.size))


# -- compilation --------------------------------------------------------------------------


class InstanceError(RelError):
    def __init__(self, law: str, cause: Exception, bindings: Dict[str, str]):
        super().__init__(f"law {law}: {cause} at {bindings}")
        self.bindings = bindings


def _cmp_fn(ops):
    if len(ops) == 1:
        op = ops[0]
        if op == "=":
            return T._eq
        if op == "<=":
            return T._le
        return lambda a, b: T.compare(op, a, b)

    def chain(*vals):
        return all(T.compare(op, vals[j], vals[j + 1]) for j, op in enumerate(ops))

    return chain


def _iff(a, b):
    return a == b


def _implies(a, b):
    return (not a) or b


class Program:
    """A compiled law over fixed universes."""

    def __init__(self, law: Law, sizes: Dict[str, int]):
        self.law = law
        self.sizes = sizes
        self.env = T.Env.from_sizes(sizes)
        self.spaces = [Space(s, self.env) for _, s in law.variables]
        self.names = [n for n, _ in law.variables]
        probe = {n: sp.value(0) for n, sp in zip(self.names, self.spaces)}
        penv = self.env.with_bindings(probe)
        self.claim_term, _ = T.resolve(T.parse_claim(law.claim), penv)
        self.side_terms = [T.resolve(T.parse_claim(s), penv)[0] for s in law.side]
        self._build()

    # DAG construction
    def _build(self):
        self.slots: Dict[T.Term, str] = {}
        self.level: Dict[str, int] = {}
        self.consts: Dict[str, object] = {}
        self.calls: List[Tuple[str, object, Tuple[str, ...], int]] = []
        for i, n in enumerate(self.names):
            self.level[f"x{i}"] = i
        self.var_index = {n: i for i, n in enumerate(self.names)}
        self.claim_slot = self._node(self.claim_term)
        self.side_slots = [self._node(t) for t in self.side_terms]

    def _node(self, t: T.Term) -> str:
        hit = self.slots.get(t)
        if hit is not None:
            return hit
        if t.kind == "var":
            slot = f"x{self.var_index[t.name]}"
        elif t.kind in ("const", "lit"):
            slot = f"c{len(self.consts)}"
            self.consts[slot] = T.resolve(t, self.env)[1]
            self.level[slot] = -1
        else:
            args = tuple(self._node(a) for a in t.args)
            if t.kind == "cmp":
                fn = _cmp_fn(t.payload)
            elif t.kind == "iff":
                fn = _iff
            elif t.kind == "implies":
                fn = _implies
            else:
                fn = T.CONCRETE[t.name][0]
            lvl = max((self.level[a] for a in args), default=-1)
            if lvl < 0:
                # closed subterm: fold now
                slot = f"c{len(self.consts)}"
                self.consts[slot] = fn(*(self.consts[a] for a in args))
                self.level[slot] = -1
            else:
                slot = f"n{len(self.calls)}"
                self.calls.append((slot, fn, args, lvl))
                self.level[slot] = lvl
        self.slots[t] = slot
        return slot

    def _namespace(self) -> dict:
        ns = {"RelError": RelError}
        ns.update(self.consts)
        for slot, fn, _, _ in self.calls:
            ns[f"f_{slot}"] = fn
        return ns

    def _side_deps(self) -> set:
        args = {slot: a for slot, _, a, _ in self.calls}
        seen = set()
        stack = list(self.side_slots)
        while stack:
            s = stack.pop()
            if s in seen or s not in args:
                continue
            seen.add(s)
            stack.extend(args[s])
        return seen

    def _emit_level(self, lines, d, indent, on_filter):
        # side conditions first so filtered instances never reach the claim
        pad = "    " * indent
        deps = self._side_deps()
        for slot, _, args, lvl in self.calls:
            if lvl == d and slot in deps:
                lines.append(f"{pad}{slot} = f_{slot}({', '.join(args)})")
        for s in self.side_slots:
            if self.level[s] == d:
                lines.append(f"{pad}if not {s}:")
                lines.append(f"{pad}    {on_filter}")
        for slot, _, args, lvl in self.calls:
            if lvl == d and slot not in deps:
                lines.append(f"{pad}{slot} = f_{slot}({', '.join(args)})")

    def sweep_source(self) -> str:
        k = len(self.names)
        deepest = max([self.level[self.claim_slot]] + [self.level[s] for s in self.side_slots] + [-1])
        rem = [math.prod(sp.size for sp in self.spaces[d + 1 :]) for d in range(k)]
        idx = ", ".join(f"i{j}" for j in range(k))
        lines = ["def sweep(V, lo, hi, rem):"]
        lines.append("    checked = 0")
        lines.append("    filtered = 0")
        for j in range(k):
            lines.append(f"    i{j} = None")
        lines.append("    try:")
        # closed side conditions / claim
        ind = 2
        pad = "    " * ind
        tup = "," if k == 1 else ""
        for s in self.side_slots:
            if self.level[s] < 0:
                lines.append(f"{pad}if not {s}:")
                lines.append(f"{pad}    return 0, (hi - lo) * rem[0], None, ()" if k else f"{pad}    return 0, 1, None, ()")
        if k == 0:
            lines.append(f"{pad}return (1, 0, None, ()) if {self.claim_slot} else (1, 0, (), ())")
        else:
            deepest = max(deepest, 0)
            for d in range(k):
                pad = "    " * ind
                rng = "range(lo, hi)" if d == 0 else f"range({self.spaces[d].size})"
                lines.append(f"{pad}for i{d} in {rng}:")
                ind += 1
                pad = "    " * ind
                lines.append(f"{pad}x{d} = V[{d}][i{d}]")
                self._emit_level(lines, d, ind, f"filtered += {rem[d]}; continue")
                if d == deepest:
                    cur = ", ".join([f"i{j}" for j in range(d + 1)] + ["0"] * (k - d - 1))
                    lines.append(f"{pad}if not {self.claim_slot}:")
                    lines.append(f"{pad}    return checked + 1, filtered, ({cur}{tup}), ()")
                    lines.append(f"{pad}checked += {rem[d]}")
                    break
        lines.append("    except RelError as e:")
        lines.append(f"        return checked, filtered, None, ({idx}{',' if k == 1 else ''}), e")
        lines.append("    return checked, filtered, None, ()")
        return "\n".join(lines)

    def instance_source(self) -> str:
        k = len(self.names)
        args = ", ".join(f"x{j}" for j in range(k))
        lines = [f"def inst({args}):"]
        for s in self.side_slots:
            if self.level[s] < 0:
                lines.append(f"    if not {s}:")
                lines.append("        return None")
        for d in range(k):
            self._emit_level(lines, d, 1, "return None")
        lines.append(f"    return bool({self.claim_slot})")
        return "\n".join(lines)

    def compile_sweep(self):
        ns = self._namespace()
        exec(self.sweep_source(), ns)
        return ns["sweep"]

    def compile_instance(self):
        ns = self._namespace()
        exec(self.instance_source(), ns)
        return ns["inst"]

    def rems(self) -> List[int]:
        k = len(self.spaces)
        return [math.prod(sp.size for sp in self.spaces[d + 1 :]) for d in range(k)]

    def describe(self, idx: Tuple[int, ...]) -> Dict[str, str]:
        return {n: T.render(sp.value(i)) for n, sp, i in zip(self.names, self.spaces, idx)}

    def serialize(self, idx: Tuple[int, ...]) -> dict:
        return {
            "universes": {k: v for k, v in sorted(self.sizes.items())},
            "bindings": {n: rc.to_json(sp.value(i)) for n, sp, i in zip(self.names, self.spaces, idx)},
        }

    def sides_at(self, idx: Tuple[int, ...]) -> Optional[List[str]]:
        """Rendered sides of the claim's comparison at an instance (for diagnostics)."""
        t = self.claim_term
        while t.kind == "implies":
            t = t.args[1]
        if t.kind != "cmp":
            return None
        env = self.env.with_bindings({n: sp.value(i) for n, sp, i in zip(self.names, self.spaces, idx)})
        out = []
        for a in t.args:
            v = T.resolve(a, env)[1]
            out.append(T.render(v))
        return out


# -- running ----------------------------------------------------------------------------------


_PROGRAMS: Dict[tuple, Program] = {}


def _program(law: Law, sizes: Dict[str, int]) -> Program:
    key = (law, tuple(sorted(sizes.items())))
    p = _PROGRAMS.get(key)
    if p is None:
        p = _PROGRAMS[key] = Program(law, sizes)
    return p


def _run_chunk(args):
    law, sizes, lo, hi = args
    prog = _program(law, sizes)
    values = [sp.values() for sp in prog.spaces]
    res = prog.compile_sweep()(values, lo, hi, prog.rems())
    if len(res) == 5:
        checked, filtered, _, idx, err = res
        return ("error", checked, filtered, idx, str(err))
    checked, filtered, wit, _ = res
    return ("ok", checked, filtered, wit, None)


def _run_samples(args):
    law, sizes, batch = args
    prog = _program(law, sizes)
    inst = prog.compile_instance()
    checked = filtered = 0
    least = None
    for idx in batch:
        vals = [sp.value(i) for sp, i in zip(prog.spaces, idx)]
        try:
            r = inst(*vals)
        except RelError as e:
            return ("error", checked, filtered, idx, str(e))
        if r is None:
            filtered += 1
            continue
        checked += 1
        if not r and (least is None or idx < least):
            least = idx
    return ("ok", checked, filtered, least, None)


def resolve_sizes(law: Law, sizes: Optional[Dict[str, int]]) -> Dict[str, int]:
    out = law.default_sizes()
    if sizes:
        out.update(sizes)
    return out


def _chunks(n: int, parts: int):
    parts = max(1, min(parts, n))
    step, extra = divmod(n, parts)
    lo = 0
    for p in range(parts):
        hi = lo + step + (p < extra)
        yield lo, hi
        lo = hi


def check(
    law: Law,
    sizes: Optional[Dict[str, int]] = None,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    max_space: int = DEFAULT_MAX_SPACE,
) -> CheckReport:
    sizes = resolve_sizes(law, sizes)
    t0 = time.perf_counter()

    def report(outcome, mode_desc, checked=0, filtered=0, witness=None, sides=None, reason=None, values=None):
        return CheckReport(
            law.id, law.anchor, law.section, sizes, mode_desc, checked, filtered, outcome,
            law.expected, witness, sides, reason, (time.perf_counter() - t0) * 1000, values,
        )

    try:
        prog = _program(law, sizes)
    except rc.SizeBoundError as e:
        return report("SKIPPED", {"kind": mode}, reason=f"{e} at these sizes")

    if mode == "auto":
        mode = law.mode if law.mode != "auto" else "auto"
    if mode == "auto":
        nrel = sum(sp.is_relation for sp in prog.spaces)
        total = math.prod(sp.size for sp in prog.spaces)
        big = any(sp.size > VAR_CAP for sp in prog.spaces)
        mode = "sample" if (nrel >= 4 or total > max_space or big) else "exhaustive"

    if mode == "exhaustive":
        desc = {"kind": "exhaustive"}
        for sp in prog.spaces:
            if sp.size > VAR_CAP:
                return report("SKIPPED", desc, reason=f"{sp.sort} has {sp.size} values, above the per-variable cap")
        total = math.prod(sp.size for sp in prog.spaces)
        if total > max_space:
            return report("SKIPPED", desc, reason=f"{total} instances exceed the exhaustive cap {max_space}")
        n0 = prog.spaces[0].size if prog.spaces else 1
        parts = list(_chunks(n0, jobs)) if prog.spaces else [(0, 1)]
        tasks = [(law, sizes, lo, hi) for lo, hi in parts]
        results = _map(_run_chunk, tasks, jobs)
        checked = filtered = 0
        wit = None
        for status, c, f, w, err in results:
            checked += c
            filtered += f
            if status == "error":
                raise InstanceError(law.id, err, prog.describe(tuple(i or 0 for i in w)))
            if w is not None:
                wit = tuple(w)
                break
    elif mode == "sample":
        desc = {"kind": "sample", "n": samples, "seed": seed}
        rng = random.Random(seed)
        insts = [tuple(rng.randrange(sp.size) for sp in prog.spaces) for _ in range(samples)]
        batches = [insts[lo:hi] for lo, hi in _chunks(len(insts), jobs)]
        results = _map(_run_samples, [(law, sizes, b) for b in batches], jobs)
        checked = filtered = 0
        wit = None
        for status, c, f, w, err in results:
            if status == "error":
                raise InstanceError(law.id, err, prog.describe(w))
            checked += c
            filtered += f
            if w is not None and (wit is None or w < wit):
                wit = w
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if wit is not None:
        return report("FAIL", desc, checked, filtered, prog.describe(wit), prog.sides_at(wit),
                      values=prog.serialize(wit))
    if checked == 0:
        return report("VACUOUS", desc, checked, filtered)
    return report("PASS", desc, checked, filtered)


def _map(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks))
