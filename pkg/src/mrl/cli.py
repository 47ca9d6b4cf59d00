"""``mrl`` command line: expression evaluation and law sweeps.

Exit codes: 0 success (every law matched its expected status), 1 a law
violated its expected status, 2 usage or input error.
"""

from __future__ import annotations

import json
import sys
from typing import Dict, List, Optional

import click

from . import relcore as rc
from . import terms as T
from .lawcheck import engine, registry


class InputError(click.ClickException):
    exit_code = 2


def _parse_sizes(items) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for item in items:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            name, eq, val = part.partition("=")
            if not eq or not name.strip() or not val.strip().isdigit():
                raise InputError(f"bad size {part!r}; expected NAME=INT")
            name = name.strip()
            if name in out and out[name] != int(val):
                raise InputError(f"universe {name} declared twice with different sizes")
            out[name] = int(val)
    return out


def load_env(universes: Dict[str, int], env_file: Optional[str], lets) -> T.Env:
    """Universes from the command line and the environment file must agree."""
    sizes = dict(universes)
    data = {}
    if env_file:
        try:
            with open(env_file) as fh:
                data = json.load(fh)
        except (OSError, ValueError) as e:
            raise InputError(f"cannot read environment {env_file}: {e}")
        for name, size in (data.get("universes") or {}).items():
            if name in sizes and sizes[name] != size:
                raise InputError(f"universe {name}: size {sizes[name]} on the command line, {size} in {env_file}")
            sizes[name] = size
    env = T.Env.from_sizes(sizes)
    known = dict(env.universes)
    bindings = {}
    for name, value in (data.get("bindings") or {}).items():
        try:
            bindings[name] = rc.from_json(value, known)
        except (KeyError, TypeError, ValueError, rc.RelError) as e:
            raise InputError(f"binding {name}: {e}")
    if set(known) != set(env.universes):
        extra = sorted(set(known) - set(env.universes))
        raise InputError(f"binding uses undeclared universe(s) {', '.join(extra)}")
    env = env.with_bindings(bindings)
    for item in lets:
        name, eq, text = item.partition("=")
        if not eq:
            raise InputError(f"bad --let {item!r}; expected NAME=EXPR")
        env = env.with_bindings({name.strip(): T.evaluate(text, env)})
    return env


def _emit(reports: List[engine.CheckReport], as_json: bool, timings: bool) -> int:
    bad = [r for r in reports if not r.matches]
    if as_json:
        doc = {
            "reports": [r.to_json(timings=timings) for r in reports],
            "summary": {
                "laws": len(reports),
                "unexpected": [r.law for r in bad],
                "outcomes": {o: sum(r.outcome == o for r in reports) for o in ("PASS", "FAIL", "VACUOUS", "SKIPPED")},
            },
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        for r in reports:
            line = r.line()
            if timings:
                line += f"  {r.ms:.0f} ms"
            click.echo(line)
        click.echo(f"{len(reports)} laws, {len(bad)} unexpected")
    return 1 if bad else 0


def _sweep(laws, sizes, mode, samples, seed, jobs, max_space) -> List[engine.CheckReport]:
    out = []
    for law in laws:
        try:
            out.append(engine.check(law, sizes or None, mode=mode, samples=samples, seed=seed, jobs=jobs,
                                    max_space=max_space))
        except engine.InstanceError as e:
            raise InputError(str(e))
    return out


def sweep_options(f):
    opts = [
        click.option("--size", "size", multiple=True, help="Universe sizes, e.g. X=2,Y=2."),
        click.option("--mode", type=click.Choice(["auto", "exhaustive", "sample"]), default="auto"),
        click.option("--samples", type=click.IntRange(1), default=engine.DEFAULT_SAMPLES),
        click.option("--seed", type=int, default=engine.DEFAULT_SEED),
        click.option("--jobs", type=click.IntRange(1), default=1),
        click.option("--max-space", type=click.IntRange(1), default=engine.DEFAULT_MAX_SPACE),
        click.option("--json", "as_json", is_flag=True),
        click.option("--timings", is_flag=True, help="Include wall-clock times (makes JSON non-reproducible)."),
    ]
    for o in reversed(opts):
        f = o(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Finite relations, multirelations and their modal operators."""


@main.command("eval")
@click.argument("expr")
@click.option("--universe", "-u", multiple=True, help="Declare a universe, e.g. X=2.")
@click.option("--env", "env_file", type=click.Path(dir_okay=False), help="JSON file with universes and bindings.")
@click.option("--let", "lets", multiple=True, help="Bind NAME=EXPR before evaluating.")
@click.option("--json", "as_json", is_flag=True)
def eval_cmd(expr, universe, env_file, lets, as_json):
    """Evaluate EXPR and print the result."""
    try:
        env = load_env(_parse_sizes(universe), env_file, lets)
        v = T.evaluate(expr, env)
    except (T.ParseError, T.EvalError, rc.RelError) as e:
        raise InputError(str(e))
    if as_json:
        doc = {"value": v} if isinstance(v, bool) else {"value": rc.to_json(v), "text": T.render(v)}
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(T.render(v))


@main.command()
@click.argument("target")
@sweep_options
def check(target, size, mode, samples, seed, jobs, max_space, as_json, timings):
    """Sweep TARGET: a law id, 'all', or 'section:NAME'."""
    try:
        laws = registry.select(target)
    except KeyError as e:
        raise InputError(e.args[0])
    reports = _sweep(laws, _parse_sizes(size), mode, samples, seed, jobs, max_space)
    sys.exit(_emit(reports, as_json, timings))


@main.command()
@sweep_options
def goldblatt(size, mode, samples, seed, jobs, max_space, as_json, timings):
    """The sixteen concurrent dynamic logic axioms and the repaired composition laws."""
    reports = _sweep(registry.section("goldblatt"), _parse_sizes(size), mode, samples, seed, jobs, max_space)
    sys.exit(_emit(reports, as_json, timings))


@main.command()
@sweep_options
def basis(size, mode, samples, seed, jobs, max_space, as_json, timings):
    """Derived definitions against the direct implementations."""
    reports = _sweep(registry.section("basis"), _parse_sizes(size), mode, samples, seed, jobs, max_space)
    sys.exit(_emit(reports, as_json, timings))


@main.command()
@click.option("--list", "as_list", is_flag=True, default=True, help="List registered laws (default).")
@click.option("--section", "section_name", default=None)
@click.option("--json", "as_json", is_flag=True)
def laws(as_list, section_name, as_json):
    """List registered laws."""
    try:
        items = registry.section(section_name) if section_name else registry.LAWS
    except KeyError as e:
        raise InputError(e.args[0])
    if as_json:
        click.echo(json.dumps([
            {"id": l.id, "section": l.section, "anchor": l.anchor, "variables": [list(v) for v in l.variables],
             "claim": l.claim, "side": list(l.side), "expected": l.expected, "sizes": dict(l.sizes)}
            for l in items
        ], indent=2))
        return
    for l in items:
        side = f"  if {', '.join(l.side)}" if l.side else ""
        click.echo(f"{l.id:45} {l.expected:5} {l.claim}{side}")


if __name__ == "__main__":
    main()
