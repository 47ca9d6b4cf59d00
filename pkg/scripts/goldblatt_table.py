"""Sweep the sixteen axioms and the repaired composition laws, print a table.

    python3 scripts/goldblatt_table.py --sizes X=2,Y=2,Z=2 --json out.json
"""

import argparse
import json
from dataclasses import dataclass, field

from mrl import cdl
from mrl.lawcheck import engine, registry


@dataclass
class Config:
    sizes: dict = field(default_factory=lambda: {"X": 2, "Y": 2, "Z": 2})
    mode: str = "exhaustive"
    jobs: int = 1
    out: str = ""


def run(cfg: Config):
    rows = []
    for ax in list(cdl.AXIOMS) + list(cdl.EXTRA):
        r = engine.check(registry.get(ax.name), cfg.sizes, mode=cfg.mode, jobs=cfg.jobs)
        rows.append(r)
        wit = ", ".join(f"{k} = {v}" for k, v in (r.witness or {}).items())
        print(f"{ax.id:12} {ax.name:26} {r.outcome:7} {r.checked:>9} {r.ms / 1000:7.2f}s  {wit}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump([r.to_json(timings=True) for r in rows], fh, indent=2)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="X=2,Y=2,Z=2")
    ap.add_argument("--mode", default="exhaustive")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", default="")
    a = ap.parse_args()
    sizes = {k: int(v) for k, v in (p.split("=") for p in a.sizes.split(","))}
    run(Config(sizes, a.mode, a.jobs, a.json))
