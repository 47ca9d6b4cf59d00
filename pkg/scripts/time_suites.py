"""Time every registry section at its default sizes.

The three-variable associativity laws are left out unless --heavy is given.
"""

import argparse
import time
from dataclasses import dataclass

from mrl.lawcheck import engine, registry

HEAVY = {"peleg.weak-assoc", "peleg.assoc-univalent", "peleg.assoc-strict"}


@dataclass
class Config:
    heavy: bool = False
    jobs: int = 1
    slowest: int = 5


def run(cfg: Config):
    every = []
    for name in registry.SECTIONS:
        t0 = time.perf_counter()
        reports = [engine.check(l, jobs=cfg.jobs) for l in registry.section(name)
                   if cfg.heavy or l.id not in HEAVY]
        counts = {}
        for r in reports:
            counts[r.outcome] = counts.get(r.outcome, 0) + 1
        bad = sum(not r.matches for r in reports)
        print(f"{name:15} {len(reports):4} laws  {time.perf_counter() - t0:7.1f} s  {counts}  unexpected={bad}")
        every += reports
    print("slowest:")
    for r in sorted(every, key=lambda r: -r.ms)[:cfg.slowest]:
        print(f"  {r.law:45} {r.ms / 1000:6.1f} s  {r.checked} checked")
    return every


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    run(Config(a.heavy, a.jobs))
