"""Associativity of Peleg composition at |X|=|Y|=|Z|=|W|=2.

Runs the weak (inclusion) law over all 256^3 triples, the strict equality
(expected to fail, prints the least witness) and the equality with a
univalent third factor.  The full weak sweep takes a few minutes on one core;
pass --sample N to draw N triples instead.
"""

import argparse
from dataclasses import dataclass

from mrl.lawcheck import engine, registry

LAWS = ["peleg.assoc-strict", "peleg.assoc-univalent", "peleg.weak-assoc"]


@dataclass
class Config:
    sample: int = 0
    seed: int = engine.DEFAULT_SEED
    jobs: int = 1


def run(cfg: Config):
    out = {}
    for law_id in LAWS:
        law = registry.get(law_id)
        if cfg.sample and law_id == "peleg.weak-assoc":
            r = engine.check(law, mode="sample", samples=cfg.sample, seed=cfg.seed, jobs=cfg.jobs)
        else:
            r = engine.check(law, mode="exhaustive", jobs=cfg.jobs)
        print(r.line(), f"  {r.ms / 1000:.1f} s")
        out[law_id] = r
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--sample", type=int, default=0)
    ap.add_argument("--seed", type=int, default=engine.DEFAULT_SEED)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    run(Config(a.sample, a.seed, a.jobs))
