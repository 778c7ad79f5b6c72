"""Empirical frequencies of the exact sampler against the uniform law.

Prints each plane partition's count with its z-score, and the chi-square
statistic over all of them.
"""

import argparse
import math
from collections import Counter
from dataclasses import dataclass

from hexamoment import engine


@dataclass
class HistConfig:
    a: int = 2
    b: int = 2
    c: int = 2
    draws: int = 20_000
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for side in ("a", "b", "c"):
        p.add_argument(f"-{side}", type=int, default=2)
    p.add_argument("--draws", type=int, default=20_000)
    p.add_argument("--seed", type=int, default=0)
    cfg = HistConfig(**vars(p.parse_args()))
    dims = (cfg.a, cfg.b, cfg.c)
    n = engine.count_box(dims)
    if n > 500:
        raise SystemExit(f"{n} outcomes is too many to tabulate")
    hits = Counter(engine.sample_uniform(dims, cfg.seed, stream=k) for k in range(cfg.draws))
    mean = cfg.draws / n
    sd = math.sqrt(cfg.draws * (1 / n) * (1 - 1 / n))
    chi2 = 0.0
    worst = 0.0
    for pp in engine.enumerate_box(dims):
        v = hits[pp]
        z = (v - mean) / sd
        worst = max(worst, abs(z))
        chi2 += (v - mean) ** 2 / mean
        print(f"{pp.to_lists()}  {v:>7}  z={z:+.2f}")
    print(f"outcomes={n} draws={cfg.draws} chi2={chi2:.1f} (df={n - 1}) max|z|={worst:.2f}")


if __name__ == "__main__":
    main()
