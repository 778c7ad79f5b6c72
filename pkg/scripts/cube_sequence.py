"""Vertical moment of the regular hexagon a = b = c = n.

The exact DP value is printed next to 7n^4/6 - n^2/6.
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from hexamoment import stats


@dataclass
class CubeConfig:
    max_n: int = 6


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=6)
    cfg = CubeConfig(**vars(p.parse_args()))
    bad = 0
    for n in range(1, cfg.max_n + 1):
        got = stats.vertical_moment((n, n, n))
        want = Fraction(7 * n**4 - n**2, 6)
        bad += got != want
        print(f"n={n}  dp={got}  formula={want}")
    raise SystemExit(2 if bad else 0)


if __name__ == "__main__":
    main()
