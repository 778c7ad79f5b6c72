"""Exact moments against their closed forms over a grid of boxes.

    python scripts/moment_sweep.py --max 4
"""

import argparse
import itertools
import time
from dataclasses import dataclass

from hexamoment import stats


@dataclass
class SweepConfig:
    max_side: int = 4
    show_terms: bool = False


def run(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'a':>3}{'b':>3}{'c':>3}  {'horizontal':>12}  {'vertical':>12}  match")
    for dims in itertools.product(range(1, cfg.max_side + 1), repeat=3):
        rep = stats.moment_report(dims)
        ok &= rep.consistent
        line = f"{dims[0]:>3}{dims[1]:>3}{dims[2]:>3}  {str(rep.horizontal):>12}  {str(rep.vertical):>12}  {rep.consistent}"
        if cfg.show_terms:
            line += f"  rows={rep.row_term} cols={rep.column_term}"
        print(line)
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max", dest="max_side", type=int, default=4)
    p.add_argument("--terms", dest="show_terms", action="store_true")
    cfg = SweepConfig(**vars(p.parse_args()))
    t0 = time.perf_counter()
    ok = run(cfg)
    print(f"{'all consistent' if ok else 'MISMATCH'} in {time.perf_counter() - t0:.2f}s")
    raise SystemExit(0 if ok else 2)


if __name__ == "__main__":
    main()
