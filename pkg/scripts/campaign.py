"""Run every fuzz suite over every ring and print a trials/failures table.

    python3 scripts/campaign.py --trials 200 --dims 1..5 --seed 0 --jobs 4
"""

import argparse
import sys
import time

from cayley.cli import SUITES, FuzzConfig, parse_dims, run_fuzz
from cayley.rings import parse_ring

DEFAULT_RINGS = "Z,Q,Zmod4,Zmod6,Zmod97,DualZ,Poly1Zmod6"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rings", default=DEFAULT_RINGS)
    ap.add_argument("--dims", default="1..4")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)

    rings = tuple(parse_ring(r) for r in args.rings.split(","))
    config = FuzzConfig(rings=rings, dims=parse_dims(args.dims), trials=args.trials, seed=args.seed)
    start = time.perf_counter()
    report = run_fuzz(config, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    cells = {}
    for r in report.results:
        t, f = cells.get((r.suite, r.ring.token), (0, 0))
        cells[r.suite, r.ring.token] = (t + r.trials, f + len(r.failures))
    tokens = [d.token for d in rings]
    width = max(12, *(len(t) + 2 for t in tokens))
    print("suite".ljust(11) + "".join(t.rjust(width) for t in tokens))
    for suite in SUITES:
        row = []
        for tok in tokens:
            t, f = cells[suite, tok]
            row.append(f"{t - f}/{t}".rjust(width))
        print(suite.ljust(11) + "".join(row))
    print(f"\n{len(report.results)} cells in {elapsed:.1f}s, verdict={'pass' if report.passed else 'fail'}")
    for r in report.results:
        for line in r.failures:
            print(line)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
