"""Sweep all cyclic covers over small cuts and report lift multiplicities.

For each connected cover the script records the largest multiplicity with
which a base curve lifts. A value of 1 everywhere would mean the lifted
multitwists generate the whole group upstairs.

    python3 scripts/lift_sweep.py --names A4 A5 D4 --max-degree 4 --cut-size 2
"""

import argparse
import itertools
from collections import Counter

from multitwist.catalog import catalog
from multitwist.covers import CoverError, build_cover, cyclic_cover_from_cut, lift_data


def main():
    ap = argparse.ArgumentParser(description="lift multiplicity sweep")
    ap.add_argument("--names", nargs="+", default=["A4", "A5", "D4"])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--cut-size", type=int, default=2)
    args = ap.parse_args()
    for name in args.names:
        base = catalog(name)
        tally, disconnected = Counter(), 0
        gl = range(len(base.gluings))
        for size in range(1, args.cut_size + 1):
            for cut in itertools.combinations(gl, size):
                for n in range(2, args.max_degree + 1):
                    try:
                        spec = cyclic_cover_from_cut(base, cut, n)
                    except CoverError:
                        disconnected += 1
                        continue
                    cover = build_cover(base, spec, allow_branching=True)
                    tally[lift_data(base, cover).max_multiplicity] += 1
        print(f"{name}: max multiplicity histogram {dict(sorted(tally.items()))}, "
              f"{disconnected} disconnected covers skipped")


if __name__ == "__main__":
    main()
