"""Annealing search for one-a-curve, one-b-curve configurations with given prongs.

The a-curve visits squares 0..n-1 eastward; the search permutes the order in
which the b-curve visits the squares and, unless a translation surface is
required, which squares it crosses southward. The score is the size of the
symmetric difference between the vertex prong multiset and the target.

    python3 scripts/search_catalog.py --squares 12 --prongs 4:6 --translation
    python3 scripts/search_catalog.py --squares 15 --prongs 4:5,5:2
"""

import argparse
import math
import random
from collections import Counter
from dataclasses import dataclass

from multitwist.catalog import ribbon_pair


@dataclass
class SearchConfig:
    squares: int
    prongs: dict[int, int]  # full multiset, 2-prong vertices included
    translation: bool = False
    steps: int = 200_000
    seeds: int = 20
    start_temperature: float = 2.0
    cooling: float = 0.9995


def mismatch(border, dirs, target: Counter) -> int:
    c = ribbon_pair(border, dirs)
    if not c.is_valid():
        return 10 ** 6
    have = Counter(len(o) // 2 for o in c.vertices)
    return sum(((have - target) + (target - have)).values())


def anneal(cfg: SearchConfig, seed: int):
    rng = random.Random(seed)
    n, target = cfg.squares, Counter(cfg.prongs)
    border = [0] + rng.sample(range(1, n), n - 1)
    dirs = [1] * n if cfg.translation else [1] + [rng.choice((1, -1)) for _ in range(n - 1)]
    cur, temp = mismatch(border, dirs, target), cfg.start_temperature
    for _ in range(cfg.steps):
        if cur == 0:
            return border, dirs
        b2, d2 = border[:], dirs[:]
        if cfg.translation or rng.random() < 0.6:
            i, j = rng.sample(range(1, n), 2)
            b2[i], b2[j] = b2[j], b2[i]
        else:
            i = rng.randrange(1, n)
            d2[i] = -d2[i]
        s = mismatch(b2, d2, target)
        if s <= cur or rng.random() < math.exp((cur - s) / temp):
            border, dirs, cur = b2, d2, s
        temp = max(0.05, temp * cfg.cooling)
    return None


def parse_prongs(text: str) -> dict[int, int]:
    out = {}
    for item in text.split(","):
        k, m = item.split(":")
        out[int(k)] = int(m)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--squares", type=int, required=True)
    ap.add_argument("--prongs", type=parse_prongs, required=True, help="e.g. 4:5,5:2")
    ap.add_argument("--translation", action="store_true")
    ap.add_argument("--steps", type=int, default=200_000)
    ap.add_argument("--seeds", type=int, default=20)
    args = ap.parse_args()
    cfg = SearchConfig(args.squares, args.prongs, args.translation, args.steps, args.seeds)
    for seed in range(cfg.seeds):
        found = anneal(cfg, seed)
        if found:
            print(f"seed {seed}: border={found[0]} dirs={found[1]}")
            return
    print("no configuration found")


if __name__ == "__main__":
    main()
