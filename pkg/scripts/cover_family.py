"""Cyclic covers of the golden staircase over its two-gluing cut.

Prints, for each degree, the upstairs N^T N, its characteristic polynomial,
the lifted multitwists, and the expansion factors of A B upstairs and of its
image downstairs.

    python3 scripts/cover_family.py --max-degree 6
"""

import argparse

from multitwist.algebra import charpoly
from multitwist.catalog import catalog
from multitwist.covers import build_cover, cyclic_cover_from_cut, lift_multitwists
from multitwist.flat import build_flat, cogram
from multitwist.twist import TwistWord, expansion_factor


def main():
    ap = argparse.ArgumentParser(description="cyclic cover family of A4")
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--cut", default="3,5")
    args = ap.parse_args()
    base = catalog("A4")
    cut = [int(x) for x in args.cut.split(",")]
    mu = build_flat(base).mu
    w = TwistWord.parse("A B")
    for n in range(2, args.max_degree + 1):
        spec = cyclic_cover_from_cut(base, cut, n)
        cover = build_cover(base, spec)
        lifts = lift_multitwists(base, spec)
        hom = lifts.homomorphism()
        M = cogram(cover.incidence)
        print(f"n={n}: N^T N={M}  charpoly={charpoly(M).pretty()}  "
              f"A->{hom['a']['image']} B->{hom['b']['image']}")
        if lifts.uniform:
            image = w.substitute(*lifts.exponents)
            up = expansion_factor(w, build_flat(cover).mu)
            down = expansion_factor(image, mu)
            print(f"      lambda(A B) upstairs = lambda({image}) downstairs: {up.value == down.value}"
                  f"  minpoly {up.minpoly.pretty()}")


if __name__ == "__main__":
    main()
