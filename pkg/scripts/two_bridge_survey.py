"""For dihedral quandles R_p, evaluate every (or a random sample of) 2-cocycle
in Z^2(R_p; Z_p) on a few 2-bridge knots and report the supports seen."""

import argparse
import random

from qcocycle import enumerate_2cocycles, make_dihedral, phi_invariant, torus_braid
from qcocycle.diagram import FIGURE_EIGHT, parse_braid

KNOTS = {
    "T(2,3)": torus_braid(3),
    "T(2,5)": torus_braid(5),
    "T(2,7)": torus_braid(7),
    "T(2,9)": torus_braid(9),
    "4_1": FIGURE_EIGHT,
    "5_2": parse_braid("3: s1^3 s2 s1^-1 s2"),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--cap", type=int, default=10_000)
    ap.add_argument("--samples", type=int, default=500, help="used when the count exceeds --cap")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for p in args.primes:
        X = make_dihedral(p)
        space = enumerate_2cocycles(X, p)
        if space.count <= args.cap:
            cocycles = list(space.iter_cocycles(cap=args.cap))
            how = "all"
        else:
            gens = space.solutions.generators
            cocycles = [
                space.to_cocycle(space.solutions.combine([rng.randrange(g.order) for g in gens]))
                for _ in range(args.samples)
            ]
            how = f"{args.samples} sampled"
        print(f"R{p}: {space.count} cocycles ({how})")
        for name, K in KNOTS.items():
            if not K.is_knot():
                continue
            supports = {frozenset(phi_invariant(K, X, c).support) for c in cocycles}
            print(f"  {name:7s} supports: {sorted(sorted(s) for s in supports)}")


if __name__ == "__main__":
    main()
