"""Recompute the Q6 / Z_4 tables: T(2,l) and S(m,n) multisets, coloring
splits, and the sigma^r T(2,l) vs sigma^s S(m,n) obstruction grid."""

import argparse
import itertools

from qcocycle import (
    corollary43_report,
    enumerate_colorings,
    make_q6,
    phi_invariant,
    q6_appendix_cocycle,
    s_knot_braid,
    torus_braid,
    verify_2cocycle,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=21, help="largest l, m, n (3 mod 6)")
    args = ap.parse_args()
    X, phi = make_q6(), q6_appendix_cocycle()
    print("cocycle check:", verify_2cocycle(phi))
    values = [v for v in range(3, args.max + 1) if v % 6 == 3]

    print("\nT(2,l)")
    for l in values:
        n_col = len(enumerate_colorings(torus_braid(l), X))
        print(f"  l={l:2d}  colorings={n_col}  Phi={phi_invariant(torus_braid(l), X, phi)}")

    print("\nS(m,n)")
    for m, n in itertools.product(values, repeat=2):
        K = s_knot_braid(m, n)
        print(f"  ({m:2d},{n:2d})  colorings={len(enumerate_colorings(K, X))}  "
              f"Phi={phi_invariant(K, X, phi)}")

    print("\nsigma^r T(2,l) >= sigma^s S(m,n)?")
    total = obstructed = 0
    for l, m, n in itertools.product(values, repeat=3):
        for r, s in itertools.product((0, 4, 8), repeat=2):
            v = corollary43_report(l, m, n, r, s)
            total += 1
            obstructed += v.obstructed
    print(f"  obstructed in {obstructed}/{total} cases")


if __name__ == "__main__":
    main()
