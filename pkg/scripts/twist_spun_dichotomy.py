"""Mirror obstruction for tau^2 T(2,q) over the odd primes up to a bound.

The obstruction fires exactly when the residue support S is not closed
under negation, which happens for q = 3 mod 4.
"""

import argparse

from qcocycle import corollary21_report, residue_support
from qcocycle.cocycle import _is_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=60)
    args = ap.parse_args()
    primes = [q for q in range(3, args.bound + 1) if _is_prime(q)]
    print(f"{'q':>4} {'q mod 4':>7} {'|S|':>4}  mirror obstructed")
    for q in primes:
        a, _ = corollary21_report(q)
        print(f"{q:4d} {q % 4:7d} {len(residue_support(q)):4d}  {a.obstructed}")
        assert a.obstructed == (q % 4 == 3)
    pairs = [(q, r) for q in primes for r in primes if q < r]
    both = sum(all(v.obstructed for v in corollary21_report(q, r)) for q, r in pairs)
    print(f"\ndistinct primes: obstructed both ways for {both}/{len(pairs)} pairs")


if __name__ == "__main__":
    main()
