"""Integral points on y = x^d: exact counts against 2 floor(B^(1/d)) + 1 and
the fitted exponent against 1/d.

    python3 scripts/monomial_graphs.py [--dmax 6] [--ladder 1000,10000,100000,1000000]
"""
import argparse
import json
import sys

from dimgrowth.pipeline import fit_exponent
from dimgrowth.points import count_affine_brute
from dimgrowth.poly import parse_poly


def iroot(B, d):
    k = int(round(B ** (1.0 / d)))
    while k ** d > B:
        k -= 1
    while (k + 1) ** d <= B:
        k += 1
    return k


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--ladder", default="1000,10000,100000,1000000")
    args = ap.parse_args(argv)
    ladder = [int(x) for x in args.ladder.split(",")]
    rows = []
    for d in range(2, args.dmax + 1):
        f = parse_poly(f"y - x^{d}", ("x", "y"))
        counts = [count_affine_brute(f, B)[0] for B in ladder]
        exact = all(n == 2 * iroot(B, d) + 1 for n, B in zip(counts, ladder))
        fit = fit_exponent(ladder, counts)
        rows.append({"d": d, "counts": counts, "exact": exact, "slope": fit.slope, "target": 1 / d})
        print(f"d={d}  counts={counts}  exact={exact}  slope={fit.slope:.4f}  1/d={1 / d:.4f}", file=sys.stderr)
    print(json.dumps(rows, indent=2))
    return 0 if all(r["exact"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
