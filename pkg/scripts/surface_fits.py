"""Exponent fits for integral points on the fixed surfaces, with the share
of points lying on rational lines.

For the Fermat cubic the lines carry 6B + O(1) points, so the fitted slope
approaches 1 from below; the quartics have a handful of points in all boxes.

    python3 scripts/surface_fits.py [--ladder 50,100,200,400] [--H 1]
"""
import argparse
import json
import sys
import time

from dimgrowth.corpus import SURFACES, surface
from dimgrowth.pipeline import fit_exponent
from dimgrowth.points import count_affine_brute
from dimgrowth.surfaces import count_lines_union


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ladder", default="50,100,200,400")
    ap.add_argument("--H", type=int, default=1, help="height of line directions")
    ap.add_argument("--only", help="one surface name")
    args = ap.parse_args(argv)
    ladder = [int(x) for x in args.ladder.split(",")]
    names = [args.only] if args.only else sorted(SURFACES)
    out = []
    for name in names:
        f = surface(name)
        t = time.time()
        counts = [count_affine_brute(f, B)[0] for B in ladder]
        on_lines = [count_lines_union(f, args.H, B).total for B in ladder]
        fit = fit_exponent(ladder, counts)
        off = [n - m for n, m in zip(counts, on_lines)]
        print(f"{name:13s} N={counts} lines={on_lines} slope={fit.slope:.4f} ({time.time() - t:.1f}s)", file=sys.stderr)
        out.append({"surface": SURFACES[name], "ladder": ladder, "counts": counts, "on_lines": on_lines, "off_lines": off, "fit": fit.to_json()})
    print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
