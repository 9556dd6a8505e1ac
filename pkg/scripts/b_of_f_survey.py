"""b(f) over the seeded curve corpus, next to the frozen upper bound.

    python3 scripts/b_of_f_survey.py [--cap 2000] [--n 20]
"""
import argparse
import sys

from dimgrowth.calibration import constant
from dimgrowth.corpus import curve_corpus
from dimgrowth.density import check_b_upper


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=2000)
    ap.add_argument("--n", type=int, default=20, help="random curves on top of the structured ones")
    args = ap.parse_args(argv)
    C = constant("b_upper_C")
    worst = 0.0
    for c in curve_corpus(n_random=args.n):
        ok, b, bound = check_b_upper(c.f, C=C, cap=args.cap)
        worst = max(worst, b / bound)
        print(f"{str(c.f.base)[:50]:50s} d={c.f.bidegree} b={b:.4f} bound={bound:.4f} {'ok' if ok else 'VIOLATION'}")
    print(f"largest b / bound: {worst:.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
