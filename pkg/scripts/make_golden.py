"""Regenerate the golden verify reports in tests/golden.

Only rerun after an intended change to a suite; the test suite compares
fresh runs against these files byte for byte.
"""
import sys
from pathlib import Path

from dimgrowth.verify import SUITES, run_suite

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

# (suite, seed) pairs; None is the suite's canonical corpus seed
RUNS = [(name, None) for name in SUITES] + [("auxpoly", 7)]


def golden_name(suite, seed):
    return f"verify_{suite}_small.json" if seed is None else f"verify_{suite}_seed{seed}_small.json"


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for suite, seed in RUNS:
        rep = run_suite(suite, seed=seed, scale="small")
        (GOLDEN / golden_name(suite, seed)).write_text(rep.dumps())
        print(f"{suite:10s} seed={rep.seed} pass={rep.passed} cases={rep.cases}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
