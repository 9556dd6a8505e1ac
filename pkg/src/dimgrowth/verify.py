"""Property suites behind ``dimgrowth verify``.

Each suite draws a seeded corpus, checks one inequality or oracle equality
per case and stops at the first counterexample. Reports carry no timings so
that a rerun from (suite, seed, scale, version) is byte-identical.

``mutant=True`` injects a known bug (bounds scaled by MUTANT_FACTOR, the fast
route of an equality off by one) to exercise the failure path.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from dimgrowth import __version__
from dimgrowth.calibration import constant
from dimgrowth.corpus import SURFACES, curve_corpus, dense_corpus, integral_values_corpus, lift_corpus, surface
from dimgrowth.density import PrimeTable, mertens_sum, weil_bound, weil_count_mod_p
from dimgrowth.detmethod import aux_polynomial, build_lift_instance, det_valuation_check
from dimgrowth.factor import is_absolutely_irreducible_mod_p
from dimgrowth.pipeline import DegenerateSlice, slice_hyperplane
from dimgrowth.points import count_affine_brute, count_P1P1_brute, schwartz_zippel_bound
from dimgrowth.poly import MultiPoly, parse_poly
from dimgrowth.surfaces import (
    LineFamily,
    count_integral_values_direct,
    count_lines_union,
    directions_at_infinity,
    lines_with_direction,
    on_lines,
    resultant_divisor_sieve,
)

SCHEMA = "dimgrowth/1"
MUTANT_FACTOR = 0.01
SCALES = ("small", "full")

# canonical corpus seeds, used when no seed is given
DEFAULT_SEEDS = {
    "weil": 2024,
    "mertens": 0,
    "detval": 7,
    "schwartz": 11,
    "auxpoly": 2024,
    "lines": 0,
    "lemma44": 44,
    "slices": 3,
}


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    suite: str
    seed: int
    scale: str
    mutant: bool
    cases: int = 0
    counterexample: dict | None = None
    summary: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.counterexample is None

    def to_json(self):
        return {
            "schema": SCHEMA,
            "kind": "verify",
            "version": __version__,
            "suite": self.suite,
            "seed": self.seed,
            "scale": self.scale,
            "mutant": self.mutant,
            "pass": self.passed,
            "cases": self.cases,
            "summary": self.summary,
            "counterexample": self.counterexample,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _f(x):
    # floats go through repr, which is exact and platform independent
    return float(x)


# ---------------------------------------------------------------------------
# suites; each fills in the report


def _weil(rep: SuiteReport):
    full = rep.scale == "full"
    corpus = curve_corpus(seed=rep.seed, n_random=100 if full else 15)
    pmax = 31 if full else 13
    factor = MUTANT_FACTOR if rep.mutant else 1.0
    worst = 0.0
    for c in corpus:
        for p in PrimeTable(pmax).primes:
            if all(x % p == 0 for x in c.f.base.terms.values()):
                continue
            if not is_absolutely_irreducible_mod_p(c.f, p):
                continue
            rep.cases += 1
            _, nm = weil_count_mod_p(c.f, p)
            bound = weil_bound(*c.f.bidegree, p) * factor
            worst = max(worst, nm / bound)
            if nm > bound:
                rep.counterexample = {"f": str(c.f), "p": p, "n_mult": nm, "bound": _f(bound)}
                return
    rep.summary = {"max_ratio": _f(worst), "pmax": pmax}


def _mertens(rep: SuiteReport):
    top = 6 if rep.scale == "full" else 4
    tol = 2.0 * (MUTANT_FACTOR if rep.mutant else 1.0)
    worst = 0.0
    for k in range(2, top + 1):
        n = 10 ** k
        diff = abs(mertens_sum(n) - math.log(n))
        rep.cases += 1
        worst = max(worst, diff)
        if diff > tol:
            rep.counterexample = {"n": n, "diff": _f(diff), "tolerance": tol}
            return
    rep.summary = {"max_diff": _f(worst), "tolerance": tol}


def _detval(rep: SuiteReport):
    c = constant("detval_slack_c") * (MUTANT_FACTOR if rep.mutant else 1.0)
    smax = 12 if rep.scale == "full" else 6
    worst = None
    zero = 0
    for case in lift_corpus(seed=rep.seed, smax=smax):
        f, target, pts, mons = build_lift_instance(case.name, case.p, case.t0, case.s, node_split=case.name == "node")
        if mons is None:
            continue
        r = det_valuation_check(f, case.p, target, pts, mons)
        rep.cases += 1
        if r.e is None:
            zero += 1
            continue
        need = (r.ceil_lower - r.e) / r.s
        worst = need if worst is None else max(worst, need)
        if r.e < r.ceil_lower - c * r.s:
            rep.counterexample = {"family": case.name, "p": case.p, "t0": case.t0, "s": case.s, "mu": r.mu, "e": r.e, "lower": _f(r.lower), "c": c}
            return
    rep.summary = {"c": c, "max_needed_c": None if worst is None else _f(worst), "zero_determinants": zero}


def _schwartz(rep: SuiteReport):
    full = rep.scale == "full"
    polys = dense_corpus(seed=rep.seed, n=40 if full else 10) + [surface(n) for n in sorted(SURFACES)]
    B = 6 if full else 3
    factor = MUTANT_FACTOR if rep.mutant else 1.0
    worst = 0.0
    for f in polys:
        if f.is_constant():
            continue
        n, _ = count_affine_brute(f, B)
        bound = schwartz_zippel_bound(f.total_degree(), f.nvars - 1, B) * factor
        rep.cases += 1
        worst = max(worst, n / bound)
        if n > bound:
            rep.counterexample = {"f": str(f), "B": B, "count": n, "bound": _f(bound)}
            return
    rep.summary = {"B": B, "max_ratio": _f(worst)}


def _auxpoly(rep: SuiteReport):
    full = rep.scale == "full"
    corpus = curve_corpus(seed=rep.seed, n_random=100 if full else 12)
    if not full:
        corpus = [c for c in corpus if c.tag == "random"]
    factor = MUTANT_FACTOR if rep.mutant else 1.0
    Ms = []
    for c in corpus:
        n, pts = count_P1P1_brute(c.f, c.B1, c.B2)
        res = aux_polynomial(c.f, c.B1, c.B2, points=pts)
        rep.cases += 1
        cap = res.bezout_cap * factor
        Ms.append(res.M)
        ok = res.vanishes and not res.f_divides_g and n <= cap
        if not ok:
            rep.counterexample = {
                "f": str(c.f),
                "B1": c.B1,
                "B2": c.B2,
                "count": n,
                "M": res.M,
                "cap": _f(cap),
                "vanishes": res.vanishes,
                "f_divides_g": res.f_divides_g,
            }
            return
    rep.summary = {"max_M": max(Ms, default=0), "total_M": sum(Ms)}


def _lines(rep: SuiteReport):
    B = 50 if rep.scale == "full" else 15
    names = sorted(SURFACES) if rep.scale == "full" else ["fermat-cubic"]
    per = {}
    for name in names:
        f = surface(name)
        d = f.total_degree()
        for v in directions_at_infinity(f, 1):
            try:
                k = len(lines_with_direction(f, v, seed=rep.seed))
            except LineFamily:
                continue
            rep.cases += 1
            if k > d * d:
                rep.counterexample = {"surface": name, "direction": list(v), "lines": k, "bound": d * d}
                return
        r = count_lines_union(f, 1, B)
        _, pts = count_affine_brute(f, B, retain_points=True)
        restricted = sum(1 for pt in pts if on_lines(r.lines, pt))
        total = r.total + (1 if rep.mutant else 0)
        rep.cases += 1
        per[name] = {"lines": len(r.lines), "union": total, "brute_on_lines": restricted, "brute": len(pts)}
        if total != restricted:
            rep.counterexample = {"surface": name, "B": B, "union": total, "brute_on_lines": restricted}
            return
    rep.summary = {"B": B, "surfaces": per}


def _lemma44(rep: SuiteReport):
    n = 100 if rep.scale == "full" else 25
    for F1, F0, d2, i in integral_values_corpus(seed=rep.seed, n=n):
        direct = count_integral_values_direct(F1, F0, d2, i)
        sieve = resultant_divisor_sieve(F1, F0, d2, i) + (1 if rep.mutant else 0)
        rep.cases += 1
        if direct != sieve:
            rep.counterexample = {"F1": list(F1), "F0": list(F0), "d2": d2, "i": i, "direct": direct, "sieve": sieve}
            return
    rep.summary = {"pairs": n}


def _slices(rep: SuiteReport):
    import random

    full = rep.scale == "full"
    Bs = (10, 20) if full else (5,)
    xs = ("x", "y", "z", "w")
    cases = [(parse_poly("x^3 + y^3 + z^3 + w^3 - 1", xs), 3)]
    rng = random.Random(rep.seed)
    # random sparse cubics with one coordinate form each
    while len(cases) < (4 if full else 3):
        terms = {}
        for _ in range(6):
            e = [0, 0, 0, 0]
            for _ in range(rng.randint(1, 3)):
                e[rng.randrange(4)] += 1
            terms[tuple(e)] = rng.randint(-3, 3)
        f = MultiPoly(xs, terms)
        if f.total_degree() >= 2:
            cases.append((f, rng.randrange(4)))
    detail = []
    for f, j in cases:
        ell = tuple(int(k == j) for k in range(4))
        for B in Bs:
            whole, _ = count_affine_brute(f, B)
            parts = 0
            for b in range(-B, B + 1):
                try:
                    s = slice_hyperplane(f, ell, b)
                except DegenerateSlice:
                    # f constant on the slice: every box point or none
                    rest = [v for k, v in enumerate(f.vars) if k != j]
                    val = f.evaluate(tuple(b if k == j else 0 for k in range(4)))
                    parts += (2 * B + 1) ** len(rest) if val == 0 else 0
                    continue
                parts += count_affine_brute(s, B)[0]
            if rep.mutant:
                parts += 1
            rep.cases += 1
            detail.append({"f": str(f), "form": list(ell), "B": B, "count": whole})
            if parts != whole:
                rep.counterexample = {"f": str(f), "form": list(ell), "B": B, "whole": whole, "sum_of_slices": parts}
                return
    rep.summary = {"checks": detail}


SUITES = {
    "weil": _weil,
    "mertens": _mertens,
    "detval": _detval,
    "schwartz": _schwartz,
    "auxpoly": _auxpoly,
    "lines": _lines,
    "lemma44": _lemma44,
    "slices": _slices,
}


def run_suite(name: str, seed: int | None = None, scale: str = "small", mutant: bool = False) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}")
    rep = SuiteReport(name, DEFAULT_SEEDS[name] if seed is None else seed, scale, mutant)
    SUITES[name](rep)
    return rep
