"""Seeded test corpora. Every generator is deterministic in its seed."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from dimgrowth.factor import is_irreducible_over_Q
from dimgrowth.poly import BIHOM_VARS, BiHomPoly, MultiPoly, content_primitive, parse_poly, substitute


@dataclass(frozen=True)
class CurveCase:
    f: BiHomPoly
    B1: int
    B2: int
    tag: str


# hand-picked curves with many small points; B kept low where the count
# (and so M) gets large
STRUCTURED = [
    ("X*V - Y*U", 8, 8),
    ("X*V - Y*U", 3, 30),
    ("2*X*V - 3*Y*U", 12, 12),
    ("X*V + X*U - Y*U", 6, 6),
    ("X*V^2 - Y*U^2", 20, 20),
    ("X^2*V - Y^2*U", 20, 20),
    ("X*V^3 - Y*U^3", 30, 30),
    ("X^3*V - Y^3*U", 30, 30),
    ("X^2*V^2 - Y^2*U^2 + X*Y*U*V", 30, 30),
    ("U*Y^2 - V*X^2 - V*Y^2", 30, 30),
    ("U^2*Y^3 - X^3*V^2 - X^2*Y*V^2", 30, 30),
    ("U^2*Y^3 - X^3*V^2", 30, 30),
    ("X^2*U - 5*Y^2*V", 30, 30),
    ("X*U*V - Y*U^2 + Y*V^2", 15, 15),
    ("X^4*V^4 - Y^4*U^4 + X^2*Y^2*U^2*V^2", 30, 30),
    ("X^3*U^2 - Y^3*V^2", 30, 30),
]


def _random_bihom(rng, d1, d2, hmax, density):
    terms = {}
    for a in range(d1 + 1):
        for c in range(d2 + 1):
            if rng.random() < density:
                v = rng.randint(-hmax, hmax)
                if v:
                    terms[(a, d1 - a, c, d2 - c)] = v
    # keep both extreme X and U degrees present so the bidegree is exact
    if not any(e[0] == d1 for e in terms) or not any(e[1] == d1 for e in terms):
        return None
    if not any(e[2] == d2 for e in terms) or not any(e[3] == d2 for e in terms):
        return None
    return MultiPoly(BIHOM_VARS, terms)


def curve_corpus(seed: int = 2024, n_random: int = 100, Bmax: int = 30):
    """Structured curves plus ``n_random`` random primitive irreducible ones,
    bidegrees (1,1) to (4,4), heights <= 10^4."""
    rng = random.Random(seed)
    out = [CurveCase(BiHomPoly.parse(t), B1, B2, "structured") for t, B1, B2 in STRUCTURED]
    while len(out) < len(STRUCTURED) + n_random:
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        style = rng.random()
        if style < 0.5:
            f = _random_bihom(rng, d1, d2, 3, 0.5)
        elif style < 0.8:
            f = _random_bihom(rng, d1, d2, 50, 0.6)
        else:
            f = _random_bihom(rng, d1, d2, 10 ** 4, 0.8)
        if f is None:
            continue
        _, f = content_primitive(f)
        if not is_irreducible_over_Q(f):
            continue
        out.append(CurveCase(BiHomPoly(f, (d1, d2)), rng.randint(1, Bmax), rng.randint(1, Bmax), "random"))
    return out


# ---------------------------------------------------------------------------
# lifting families for determinant valuations


@dataclass(frozen=True)
class LiftCase:
    name: str
    p: int
    t0: int
    s: int


SMOOTH_FAMILIES = ["diagonal", "parabola", "cubic-graph", "conic-shift"]
SINGULAR_FAMILIES = {"node": 1, "cusp": 0}  # parameter values of the singular point


def lift_corpus(seed: int = 7, smax: int = 12):
    rng = random.Random(seed)
    out = []
    for p in (5, 7, 11):
        for name in SMOOTH_FAMILIES:
            t0 = rng.randrange(p)
            for s in range(1, smax + 1):
                out.append(LiftCase(name, p, t0, s))
        for name, t0 in SINGULAR_FAMILIES.items():
            for s in range(1, smax + 1):
                out.append(LiftCase(name, p, t0, s))
    return out


# ---------------------------------------------------------------------------
# rational functions F0/F1


def integral_values_corpus(seed: int = 44, n: int = 100, hmax: int = 9):
    """(F1, F0, d2, i) with coprime F0, F1 of degree <= d2 <= 4."""
    from dimgrowth.poly import resultant_hom
    from dimgrowth.surfaces import _homogenize_univariate

    rng = random.Random(seed)
    out = []
    while len(out) < n:
        d2 = rng.randint(1, 4)
        F1 = [rng.randint(-hmax, hmax) for _ in range(rng.randint(1, d2 + 1))]
        F0 = [rng.randint(-hmax, hmax) for _ in range(rng.randint(1, d2 + 1))]
        while F1 and F1[-1] == 0:
            F1.pop()
        while F0 and F0[-1] == 0:
            F0.pop()
        if not F1 or not F0 or max(len(F1), len(F0)) - 1 != d2:
            continue
        if math.gcd(*F1, *F0) != 1:
            continue
        if resultant_hom(_homogenize_univariate(F0, d2), _homogenize_univariate(F1, d2)) == 0:
            continue
        out.append((tuple(F1), tuple(F0), d2, rng.randint(1, 50)))
    return out


# ---------------------------------------------------------------------------
# affine curves f(x, t) with x integral and t rational


@dataclass(frozen=True)
class AffineCurveCase:
    f: MultiPoly
    B1: int
    B2: int
    tag: str


AFFINE_STRUCTURED = [
    ("x*t - 1", 30, 30),
    ("x^2 - t", 30, 30),
    ("x^2 - t^3", 30, 30),
    ("x^3 - t^2 + 1", 30, 30),
    ("x*t - 6", 3, 30),
    ("x^2*t - 2*t^2 + 3", 20, 20),
    ("x^2 + x*t - t^2 - 1", 30, 30),
]


def affine_curve_corpus(seed: int = 5, n_random: int = 60, Bmax: int = 30):
    """Structured curves plus random irreducible f(x, t) with degrees 1..3 in
    each variable, coefficients in [-9, 9] and f(0, t) != 0."""
    rng = random.Random(seed)
    xt = ("x", "t")
    out = [AffineCurveCase(parse_poly(t, xt), B1, B2, "structured") for t, B1, B2 in AFFINE_STRUCTURED]
    while len(out) < len(AFFINE_STRUCTURED) + n_random:
        dx, dt = rng.randint(1, 3), rng.randint(1, 3)
        terms = {}
        for a in range(dx + 1):
            for c in range(dt + 1):
                if rng.random() < 0.6:
                    v = rng.randint(-9, 9)
                    if v:
                        terms[(a, c)] = v
        f = MultiPoly(xt, terms)
        if f.degree(0) != dx or f.degree(1) != dt:
            continue
        if not any(e[0] == 0 for e in terms):
            continue
        _, f = content_primitive(f)
        if not is_irreducible_over_Q(f):
            continue
        out.append(AffineCurveCase(f, rng.randint(2, Bmax), rng.randint(2, Bmax), "random"))
    return out


# ---------------------------------------------------------------------------
# trivariate polynomials


XYZ = ("x", "y", "z")


def _random_dense(rng, deg, vars=XYZ, hmax=9):
    terms = {}
    n = len(vars)

    def exps(d, k):
        if k == 1:
            yield (d,)
            return
        for i in range(d + 1):
            for rest in exps(d - i, k - 1):
                yield (i,) + rest

    for d in range(deg + 1):
        for e in exps(d, n):
            v = rng.randint(-hmax, hmax)
            if v:
                terms[e] = v
    return MultiPoly(vars, terms)


def cylinder_corpus(seed: int = 10, n: int = 50):
    """f = g(l1, l2) with random small linear forms and random g of degree 2..4."""
    rng = random.Random(seed)
    X = MultiPoly.gens(XYZ)
    out = []
    while len(out) < n:
        l1 = [rng.randint(-3, 3) for _ in range(3)]
        l2 = [rng.randint(-3, 3) for _ in range(3)]
        # independent forms
        cross = (l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2], l1[0] * l2[1] - l1[1] * l2[0])
        if not any(cross):
            continue
        g = _random_dense(rng, rng.randint(2, 4), ("s", "t"), 5)
        if g.total_degree() < 2:
            continue
        L1 = sum((X[i] * l1[i] for i in range(3)), MultiPoly(XYZ))
        L2 = sum((X[i] * l2[i] for i in range(3)), MultiPoly(XYZ))
        f = substitute(g, {0: L1, 1: L2}, XYZ)
        if f.is_constant():
            continue
        out.append((f, tuple(l1), tuple(l2), g))
    return out


def dense_corpus(seed: int = 11, n: int = 200):
    """Random dense trivariate cubics and quartics."""
    rng = random.Random(seed)
    return [_random_dense(rng, 3 if k % 2 == 0 else 4) for k in range(n)]


# ---------------------------------------------------------------------------
# surfaces for exponent fits

SURFACES = {
    "fermat-cubic": "x^3 + y^3 + z^3 - 1",
    "quartic-a": "x^4 + y^4 - z^4 + x*y*z - 2",
    "quartic-b": "x^4 - y^3*z + z^2 - 3",
    "quartic-c": "x^3*y + y^3*z + z^3*x - 1",
}


def surface(name):
    return parse_poly(SURFACES[name], XYZ)
