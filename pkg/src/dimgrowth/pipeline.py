"""Induction steps for dimension growth: hyperplane slices, projections to
hypersurfaces, and exponent fits for counting experiments."""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from dimgrowth.factor import is_irreducible_over_Q
from dimgrowth.poly import MultiPoly, PolyError, canonical_primitive, from_sympy, substitute, to_sympy
from dimgrowth.surfaces import cylinder_test

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# exponent fits


@dataclass
class ExponentFit:
    slope: float
    intercept: float
    residual: float
    ladder: list
    counts: list

    def to_json(self):
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "ladder": self.ladder,
            "counts": self.counts,
        }


def fit_exponent(ladder, counts) -> ExponentFit:
    """Least-squares line through (log B, log N). Zero counts are dropped."""
    pts = [(B, N) for B, N in zip(ladder, counts) if N > 0]
    if len(pts) < len(ladder):
        log.warning("dropped %d ladder points with zero count", len(ladder) - len(pts))
    if len(pts) < 3:
        raise ValueError("need at least 3 ladder points with positive counts")
    x = np.log([float(B) for B, _ in pts])
    y = np.log([float(N) for _, N in pts])
    A = np.vstack([x, np.ones_like(x)]).T
    sol, res, _, _ = np.linalg.lstsq(A, y, rcond=None)
    resid = float(res[0]) if len(res) else 0.0
    return ExponentFit(float(sol[0]), float(sol[1]), resid, [B for B, _ in pts], [N for _, N in pts])


# ---------------------------------------------------------------------------
# hyperplane slices


class DegenerateSlice(PolyError):
    pass


def slice_hyperplane(f: MultiPoly, ell, b) -> MultiPoly:
    """f restricted to ell . x = b, in the variables other than the one solved for.

    The last variable with coefficient +-1 is solved for. Without one, the
    last variable with a nonzero coefficient is used and denominators are
    cleared by multiplying through by (c q)^deg f, where b = p/q.
    """
    ell = list(ell)
    if len(ell) != f.nvars or not any(ell):
        raise PolyError("linear form must be nonzero with one coefficient per variable")
    b = Fraction(b)
    units = [i for i, c in enumerate(ell) if abs(c) == 1]
    j = units[-1] if units else max(i for i, c in enumerate(ell) if c)
    rest = tuple(v for i, v in enumerate(f.vars) if i != j)
    gens = dict(zip([i for i in range(f.nvars) if i != j], MultiPoly.gens(rest)))
    cj = ell[j]
    scale = cj * b.denominator
    # x_j = lin / scale
    lin = MultiPoly.constant(rest, b.numerator)
    for i, g in gens.items():
        if ell[i]:
            lin = lin - g * (ell[i] * b.denominator)
    deg = f.total_degree()
    if abs(scale) == 1:
        images = dict(gens)
        images[j] = lin * scale  # scale = +-1
        out = substitute(f, images, rest)
    else:
        # f(x_j = lin / scale) * scale^deg
        acc = {}
        for e, c in f.terms.items():
            term = MultiPoly.constant(rest, c * scale ** (deg - e[j]))
            for i, k in enumerate(e):
                if k:
                    term = term * ((lin if i == j else gens[i]) ** k)
            for te, tc in term.terms.items():
                acc[te] = acc.get(te, 0) + tc
        out = MultiPoly(rest, acc)
    if out.is_constant():
        raise DegenerateSlice("f is constant on the slice")
    return out


@dataclass
class SliceCertificate:
    form: tuple
    bad: list  # (b, reason)
    trials: int
    seed: int
    tried: list = field(default_factory=list)  # per-form diagnostics

    def to_json(self):
        return {
            "form": list(self.form),
            "bad": [{"b": b, "reason": r} for b, r in self.bad],
            "trials": self.trials,
            "seed": self.seed,
            "tried": self.tried,
        }


def slice_verdict(s: MultiPoly):
    """None for a good slice, else the reason it is bad.

    Plane curves are cylinders over themselves, so the cylinder check only
    applies to slices in three or more variables.
    """
    if not is_irreducible_over_Q(s):
        return "reducible"
    if s.nvars >= 3 and cylinder_test(s) is not None:
        return "cylindrical"
    return None


def candidate_forms(n, rng, trials):
    """Coordinate forms (last variable first), then random forms with
    entries in [-2, 2]."""
    seen = set()
    for i in reversed(range(n)):
        v = tuple(int(k == i) for k in range(n))
        seen.add(v)
        yield v
    while True:
        v = tuple(rng.randint(-2, 2) for _ in range(n))
        if any(v) and v not in seen and math.gcd(*v) == 1:
            seen.add(v)
            yield v


def choose_good_linear_form(f: MultiPoly, trials: int = 10, B_b: int = 10, seed: int = 0, threshold=None):
    """A linear form whose slices ell = b, |b| <= B_b, are irreducible and not
    cylindrical, apart from at most ``threshold`` (default deg f) values of b."""
    if f.nvars < 3:
        raise PolyError("need at least 3 variables")
    if cylinder_test(f) is not None:
        raise PolyError("f is cylindrical over a curve")
    if not is_irreducible_over_Q(f):
        raise PolyError("f is reducible")
    if threshold is None:
        threshold = f.total_degree()
    rng = random.Random(seed)
    tried = []
    for k, ell in enumerate(candidate_forms(f.nvars, rng, trials)):
        if k >= trials:
            break
        bad = []
        for b in range(-B_b, B_b + 1):
            try:
                s = slice_hyperplane(f, ell, b)
            except DegenerateSlice:
                bad.append((b, "degenerate"))
                continue
            r = slice_verdict(s)
            if r:
                bad.append((b, r))
            if len(bad) > threshold:
                break
        tried.append({"form": list(ell), "bad": len(bad)})
        if len(bad) <= threshold:
            return SliceCertificate(ell, bad, k + 1, seed, tried)
    raise RuntimeError(f"no good linear form in {trials} trials: {tried}")


# ---------------------------------------------------------------------------
# projections


@dataclass
class ProjectionResult:
    poly: MultiPoly
    matrix: list
    retries: int
    degree: int

    def to_json(self):
        return {"poly": self.poly.to_json(), "matrix": self.matrix, "retries": self.retries, "degree": self.degree}


def _sym(names):
    import sympy

    return sympy.symbols(names)


def _squarefree_primitive(expr, ys):
    import sympy

    if expr == 0:
        return None
    p = sympy.Poly(sympy.sqf_part(sympy.expand(expr)), *ys)
    return canonical_primitive(from_sympy(p, tuple(str(y) for y in ys)))


def _implicit_param(qs, params, ys):
    """Defining polynomial of the image of params -> qs (m params, m + 1 images)."""
    import sympy

    m = len(params)
    eqs = [y - q for y, q in zip(ys, qs)]
    if m == 1:
        res = sympy.resultant(eqs[0], eqs[1], params[0])
        return _squarefree_primitive(res, ys)
    if m == 2:
        s, t = params
        r1 = sympy.resultant(eqs[0], eqs[1], t)
        r2 = sympy.resultant(eqs[0], eqs[2], t)
        res = sympy.resultant(r1, r2, s)
        if res == 0:
            return None
        # keep the factor vanishing on the parametrization
        _, facs = sympy.factor_list(res, *ys)
        sub = dict(zip(ys, qs))
        for fac, _ in facs:
            if sympy.expand(fac.subs(sub, simultaneous=True)) == 0:
                return canonical_primitive(from_sympy(sympy.Poly(fac, *ys), tuple(str(y) for y in ys)))
        return None
    raise PolyError("unsupported parametrization: more than two parameters")


def _random_matrix(rng, rows, cols):
    return [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]


def project_to_hypersurface(param=None, gens=None, m: int = 1, seed: int = 0, degree=None, max_retries: int = 50):
    """Defining polynomial of a random linear image of X in A^(m+1).

    X is given by a polynomial parametrization ``param`` (list of n MultiPoly in
    m shared parameters) or by generators ``gens`` (one polynomial: already a
    hypersurface; two polynomials in three variables: a space curve). A
    projection is accepted when the image has the expected degree (the
    largest degree seen when ``degree`` is None) and, for m >= 2, is not
    cylindrical.
    """
    import sympy

    rng = random.Random(seed)
    ys = _sym(" ".join(f"y{i}" for i in range(m + 1)))
    if m == 0:
        raise ValueError("m must be positive")
    if param is not None:
        n = len(param)
        pvars = param[0].vars
        params = _sym(" ".join(pvars)) if len(pvars) > 1 else (_sym(pvars[0]),)
        P = [to_sympy(p).as_expr() for p in param]
        if n < m + 1:
            raise PolyError("parametrization has too few coordinates")

        def image(M):
            qs = [sum(M[i][j] * P[j] for j in range(n)) for i in range(m + 1)]
            return _implicit_param(qs, params, ys)

    elif gens is not None:
        if len(gens) == 1:
            f = canonical_primitive(gens[0])
            if f.nvars != m + 1:
                raise PolyError("a single generator must define a hypersurface in A^(m+1)")
            return ProjectionResult(f, [[int(i == j) for j in range(f.nvars)] for i in range(f.nvars)], 0, f.total_degree())
        if len(gens) != 2 or gens[0].nvars != 3 or m != 1:
            raise PolyError("unsupported ideal shape")
        n = 3
        xs = _sym(" ".join(gens[0].vars))
        G = [to_sympy(g).as_expr() for g in gens]
        w = sympy.Symbol("w")

        def image(M):
            # complete M (2 x 3) to an invertible matrix, invert, eliminate w
            for k in range(3):
                T = sympy.Matrix(M + [[int(i == k) for i in range(3)]])
                if T.det() != 0:
                    break
            else:
                return None
            Ti = T.inv()
            sub = {xs[i]: sum(Ti[i, j] * v for j, v in enumerate([ys[0], ys[1], w])) for i in range(3)}
            a = sympy.together(sympy.expand(G[0].subs(sub, simultaneous=True)))
            b = sympy.together(sympy.expand(G[1].subs(sub, simultaneous=True)))
            a = sympy.numer(a)
            b = sympy.numer(b)
            return _squarefree_primitive(sympy.resultant(a, b, w), ys)

    else:
        raise ValueError("give param or gens")

    if n == m + 1:
        ident = [[int(i == j) for j in range(n)] for i in range(n)]
        img = image(ident)
        if img is None:
            raise PolyError("elimination produced nothing")
        return ProjectionResult(img, ident, 0, img.total_degree())

    target = degree
    if target is None:
        # the expected degree is the largest seen over a few projections
        probes = []
        while len(probes) < 3 and len(probes) < max_retries:
            M = _random_matrix(rng, m + 1, n)
            probes.append((M, image(M)))
        target = max((img.total_degree() for _, img in probes if img is not None), default=0)
    else:
        probes = []
    for attempt in range(max_retries):
        if attempt < len(probes):
            M, img = probes[attempt]
        else:
            M = _random_matrix(rng, m + 1, n)
            img = image(M)
        if img is None or img.is_constant() or img.total_degree() != target:
            continue
        if m >= 2 and cylinder_test(img) is not None:
            continue
        return ProjectionResult(img, M, attempt, target)
    raise RuntimeError("no admissible projection found")


# ---------------------------------------------------------------------------
# count reports


@dataclass
class CountReport:
    kind: str
    poly: dict
    dimension: int
    degree: int
    ladder: list
    counts: list
    bounds: list = field(default_factory=list)
    fit: dict | None = None
    meta: dict = field(default_factory=dict)
    timing: list = field(default_factory=list)

    def to_json(self, with_timing=False):
        out = {
            "kind": self.kind,
            "poly": self.poly,
            "dimension": self.dimension,
            "degree": self.degree,
            "ladder": self.ladder,
            "counts": self.counts,
            "bounds": self.bounds,
            "fit": self.fit,
            "meta": self.meta,
        }
        if with_timing:
            out["timing"] = self.timing
        return out
