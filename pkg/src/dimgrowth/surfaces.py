"""Affine surfaces in A^3: cylinders, lines, and integral points on them.

Also the two curve counts used to bound integral points on lines: the
inverse-height sum over an A^1 x P^1 curve and integrality of a rational
function at points of fixed height.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from dimgrowth.linalg import gauss_reduce, kernel, primitive_vector, unimodular_row_reduce
from dimgrowth.points import enumerate_p1, rational_roots, rational_roots_bounded
from dimgrowth.poly import (
    MultiPoly,
    PolyError,
    height_norm,
    resultant_hom,
    substitute,
    to_sympy,
    top_degree_part,
)

# ---------------------------------------------------------------------------
# cylinders


@dataclass
class CylinderWitness:
    directions: list  # integer basis of {v : v . grad f = 0}
    forms: list  # linear forms as integer coefficient lists
    g: MultiPoly  # f = g(forms)

    def to_json(self):
        return {"directions": self.directions, "forms": self.forms, "g": self.g.to_json()}


def annihilating_directions(f: MultiPoly):
    """Integer basis of the constant vector fields v with sum v_i df/dx_i = 0."""
    n = f.nvars
    parts = [f.partial(i) for i in range(n)]
    mons = sorted({e for d in parts for e in d.terms})
    rows = [[d.terms.get(m, 0) for d in parts] for m in mons]
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return kernel(rows, n)


def linear_form_poly(coeffs, vars):
    return MultiPoly(vars, {tuple(int(i == j) for j in range(len(vars))): c for i, c in enumerate(coeffs) if c})


def cylinder_test(f: MultiPoly, gvars=("s", "t")):
    """CylinderWitness when f = g(l1, l2) for linear forms l1, l2, else None.

    The forms are a basis of the integer forms vanishing on every
    annihilating direction; g is recovered by evaluating f on a dual basis
    and the identity f = g(l1, l2) is checked by substitution.
    """
    if f.is_constant():
        raise PolyError("cylinder_test needs a nonconstant polynomial")
    n = f.nvars
    dirs = annihilating_directions(f)
    k = len(dirs)
    if n - k > 2:
        return None
    if k == 0:
        # only for n <= 2, where every curve is a cylinder over itself
        W, r = [[int(i == j) for j in range(n)] for i in range(n)], 0
    else:
        W, _, r = unimodular_row_reduce(dirs, n)
    forms = [W[i] for i in range(r, n)]
    if len(forms) == 2:
        a, b = gauss_reduce(forms[0], forms[1])
        forms = sorted([primitive_vector(a), primitive_vector(b)], reverse=True)
    elif len(forms) == 1:
        forms = [primitive_vector(forms[0])]
    g = _recover_g(f, forms, gvars[: len(forms)])
    if g is None:
        raise ArithmeticError("cylinder reconstruction failed")
    return CylinderWitness([list(d) for d in dirs], forms, g)


def _recover_g(f, forms, gvars):
    """g with f = g(forms), for forms spanning the annihilator of the directions."""
    n = f.nvars
    # row-reduce the forms as columns: W A = [H; 0] means the first m rows of
    # W pair with the forms through the unimodular H^T, so a dual basis is
    # integral (the forms span a saturated lattice)
    W, _, _ = unimodular_row_reduce([list(c) for c in forms], n)
    m = len(forms)
    cols = [W[j] for j in range(m)]
    Fm = [[sum(a * b for a, b in zip(forms[i], cols[j])) for j in range(m)] for i in range(m)]
    det = Fm[0][0] if m == 1 else Fm[0][0] * Fm[1][1] - Fm[0][1] * Fm[1][0]
    if det == 0:
        return None
    if m == 1:
        inv = [[Fraction(1, det)]]
    else:
        inv = [[Fraction(Fm[1][1], det), Fraction(-Fm[0][1], det)], [Fraction(-Fm[1][0], det), Fraction(Fm[0][0], det)]]
    # a_j = sum_k cols_k inv[k][j]
    duals = [[sum(cols[k][i] * inv[k][j] for k in range(m)) for i in range(n)] for j in range(m)]
    S = MultiPoly.gens(gvars)
    den = 1
    for a in duals:
        for x in a:
            den = den * x.denominator // math.gcd(den, x.denominator)
    if den != 1:
        return None  # forms are saturated, so the dual basis is integral
    images = {}
    for i in range(n):
        acc = MultiPoly(gvars)
        for j in range(m):
            acc = acc + S[j] * int(duals[j][i])
        images[i] = acc
    g = substitute(f, images, gvars)
    back = substitute(g, {j: linear_form_poly(forms[j], f.vars) for j in range(m)}, f.vars)
    return g if back == f else None


def is_cylindrical(f: MultiPoly) -> bool:
    return cylinder_test(f) is not None


# ---------------------------------------------------------------------------
# directions and lines


def canonical_direction(v):
    v = primitive_vector(list(v))
    return tuple(v)


def _primitive_triples(H, n=3):
    out = set()
    for v in product(range(-H, H + 1), repeat=n):
        if any(v) and math.gcd(*v) == 1:
            out.add(canonical_direction(v))
    return out


def directions_at_infinity(f: MultiPoly, Hmax: int):
    """Primitive integer directions (up to sign) of height <= Hmax on the
    zero set of the top-degree part of f. Sorted by height, then descending
    lexicographic order."""
    fd = top_degree_part(f)
    out = [v for v in _primitive_triples(Hmax, f.nvars) if fd.evaluate(v) == 0]
    out.sort(key=lambda v: (max(map(abs, v)), tuple(-x for x in v)))
    return out


@dataclass(frozen=True)
class Line3:
    base: tuple  # rational point; integral when the line has integral points
    direction: tuple  # primitive integer vector
    integral: bool = True

    def point(self, t):
        return tuple(a + t * v for a, v in zip(self.base, self.direction))

    def to_json(self, B=None):
        out = {"base": [str(x) if isinstance(x, Fraction) else x for x in self.base], "dir": list(self.direction)}
        if B is not None:
            out["points_in_box"] = integral_points_on_line(self, B)
        return out


class LineFamily(Exception):
    """Raised when a direction carries a positive-dimensional family of lines."""


def _line_restriction(f: MultiPoly, v, basis):
    """Coefficients g_i(s1, s2) of f(s1 w1 + s2 w2 + t v) in powers of t."""
    vars3 = ("s1", "s2", "t")
    s1, s2, t = MultiPoly.gens(vars3)
    w1, w2 = basis
    images = {i: s1 * w1[i] + s2 * w2[i] + t * v[i] for i in range(3)}
    h = substitute(f, images, vars3)
    coll = h.collect(2)
    out = []
    for k in sorted(coll):
        out.append(MultiPoly(("s1", "s2"), {e[:2]: c for e, c in coll[k].terms.items()}))
    return out


def _common_rational_zeros(polys, seed=0):
    """Rational common zeros of bivariate integer polynomials, or raise
    LineFamily when they share a curve."""
    import sympy

    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise LineFamily("every base point works")
    if any(p.is_constant() for p in polys):
        return []
    s1, s2 = sympy.symbols("s1 s2")
    sp = [to_sympy(p).as_expr() for p in polys]
    g = sp[0]
    for q in sp[1:]:
        g = sympy.gcd(g, q)
    if sympy.Poly(g, s1, s2).total_degree() > 0:
        raise LineFamily("base points form a curve")
    rng = random.Random(seed)
    if len(sp) == 1:
        raise LineFamily("base points form a curve")
    res = None
    for _ in range(20):
        a = sum(rng.randint(-5, 5) * q for q in sp)
        b = sum(rng.randint(-5, 5) * q for q in sp)
        a = sympy.expand(a)
        b = sympy.expand(b)
        if a == 0 or b == 0:
            continue
        if sympy.Poly(a, s1, s2).degree(s2) == 0 and sympy.Poly(b, s1, s2).degree(s2) == 0:
            r = sympy.gcd(a, b)
        else:
            r = sympy.resultant(a, b, s2)
        if r != 0:
            res = sympy.Poly(r, s1)
            break
    if res is None:
        raise LineFamily("elimination failed to separate the base points")
    cands1 = rational_roots([int(c) for c in reversed(res.all_coeffs())]) if res.degree() > 0 else []
    out = []
    for r1 in sorted(set(cands1)):
        uni = None
        for q in sp:
            qq = sympy.Poly(sympy.expand(q.subs(s1, sympy.Rational(r1.numerator, r1.denominator))), s2)
            uni = qq if uni is None else sympy.Poly(sympy.gcd(uni.as_expr(), qq.as_expr()), s2)
        if uni is None or uni.is_zero:
            raise LineFamily("base points form a curve")
        if uni.degree() <= 0:
            continue
        coeffs = uni.all_coeffs()
        den = 1
        for c in coeffs:
            den = sympy.ilcm(den, sympy.Rational(c).q)
        ints = [int(c * den) for c in reversed(coeffs)]
        for r2 in sorted(set(rational_roots(ints))):
            out.append((r1, r2))
    return out


def _solve_congruences(cs, vs, D):
    """u with v_i u = c_i (mod D) for all i, as (r, m) meaning u = r mod m, or None."""
    r, m = 0, 1
    for c, v in zip(cs, vs):
        # solutions of v u = c mod D
        g = math.gcd(v, D)
        if c % g:
            return None
        mod = D // g
        u0 = (c // g) * pow(v // g, -1, mod) % mod if mod > 1 else 0
        # combine u = r mod m with u = u0 mod mod
        g2 = math.gcd(m, mod)
        if (u0 - r) % g2:
            return None
        l = m // g2 * mod
        k = ((u0 - r) // g2) * pow(m // g2, -1, mod // g2) % (mod // g2) if mod // g2 > 1 else 0
        r = (r + m * k) % l
        m = l
    return r, m


def _integral_base(a, v):
    """Integral point on a + t v nearest to a, or None."""
    D = 1
    for x in a:
        D = D * x.denominator // math.gcd(D, x.denominator)
    if D == 1:
        return tuple(int(x) for x in a)
    # t = u / D with D a_i + u v_i = 0 mod D
    sol = _solve_congruences([(-x * D).numerator % D for x in a], [vi % D for vi in v], D)
    if sol is None:
        return None
    u = sol[0]
    t = Fraction(u, D)
    t -= round(t)
    pt = tuple(x + t * vi for x, vi in zip(a, v))
    if any(Fraction(x).denominator != 1 for x in pt):
        return None
    return tuple(int(x) for x in pt)


def lines_with_direction(f: MultiPoly, v, seed=0):
    """Rational lines a + t v contained in f = 0.

    Base points are normalized into the plane a . v = 0, solved for by
    resultants, and moved to the nearest integral point when there is one.
    Raises LineFamily for a positive-dimensional family.
    """
    if f.nvars != 3:
        raise PolyError("lines_with_direction works in A^3")
    v = tuple(v)
    if not any(v):
        raise ValueError("direction must be nonzero")
    if math.gcd(*v) != 1:
        raise ValueError("direction must be primitive")
    W, _, _ = unimodular_row_reduce([list(v)], 3)
    w1, w2 = gauss_reduce(W[1], W[2])
    # w1, w2 span the integer plane orthogonal to v; a rational base point in
    # that plane is s1 w1 + s2 w2 with rational s
    gs = _line_restriction(f, v, (w1, w2))
    sols = _common_rational_zeros(gs, seed)
    lines = []
    for s1, s2 in sols:
        a = tuple(Fraction(s1) * w1[i] + Fraction(s2) * w2[i] for i in range(3))
        base = _integral_base(a, v)
        if base is None:
            lines.append(Line3(a, v, False))
        else:
            lines.append(Line3(base, v, True))
    return lines


def integral_points_on_line(L: Line3, B: int) -> int:
    """Number of integers t with a + t v in [-B, B]^3."""
    v = L.direction
    if math.gcd(*v) != 1:
        raise ValueError("direction is not primitive")
    if not L.integral:
        return 0
    lo, hi = -math.inf, math.inf
    for a, vi in zip(L.base, v):
        if vi == 0:
            if abs(a) > B:
                return 0
            continue
        e1, e2 = Fraction(-B - a, vi), Fraction(B - a, vi)
        if e1 > e2:
            e1, e2 = e2, e1
        lo = max(lo, math.ceil(e1))
        hi = min(hi, math.floor(e2))
    return max(0, int(hi) - int(lo) + 1)


def line_intersection(L1: Line3, L2: Line3):
    """The common point of two distinct lines, or None."""
    a, v = L1.base, L1.direction
    b, w = L2.base, L2.direction
    # a + s v = b + t w: least-squares-free exact solve on two independent rows
    rows = [(v[i], -w[i], b[i] - a[i]) for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            if det:
                s = Fraction(rows[i][2] * rows[j][1] - rows[i][1] * rows[j][2], det)
                p = tuple(Fraction(x) + s * y for x, y in zip(a, v))
                q_ok = any(
                    w[k] and all(p[m] == b[m] + Fraction(p[k] - b[k], w[k]) * w[m] for m in range(3))
                    for k in range(3)
                )
                return p if q_ok else None
    return None


@dataclass
class LinesUnionReport:
    total: int
    lines: list
    per_line: list
    overlaps: dict = field(default_factory=dict)
    directions: list = field(default_factory=list)

    def to_json(self):
        return {
            "total": self.total,
            "lines": [dict(L.to_json(), points_in_box=n) for L, n in zip(self.lines, self.per_line)],
            "overlaps": [{"point": list(p), "lines": k} for p, k in sorted(self.overlaps.items())],
            "directions": [list(v) for v in self.directions],
        }


def count_lines_union(f: MultiPoly, Hmax: int, B: int, check=True) -> LinesUnionReport:
    """Integral points in [-B, B]^3 on the union of rational lines of f = 0
    whose direction has height <= min(Hmax, 2B).

    Two distinct lines meet in at most one point, so the union count is the
    sum of per-line counts minus (k - 1) for each point on k lines.
    """
    if check and is_cylindrical(f):
        raise PolyError("f is cylindrical over a curve")
    dirs = directions_at_infinity(f, min(Hmax, 2 * B))
    lines = []
    for v in dirs:
        lines.extend(L for L in lines_with_direction(f, v) if L.integral)
    per = [integral_points_on_line(L, B) for L in lines]
    hits = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = line_intersection(lines[i], lines[j])
            if p is None or any(Fraction(x).denominator != 1 or abs(x) > B for x in p):
                continue
            key = tuple(int(x) for x in p)
            hits.setdefault(key, set()).update((i, j))
    total = sum(per) - sum(len(s) - 1 for s in hits.values())
    return LinesUnionReport(total, lines, per, {p: len(s) for p, s in hits.items()}, dirs)


def on_lines(lines, pt):
    for L in lines:
        d = [x - a for x, a in zip(pt, L.base)]
        v = L.direction
        # d parallel to v
        if all(d[i] * v[j] == d[j] * v[i] for i in range(3) for j in range(i + 1, 3)):
            return True
    return False


# ---------------------------------------------------------------------------
# lattices


@dataclass
class Lattice2Basis:
    v2: tuple
    v3: tuple
    det: float

    def norms(self):
        return math.sqrt(sum(x * x for x in self.v2)), math.sqrt(sum(x * x for x in self.v3))


def _sign_canonical(v):
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def shortest_basis_plane(a: int, b: int, c: int) -> Lattice2Basis:
    """Gauss-reduced basis of {(x, y, z) in Z^3 : a x + b y + c z = 0}."""
    if (a, b, c) == (0, 0, 0):
        raise ValueError("normal vector must be nonzero")
    if math.gcd(a, b, c) != 1:
        raise ValueError("normal vector must be primitive")
    W, _, _ = unimodular_row_reduce([[a, b, c]], 3)
    u, w = gauss_reduce(W[1], W[2])
    u, w = _sign_canonical(u), _sign_canonical(w)
    uu = sum(x * x for x in u)
    uw = sum(x * y for x, y in zip(u, w))
    if uw > 0 and 2 * uw == uu:
        # tie: w - u is just as short; prefer the obtuse pair
        w = _sign_canonical(tuple(y - x for x, y in zip(u, w)))
    return Lattice2Basis(tuple(u), tuple(w), math.sqrt(a * a + b * b + c * c))


# ---------------------------------------------------------------------------
# inverse-height sums and integrality of rational functions


def _fiber_coeffs_t(F: MultiPoly, x):
    """Coefficients (low to high) of F(x, T) in T."""
    by_t = F.collect(1)
    d = max(by_t)
    return [by_t[k].evaluate((x, 0)) if k in by_t else 0 for k in range(d + 1)]


def inverse_height_sum(F: MultiPoly, B: int) -> Fraction:
    """Exact sum of 1/H(t) over (x, t) in Z x Q with |x| <= B and F(x, t) = 0."""
    if F.nvars != 2 or F.degree(0) < 1 or F.degree(1) < 1:
        raise PolyError("need F(x, t) with degrees >= 1 in both variables")
    total = Fraction(0)
    for x in range(-B, B + 1):
        c = _fiber_coeffs_t(F, x)
        if not any(c):
            raise PolyError(f"F vanishes on the whole fiber x = {x}")
        for t in set(rational_roots(c)):
            total += Fraction(1, max(abs(t.numerator), t.denominator))
    return total


def inverse_height_bound(F: MultiPoly, B: int, C: float, eps: float = 0.25) -> float:
    return C * (height_norm(F) * B) ** eps


def _homogenize_univariate(c, d):
    """Binary form of degree d from coefficients c (low to high) in T: sum c_k T^k S^(d-k)."""
    if len(c) - 1 > d:
        raise PolyError("declared degree too small")
    return MultiPoly(("T", "S"), {(k, d - k): ck for k, ck in enumerate(c) if ck})


def _eval_form(c, d, t, s):
    return sum(ck * t ** k * s ** (d - k) for k, ck in enumerate(c))


def _height_exactly(i):
    """Coprime (t, s), s >= 1, with max(|t|, s) = i."""
    for P in enumerate_p1(i):
        if max(abs(P.x), abs(P.y)) == i and P.y != 0:
            yield P.x, P.y


def count_integral_values_direct(F1, F0, d2: int, i: int) -> int:
    """t of height exactly i with F1(t) != 0 and F0(t) / F1(t) in Z."""
    n = 0
    for t, s in _height_exactly(i):
        q = Fraction(t, s)
        v1 = sum(Fraction(c) * q ** k for k, c in enumerate(F1))
        if v1 == 0:
            continue
        v0 = sum(Fraction(c) * q ** k for k, c in enumerate(F0))
        if (v0 / v1).denominator == 1:
            n += 1
    return n


def _int_roots_in(c, lo, hi):
    """Integer roots of sum c_k T^k in [lo, hi]; None when c is identically 0."""
    while c and c[-1] == 0:
        c = c[:-1]
    if not c:
        return None
    if len(c) == 1:
        return []
    B = max(abs(lo), abs(hi), 1)
    return [int(r) for r in rational_roots_bounded(c, B) if r.denominator == 1 and lo <= r <= hi]


def resultant_divisor_sieve(F1, F0, d2: int, i: int):
    """Same count as ``count_integral_values_direct``, found by solving
    F1(t, s) = +-delta over divisors delta of R i^d2 (R the resultant of the
    degree-d2 homogenizations)."""
    from sympy import divisors

    A = _homogenize_univariate(F1, d2)
    C = _homogenize_univariate(F0, d2)
    R = resultant_hom(C, A)
    if R == 0:
        raise PolyError("F0 and F1 share a factor: F is reducible")
    N = abs(R) * i ** d2
    # |F1(t, s)| is bounded on the box, which trims the divisor list
    cap = sum(abs(x) for x in F1) * i ** d2
    found = set()
    for delta in divisors(N):
        if delta > cap:
            break
        for val in (delta, -delta):
            # denominator s = i, numerator |t| < i (or t in {-1, 0, 1} when i = 1)
            c = [ck * i ** (d2 - k) for k, ck in enumerate(F1)]
            c[0] -= val
            rts = _int_roots_in(c, -i, i)
            if rts is None:
                rts = range(-i, i + 1)
            for t in rts:
                if math.gcd(t, i) == 1 and (abs(t) < i or i == 1):
                    found.add((t, i))
            if i == 1:
                continue
            # |t| = i, denominator s in [1, i - 1]
            for t in (i, -i):
                c = [0] * (d2 + 1)
                for k, ck in enumerate(F1):
                    c[d2 - k] += ck * t ** k  # coefficient of s^(d2-k)
                c[0] -= val
                rts = _int_roots_in(c, 1, i - 1)
                if rts is None:
                    rts = range(1, i)
                for s in rts:
                    if math.gcd(t, s) == 1:
                        found.add((t, s))
    n = 0
    for t, s in found:
        v1 = _eval_form(F1, d2, t, s)
        if v1 and _eval_form(F0, d2, t, s) % v1 == 0:
            n += 1
    return n


def count_integral_values(F1, F0, d2: int, i: int) -> int:
    """Number of t of height exactly i with F0(t)/F1(t) integral, computed by
    direct enumeration and by the resultant-divisor sieve, which must agree."""
    if i < 1:
        raise ValueError("height must be positive")
    a = count_integral_values_direct(F1, F0, d2, i)
    b = resultant_divisor_sieve(F1, F0, d2, i)
    if a != b:
        raise ArithmeticError(f"integral value counts disagree: direct {a}, sieve {b}")
    return a


# ---------------------------------------------------------------------------
# integer roots over fibers of bounded height


def _xlogx_ratio(x):
    """log x / log log x for x > e^e, else 0."""
    if x <= math.exp(math.e):
        return 0.0
    return math.log(x) / math.log(math.log(x))


def walkowiak_E(F: MultiPoly, i: int) -> int:
    d1, d2 = F.degree(0), F.degree(1)
    return math.floor(d1 * d2 * _xlogx_ratio(height_norm(F)) * _xlogx_ratio(i)) + 1


def walkowiak_shift(F: MultiPoly, E: int) -> MultiPoly:
    """G(X, T) = F(X + T^E, T)."""
    X, T = MultiPoly.gens(F.vars)
    return substitute(F, {0: X + T ** E}, F.vars)


def _integer_roots(c):
    """Integer roots of the integer polynomial sum c_k X^k (nonzero)."""
    from sympy import divisors

    while c and c[-1] == 0:
        c = c[:-1]
    if len(c) <= 1:
        return []
    out = []
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        out.append(0)
    c = c[k:]
    if len(c) == 1:
        return out
    # Cauchy bound trims the divisor scan
    bound = 1 + max(abs(Fraction(x, c[-1])) for x in c[:-1])
    for dv in divisors(abs(c[0])):
        if dv > bound:
            break
        for r in (dv, -dv):
            acc = 0
            for x in reversed(c):
                acc = acc * r + x
            if acc == 0:
                out.append(r)
    return out


@dataclass
class WalkowiakReport:
    count: int
    bound: float
    E: int
    G: MultiPoly

    def to_json(self):
        return {"count": self.count, "bound": self.bound, "E": self.E, "G": self.G.to_json()}


def count_t_with_integer_root(F: MultiPoly, i: int) -> int:
    """t in Q with H(t) <= i such that F(X, t) has a root in Z."""
    by_x = F.collect(0)
    d1 = max(by_x)
    cols = [by_x.get(k) for k in range(d1 + 1)]
    n = 0
    d2 = F.degree(1)
    for P in enumerate_p1(i):
        if P.y == 0:
            continue
        t, s = P.x, P.y
        # s^d2 F(X, t/s) has integer coefficients
        c = []
        for cp in cols:
            if cp is None:
                c.append(0)
                continue
            c.append(sum(coef * t ** e[1] * s ** (d2 - e[1]) for e, coef in cp.terms.items()))
        if not any(c):
            n += 1
            continue
        if _integer_roots(c):
            n += 1
    return n


def walkowiak_bound_check(F: MultiPoly, i: int, C: float | None = None) -> WalkowiakReport:
    """Count of t with H(t) <= i giving an integer root of F(X, t), against
    C |d|^(21/2) i log(i) log||F|| (logs floored at 1)."""
    d1, d2 = F.degree(0), F.degree(1)
    if d1 < 2:
        raise PolyError("need degree at least 2 in x")
    if C is None:
        from dimgrowth.calibration import constant

        C = constant("walkowiak_C")
    count = count_t_with_integer_root(F, i)
    ad = d1 * d2
    bound = C * ad ** 10.5 * i * max(math.log(i), 1.0) * max(math.log(height_norm(F)), 1.0)
    E = walkowiak_E(F, i)
    return WalkowiakReport(count, bound, E, walkowiak_shift(F, E))
