"""Determinant-method engine for curves in P^1 x P^1.

Auxiliary polynomials are built directly: a form of bidegree dM that vanishes
on the counted points and is not a multiple of f exists iff the evaluation
matrix restricted to the standard monomials (those not divisible by the
leading monomial of f) has a nontrivial kernel. Those monomials span a
complement of f * B[d(M-1)], so any kernel vector gives g with f not dividing
g. There are |B[dM]| - |B[d(M-1)]| = 2|d|(M-1) + |d| + d1 + d2 of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from dimgrowth.linalg import det_bareiss, echelon, kernel_flint, maximal_minor_gcd, padic_valuation, rank_mod_p
from dimgrowth.points import BiProjPoint, ProjPoint, count_A1P1_brute, count_P1P1_brute
from dimgrowth.poly import (
    BIHOM_VARS,
    BiHomPoly,
    MultiPoly,
    PolyError,
    content_primitive,
    divides,
    height_norm,
    substitute,
)

# ---------------------------------------------------------------------------
# monomials


@dataclass(frozen=True)
class MonomialBasis:
    D: tuple
    monomials: tuple

    def __len__(self):
        return len(self.monomials)


def monomial_basis(D1: int, D2: int) -> MonomialBasis:
    """Bihomogeneous monomials X^a Y^b U^c V^e of bidegree (D1, D2), in
    descending lex order of exponents (X^D1 U^D2 first)."""
    if D1 < 0 or D2 < 0:
        raise ValueError("bidegree must be non-negative")
    mons = [(a, D1 - a, c, D2 - c) for a in range(D1, -1, -1) for c in range(D2, -1, -1)]
    return MonomialBasis((D1, D2), tuple(mons))


def eval_monomial(m, pt):
    x, y, u, v = pt
    a, b, c, d = m
    return x ** a * y ** b * u ** c * v ** d


@dataclass
class EvalMatrix:
    points: list
    basis: tuple
    rows: list


def eval_matrix(points, monomials) -> EvalMatrix:
    pts = [P.coords() if isinstance(P, BiProjPoint) else tuple(P) for P in points]
    rows = [[eval_monomial(m, pt) for m in monomials] for pt in pts]
    return EvalMatrix(pts, tuple(monomials), rows)


def leading_monomial(f: MultiPoly):
    return max(f.terms)


def standard_monomials(f: BiHomPoly, D1: int, D2: int):
    """Monomials of bidegree (D1, D2) not divisible by the lex-leading
    monomial of f."""
    lm = leading_monomial(f.base)
    return [m for m in monomial_basis(D1, D2).monomials if not all(a >= b for a, b in zip(m, lm))]


# ---------------------------------------------------------------------------
# leading-coefficient shear


def shear_height_factor(d1, d2):
    """Upper bound for ||f'|| / ||f|| under a shear with |a| <= d1, |b| <= d2."""
    return d1 ** d1 * d2 ** d2 * (d1 + 1) * (d2 + 1)


def shear(f: BiHomPoly, a: int, b: int) -> BiHomPoly:
    """f(X, Y + aX, U, V + bU)."""
    X, Y, U, V = MultiPoly.gens(BIHOM_VARS)
    g = substitute(f.base.with_vars(BIHOM_VARS), {1: Y + X * a, 3: V + U * b}, BIHOM_VARS)
    return BiHomPoly(g.with_vars(f.base.vars), f.bidegree)


def normalize_leading_coeff(f: BiHomPoly):
    """Find a shear (a, b), |a| <= d1, |b| <= d2, with |f(1,a,1,b)| >= ||f|| / 3^(d1+d2).

    The identity is preferred, then shears ordered by |a| + |b|, |a|, and
    non-negative entries first. Returns (f', (a, b)).
    """
    d1, d2 = f.bidegree
    h = height_norm(f.base)
    cands = [(a, b) for a in range(-d1, d1 + 1) for b in range(-d2, d2 + 1)]
    cands.sort(key=lambda ab: (abs(ab[0]) + abs(ab[1]), abs(ab[0]), ab[0] < 0, ab[1] < 0))
    for a, b in cands:
        val = f(1, a, 1, b)
        if abs(val) * 3 ** (d1 + d2) >= h:
            g = f if (a, b) == (0, 0) else shear(f, a, b)
            return g, (a, b)
    raise ArithmeticError("no admissible shear found; the polynomial violates the search guarantee")


# ---------------------------------------------------------------------------
# auxiliary polynomial


class AuxPolyError(RuntimeError):
    def __init__(self, msg, profile):
        super().__init__(msg)
        self.profile = profile


@dataclass
class AuxPolyResult:
    f: BiHomPoly
    g: BiHomPoly
    M: int
    points_checked: int
    vanishes: bool
    f_divides_g: bool
    bezout_cap: int
    rank: int
    s_formula: int
    columns: int
    profile: list = field(default_factory=list)

    def to_json(self):
        return {
            "f": self.f.base.to_json(),
            "g": self.g.base.to_json(),
            "M": self.M,
            "bezout_cap": self.bezout_cap,
            "certificates": {
                "points_checked": self.points_checked,
                "vanishes": self.vanishes,
                "division_remainder_zero": self.f_divides_g,
            },
            "rank": self.rank,
            "s_formula": self.s_formula,
            "columns": self.columns,
            "profile": self.profile,
        }


def bezout_cap(d1: int, d2: int, M: int) -> int:
    """Intersection number of bidegrees (d1, d2) and (d1 M, d2 M) on P^1 x P^1."""
    return 2 * d1 * d2 * M


def s_formula(d1, d2, M):
    """Row count 2|d|(M-1) + d1 + d2 as usually quoted; see quotient_dim."""
    return 2 * d1 * d2 * (M - 1) + d1 + d2


def quotient_dim(d1, d2, M):
    """dim B[dM] - dim B[d(M-1)], the number of standard monomials."""
    return (d1 * M + 1) * (d2 * M + 1) - (d1 * (M - 1) + 1) * (d2 * (M - 1) + 1)


def default_M_max(f: BiHomPoly, B1, B2):
    d1, d2 = f.bidegree
    return 8 * math.ceil(math.sqrt(d1 * d2) * B1 ** (1 / d2) * B2 ** (1 / d1))


_RANK_PRIME = 2147483629  # largest prime below 2^31


def _standard_matrix(f, pts, M):
    d1, d2 = f.bidegree
    cols = standard_monomials(f, d1 * M, d2 * M)
    return cols, [[eval_monomial(m, pt) for m in cols] for pt in pts]


def aux_polynomial(f: BiHomPoly, B1: int, B2: int, M_max: int | None = None, points=None, check_irreducible=True):
    """Smallest M <= M_max admitting g of bidegree (d1 M, d2 M), vanishing on
    every point of V(f) of biheight <= (B1, B2), with f not dividing g.

    Existence is monotone in M (multiply g by a monomial, which f cannot
    divide), so M is found by bisection: a full rank mod p at M rules out
    every M' <= M, and the exact kernel is only computed at the answer.
    """
    from dimgrowth.factor import is_irreducible_over_Q

    d1, d2 = f.bidegree
    if d1 < 1 or d2 < 1:
        raise PolyError("aux_polynomial needs d1, d2 >= 1")
    c, _ = content_primitive(f.base)
    if c != 1:
        raise PolyError("f must be primitive")
    if check_irreducible and not is_irreducible_over_Q(f.base):
        raise PolyError("f must be irreducible over Q")
    if M_max is None:
        M_max = default_M_max(f, B1, B2)
    if points is None:
        _, points = count_P1P1_brute(f, B1, B2, retain=True)
    pts = [P.coords() if isinstance(P, BiProjPoint) else tuple(P) for P in points]
    profile = {}

    def full_rank_mod_p(M):
        cols, rows = _standard_matrix(f, pts, M)
        r = rank_mod_p(rows, _RANK_PRIME)
        profile[M] = {"M": M, "columns": len(cols), "rank_mod_p": r}
        return r == len(cols)

    # more columns than points: a kernel exists for sure
    hi = 1
    while hi < M_max and quotient_dim(d1, d2, hi) <= len(pts):
        hi += 1
    lo = 0  # every M <= lo is ruled out
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if full_rank_mod_p(mid):
            lo = mid
        else:
            hi = mid
    for M in range(lo + 1, M_max + 1):
        cols, rows = _standard_matrix(f, pts, M)
        ker = kernel_flint(rows, len(cols))
        entry = profile.setdefault(M, {"M": M, "columns": len(cols)})
        entry["rank"] = len(cols) - len(ker)
        if not ker:
            continue  # the prime was unlucky at this M
        terms = {m: cf for m, cf in zip(cols, ker[0]) if cf}
        _, g = content_primitive(MultiPoly(f.base.vars, terms))
        vanish = all(g.evaluate(pt) == 0 for pt in pts)
        fdiv = divides(f.base, g)
        if not vanish or fdiv:
            raise ArithmeticError("auxiliary polynomial failed its certificate")
        prof = [profile[k] for k in sorted(profile)]
        return AuxPolyResult(
            f, BiHomPoly(g, (d1 * M, d2 * M)), M, len(pts), vanish, fdiv,
            bezout_cap(d1, d2, M), entry["rank"], s_formula(d1, d2, M), len(cols), prof,
        )
    raise AuxPolyError(f"no auxiliary polynomial with M <= {M_max}", [profile[k] for k in sorted(profile)])


# ---------------------------------------------------------------------------
# p-adic valuation of determinants


@dataclass
class DetValuationReport:
    p: int
    mu: int
    s: int
    e: int | None  # None: determinant is zero (infinite valuation)
    lower: float  # s^2 / (2 mu)
    target: tuple = ()

    @property
    def ceil_lower(self):
        return math.ceil(self.lower)

    def slack(self):
        """Smallest c with e >= s^2/(2 mu) - c s."""
        if self.e is None:
            return None
        return (self.lower - self.e) / self.s

    def to_json(self):
        return {"p": self.p, "mu": self.mu, "s": self.s, "e": self.e, "lower": self.lower}


def _reduce_p1(x, y, p):
    x, y = x % p, y % p
    if y:
        return (x * pow(y, p - 2, p) % p, 1)
    if x == 0:
        raise ValueError("point reduces to (0:0)")
    return (1, 0)


def reduce_point(pt, p):
    x, y, u, v = pt
    return _reduce_p1(x, y, p), _reduce_p1(u, v, p)


def det_valuation_check(f: BiHomPoly, p: int, target, points, monomials) -> DetValuationReport:
    """v_p of det(F_i(xi_j)) for points xi_j all reducing to ``target`` mod p."""
    from dimgrowth.density import multiplicity_mod_p

    pts = [P.coords() if isinstance(P, BiProjPoint) else tuple(P) for P in points]
    s = len(pts)
    if s != len(monomials):
        raise ValueError("need as many monomials as points")
    tgt = (_reduce_p1(*target[0], p), _reduce_p1(*target[1], p))
    for pt in pts:
        if f.base.evaluate(pt) != 0:
            raise ValueError(f"{pt} is not on the curve")
        if reduce_point(pt, p) != tgt:
            raise ValueError(f"{pt} does not reduce to the target point mod {p}")
    mu = multiplicity_mod_p(f, p, *tgt)
    if mu < 1:
        raise ValueError("target point is not on the reduction")
    rows = [[eval_monomial(m, pt) for m in monomials] for pt in pts]
    det = det_bareiss(rows)
    e = None if det == 0 else padic_valuation(det, p)
    return DetValuationReport(p, mu, s, e, s * s / (2 * mu), tgt)


# lifting families: rational parametrizations t -> ((x:y),(u:v)) of a curve,
# with the parameter values whose reductions hit a chosen point.

LIFT_CURVES = {
    # name: (equation text, parametrization t -> (x, y, u, v))
    "diagonal": ("X*V - Y*U", lambda t: (t, 1, t, 1)),
    "parabola": ("X*V^2 - Y*U^2", lambda t: (t * t, 1, t, 1)),
    "cubic-graph": ("X*V^3 - Y*U^3", lambda t: (t ** 3, 1, t, 1)),
    "conic-shift": ("U*Y^2 - V*X^2 - V*Y^2", lambda t: (t, 1, t * t + 1, 1)),
    "node": ("U^2*Y^3 - X^3*V^2 - X^2*Y*V^2", lambda t: (t * t - 1, 1, t ** 3 - t, 1)),
    "cusp": ("U^2*Y^3 - X^3*V^2", lambda t: (t * t, 1, t ** 3, 1)),
}


def independent_monomials(f: BiHomPoly, pts, s):
    """s monomials whose evaluation matrix at pts is nonsingular, taken
    greedily from standard monomials of increasing bidegree."""
    d1, d2 = f.bidegree
    chosen = []
    rows_t = []  # columns chosen so far, as rows of the transpose
    M = 1
    while len(chosen) < s and M <= 4 * s + 4:
        for m in standard_monomials(f, d1 * M, d2 * M) if M > 0 else []:
            col = [eval_monomial(m, pt) for pt in pts]
            trial = rows_t + [col]
            if len(echelon(trial, len(pts))[1]) == len(trial):
                chosen.append(m)
                rows_t = trial
                if len(chosen) == s:
                    break
        if len(chosen) == s:
            break
        # restart at the next bidegree with a fresh, homogeneous choice
        chosen, rows_t = [], []
        M += 1
    if len(chosen) < s:
        return None
    return chosen


def build_lift_instance(name, p, t0, s, node_split=False):
    """(f, target, points, monomials) for a lifting family; ``node_split``
    takes half the lifts from each branch t0 and -t0 (nodes sit at t = +-1)."""
    text, param = LIFT_CURVES[name]
    f = BiHomPoly.parse(text)
    if node_split:
        ts = [t0 + p * k for k in range((s + 1) // 2)] + [-t0 + p * (k + 1) for k in range(s // 2)]
    else:
        ts = [t0 + p * k for k in range(s)]
    pts = [param(t) for t in ts]
    mons = independent_monomials(f, pts, s)
    target = ((pts[0][0], pts[0][1]), (pts[0][2], pts[0][3]))
    return f, target, pts, mons


def minor_gcd_instance(f: BiHomPoly, pts, D, b: float):
    """log|Delta| and the quantity s^2/2 (log s - 2 log|d| - log b) for the gcd
    Delta of the maximal minors of the evaluation matrix on B[D].

    Returns (log_delta, s, value_without_c1) or None when Delta = 0."""
    mons = monomial_basis(*D).monomials
    rows = [[eval_monomial(m, pt) for m in mons] for pt in pts]
    delta = maximal_minor_gcd(rows)
    if delta == 0:
        return None
    s = len(pts)
    absd = f.absdeg
    return math.log(delta), s, (s * s / 2) * (math.log(s) - 2 * math.log(absd) - math.log(b))


def minor_gcd_c1_needed(log_delta, s, base_value):
    """Smallest c1 with log|Delta| >= s^2/2 (log s - c1 - 2 log|d| - log b)."""
    return (base_value - log_delta) / (s * s / 2)


# ---------------------------------------------------------------------------
# explicit bound evaluators


@dataclass
class CurveBoundConstants:
    c_main: float = 1.0
    c_log: float = 1.0
    c_const: float = 1.0


def theorem32_bound(f: BiHomPoly, B1, B2, constants: CurveBoundConstants | None = None, b: float | None = None):
    """c_main |d|^(7/2) B1^(1/d2) B2^(1/d1) b / ||f||^(1/(2|d|))
    + c_log |d|^3 log(B1^(1/d2) B2^(1/d1)) + c_const |d|^(7/2)."""
    if constants is None:
        constants = CurveBoundConstants()
    if b is None:
        from dimgrowth.density import compute_b

        b = compute_b(f, 10 ** 4).b
    d1, d2 = f.bidegree
    ad = d1 * d2
    h = height_norm(f.base)
    main = ad ** 3.5 * B1 ** (1 / d2) * B2 ** (1 / d1) * b / h ** (1 / (2 * ad))
    logt = ad ** 3 * math.log(B1 ** (1 / d2) * B2 ** (1 / d1))
    return constants.c_main * main + constants.c_log * logt + constants.c_const * ad ** 3.5


def envelope_bound(f: BiHomPoly, B1, B2, C: float) -> float:
    """C |d|^(7/2) B1^(1/d2) B2^(1/d1)."""
    d1, d2 = f.bidegree
    return C * (d1 * d2) ** 3.5 * B1 ** (1 / d2) * B2 ** (1 / d1)


def affine_curve_bound(d1, d2, B1, B2, C: float) -> float:
    """C |d|^(9/2) B1^(1/(2 d2)) B2^(1/d1) log(B1 B2)."""
    ad = d1 * d2
    return C * ad ** 4.5 * B1 ** (1 / (2 * d2)) * B2 ** (1 / d1) * math.log(B1 * B2)


# ---------------------------------------------------------------------------
# curves in A^1 x P^1


def declared_bidegree(f: MultiPoly, bidegree=None):
    if bidegree is not None:
        d1, d2 = bidegree
        if f.degree(0) > d1 or f.degree(1) > d2:
            raise PolyError("declared bidegree is smaller than the degrees of f")
        return d1, d2
    return f.degree(0), f.degree(1)


def build_FH(f: MultiPoly, H: int, bidegree=None) -> BiHomPoly:
    """sum_i f_i(U, V) X^i Y^(d1 - i) H^i, where f_i(U, V) is the coefficient
    of x^i homogenized to degree d2."""
    if H == 0:
        raise PolyError("H must be nonzero")
    d1, d2 = declared_bidegree(f, bidegree)
    terms = {}
    for (i, j), c in f.terms.items():
        e = (i, d1 - i, j, d2 - j)
        terms[e] = terms.get(e, 0) + c * H ** i
    return BiHomPoly(MultiPoly(BIHOM_VARS, terms), (d1, d2))


def x_coefficient(f: MultiPoly, i: int) -> MultiPoly:
    """Coefficient of x^i as a polynomial in t (same variable list)."""
    return f.collect(0).get(i, MultiPoly(f.vars))


@dataclass
class A1P1Report:
    count: int
    bound: float
    branch: str
    prime: int | None
    H: int
    FH_height: int
    ok: bool

    def to_json(self):
        return {
            "count": self.count,
            "bound": self.bound,
            "branch": self.branch,
            "prime": self.prime,
            "H": self.H,
            "FH_height": self.FH_height,
            "ok": self.ok,
        }


def count_A1P1(f: MultiPoly, B1: int, B2: int, C: float | None = None, bidegree=None) -> A1P1Report:
    """Exact count of (x, t) with |x| <= B1, H(t) <= B2 on f = 0, the bound
    C |d|^(9/2) B1^(1/(2 d2)) B2^(1/d1) log(B1 B2), and the proof branch.

    Branch "B'∤f0": the largest prime B' in [ceil(B1/2), B1] not dividing f0
    (the x^0 coefficient) gives the primitive form F_{B'}. Otherwise every
    such prime divides f0 and the branch is "(∏B')|f0"; it is tagged
    "(∏B')|f0, addendum" when ||f0|| > B1^(8 d1).
    """
    from dimgrowth.density import PrimeTable

    if B1 < 2 or B2 < 2:
        raise ValueError("B1, B2 >= 2 required")
    if C is None:
        from dimgrowth.calibration import constant

        C = constant("affine_curve_C")
    d1, d2 = declared_bidegree(f, bidegree)
    if d1 < 1 or d2 < 1:
        raise PolyError("need d1, d2 >= 1")
    f0 = x_coefficient(f, 0)
    if f0.is_zero():
        raise PolyError("f0 = 0: f is divisible by x")
    f0c = [abs(c) for c in f0.terms.values()]
    lo = (B1 + 1) // 2
    primes = [p for p in PrimeTable(B1).primes if p >= lo]
    prime = None
    for p in reversed(primes):
        if any(c % p for c in f0c):
            prime = p
            break
    if prime is not None:
        branch = "B'∤f0"
        H = prime
    else:
        branch = "(∏B')|f0"
        if height_norm(f0) > B1 ** (8 * d1):
            branch += ", addendum"
        H = 1
    FH = build_FH(f, H, (d1, d2))
    count, pts = count_A1P1_brute(f, B1, B2, retain=True)
    # each solution (x, t) gives ((x:H), t) on F_H
    for x, t in pts:
        if FH(x, H, t.numerator, t.denominator) != 0:
            raise ArithmeticError("F_H does not vanish at a lifted solution")
    bound = affine_curve_bound(d1, d2, B1, B2, C)
    return A1P1Report(count, bound, branch, prime, H, height_norm(FH.base), count <= bound)
