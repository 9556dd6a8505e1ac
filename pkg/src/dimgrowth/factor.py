"""Bivariate factorization over finite fields and irreducibility tests.

A bivariate polynomial over a field K is stored as a list indexed by the
degree in the main variable x whose entries are univariate polynomials in
the other variable y (lists of K elements, see ``finite_field``).

Factoring over F_q: square-free separation via gcd with a partial
derivative, then for each separable part: monicize in x, pick y0 with
F(x, y0) square-free, factor that univariately, lift the factorization
y-adically, and recombine lifted factors by trial division. When F_q has no
usable y0 the work moves to an extension F_{q^k} and factors are glued back
along Frobenius orbits.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from dimgrowth import finite_field as ff
from dimgrowth.finite_field import GF
from dimgrowth.poly import BiHomPoly, MultiPoly, PolyError, canonical_primitive, content_primitive

# ---------------------------------------------------------------------------
# K[y][x] arithmetic


def bp_trim(K, F):
    while F and not F[-1]:
        F.pop()
    return F


def bp_add(K, F, G):
    n = max(len(F), len(G))
    return bp_trim(K, [ff.padd(K, F[i] if i < len(F) else [], G[i] if i < len(G) else []) for i in range(n)])


def bp_sub(K, F, G):
    n = max(len(F), len(G))
    return bp_trim(K, [ff.psub(K, F[i] if i < len(F) else [], G[i] if i < len(G) else []) for i in range(n)])


def _trunc(K, f, N):
    if N is None or len(f) <= N:
        return f
    return ff.trim(f[:N], K)


def bp_mul(K, F, G, N=None):
    """Product, optionally truncated modulo y^N."""
    if not F or not G:
        return []
    out = [[] for _ in range(len(F) + len(G) - 1)]
    for i, a in enumerate(F):
        if not a:
            continue
        for j, b in enumerate(G):
            if b:
                out[i + j] = ff.padd(K, out[i + j], _trunc(K, ff.pmul(K, a, b), N))
    return bp_trim(K, out)


def bp_scale(K, F, c):
    """Multiply by c in K[y]."""
    return bp_trim(K, [ff.pmul(K, a, c) for a in F])


def bp_deriv_x(K, F):
    return bp_trim(K, [ff.trim([K.scal(i, c) for c in F[i]], K) for i in range(1, len(F))])


def bp_swap(K, F):
    """Exchange the roles of x and y."""
    dy = max((len(a) for a in F), default=0)
    out = [[K.zero] * len(F) for _ in range(dy)]
    for i, a in enumerate(F):
        for j, c in enumerate(a):
            out[j][i] = c
    return bp_trim(K, [ff.trim(r, K) for r in out])


def bp_content(K, F):
    g = []
    for a in F:
        if a:
            g = ff.pgcd(K, g, a) if g else ff.monic(K, a)
            if len(g) == 1:
                break
    return g


def bp_divexact(K, F, G):
    """F / G in K[y][x] or None when G does not divide F."""
    if not G:
        raise ZeroDivisionError
    R = [list(a) for a in F]
    dg = len(G) - 1
    lc = G[-1]
    if len(R) - 1 < dg:
        return [] if not R else None
    Q = [[] for _ in range(len(R) - dg)]
    for k in range(len(R) - 1 - dg, -1, -1):
        c = R[k + dg]
        if not c:
            continue
        q, r = ff.pdivmod(K, c, lc)
        if r:
            return None
        Q[k] = q
        for j in range(dg + 1):
            if G[j]:
                R[k + j] = ff.psub(K, R[k + j], ff.pmul(K, q, G[j]))
    if any(R[:dg]):
        return None
    return bp_trim(K, Q)


def bp_prem(K, F, G):
    """Pseudo-remainder of F by G in K[y][x]."""
    R = [list(a) for a in F]
    dg = len(G) - 1
    lc = G[-1]
    while len(R) - 1 >= dg and R:
        k = len(R) - 1 - dg
        c = R[-1]
        R = [ff.pmul(K, a, lc) for a in R]
        for j in range(dg + 1):
            if G[j]:
                R[k + j] = ff.psub(K, R[k + j], ff.pmul(K, c, G[j]))
        bp_trim(K, R)
    return R


def bp_primitive(K, F):
    """(primitive part, content) with respect to K[y]."""
    c = bp_content(K, F)
    if len(c) <= 1:
        return F, c
    return [ff.pdivmod(K, a, c)[0] for a in F], c


def bp_normalize(K, F):
    """Scale so the top x-coefficient is monic in y."""
    if not F:
        return F
    inv = K.inv(F[-1][-1])
    return [ff.pscale(K, a, inv) for a in F]


def bp_gcd(K, F, G):
    """gcd in K[y][x], normalized with bp_normalize."""
    if not F:
        return bp_normalize(K, G)
    if not G:
        return bp_normalize(K, F)
    cF = bp_content(K, F)
    cG = bp_content(K, G)
    c = ff.pgcd(K, cF, cG)
    A = [ff.pdivmod(K, a, cF)[0] for a in F]
    B = [ff.pdivmod(K, a, cG)[0] for a in G]
    if len(A) < len(B):
        A, B = B, A
    while B and len(B) > 1:
        R = bp_prem(K, A, B)
        A = B
        if not R:
            B = []
            break
        cR = bp_content(K, R)
        B = [ff.pdivmod(K, a, cR)[0] for a in R]
    if B:  # B has x-degree 0: primitive parts are coprime
        A = [[K.one]]
    else:
        cA = bp_content(K, A)
        A = [ff.pdivmod(K, a, cA)[0] for a in A]
    return bp_normalize(K, bp_scale(K, A, c))


def bp_eval_y(K, F, a):
    return ff.trim([ff.peval(K, c, a) for c in F], K)


def _ushift(K, f, a):
    """f(y + a) by Horner."""
    out = []
    for c in reversed(f):
        out = ff.padd(K, ff.pmul(K, out, [a, K.one]), [c] if not K.is_zero(c) else [])
    return out


def bp_shift_y(K, F, a):
    return [_ushift(K, c, a) for c in F]


def bp_is_const(F):
    return len(F) <= 1 and (not F or len(F[0]) <= 1)


def bp_xdeg(F):
    return len(F) - 1


def bp_ydeg(F):
    return max((len(a) for a in F), default=0) - 1


# ---------------------------------------------------------------------------
# conversions


def mp_to_bp(K, f: MultiPoly, xi=0, yi=1):
    dx = max((e[xi] for e in f.terms), default=0)
    F = [[] for _ in range(dx + 1)]
    tmp = [dict() for _ in range(dx + 1)]
    for e, c in f.terms.items():
        tmp[e[xi]][e[yi]] = tmp[e[xi]].get(e[yi], 0) + c
    for i, d in enumerate(tmp):
        if d:
            row = [0] * (max(d) + 1)
            for j, c in d.items():
                row[j] = c
            F[i] = ff.from_ints(K, row)
    return bp_trim(K, F)


def bp_to_mp(K, F, vars, xi=0, yi=1):
    terms = {}
    n = len(vars)
    for i, a in enumerate(F):
        for j, c in enumerate(a):
            if not K.is_zero(c):
                e = [0] * n
                e[xi] = i
                e[yi] = j
                terms[tuple(e)] = K.to_int(c)
    return MultiPoly(vars, terms)


def _frob_bp(K, F):
    return [[K.frobenius(c) for c in a] for a in F]


# ---------------------------------------------------------------------------
# core factorization of a separable polynomial


def _univariate_sqfree(K, f):
    if len(f) <= 2:
        return True
    return len(ff.pgcd(K, f, ff.pderiv(K, f))) == 1


def _hensel_two(K, F, g0, h0, N):
    """Lift F(x,0) = g0*h0 (monic, coprime) to F = G*H mod y^N."""
    d, s, t = ff.pxgcd(K, g0, h0)
    if d != [K.one]:
        raise ArithmeticError("Hensel lifting needs coprime factors")
    G = [[c] if not K.is_zero(c) else [] for c in g0]
    H = [[c] if not K.is_zero(c) else [] for c in h0]
    for k in range(1, N):
        E = bp_sub(K, [_trunc(K, a, k + 1) for a in F], bp_mul(K, G, H, k + 1))
        e = ff.trim([a[k] if len(a) > k else K.zero for a in E], K)
        if not e:
            continue
        a = ff.pmod(K, ff.pmul(K, t, e), g0)
        b = ff.pmod(K, ff.pmul(K, s, e), h0)
        for i, c in enumerate(a):
            if not K.is_zero(c):
                G[i] = ff.padd(K, G[i], [K.zero] * k + [c])
        for i, c in enumerate(b):
            if not K.is_zero(c):
                H[i] = ff.padd(K, H[i], [K.zero] * k + [c])
    return G, H


def _hensel_multi(K, F, us, N):
    if len(us) == 1:
        return [F]
    g0 = us[0]
    h0 = [K.one]
    for u in us[1:]:
        h0 = ff.pmul(K, h0, u)
    G, H = _hensel_two(K, F, g0, h0, N)
    return [G] + _hensel_multi(K, H, us[1:], N)


def _monic_factors(K, Ft, N):
    """Irreducible factors over K of Ft, monic in x with Ft(x,0) square-free."""
    u0 = bp_eval_y(K, Ft, K.zero)
    us = [u for u, _ in ff.factor_univariate(K, u0)]
    if len(us) == 1:
        return [Ft]
    lifted = _hensel_multi(K, Ft, us, N)
    found = []
    rest = list(range(len(lifted)))
    cur = Ft
    k = 1
    while 2 * k <= len(rest):
        hit = False
        for S in combinations(rest, k):
            cand = [[K.one]]
            for j in S:
                cand = bp_mul(K, cand, lifted[j], N)
            q = bp_divexact(K, cur, cand)
            if q is not None:
                found.append(cand)
                cur = q
                rest = [j for j in rest if j not in S]
                hit = True
                break
        if not hit:
            k += 1
    found.append(cur)
    return found


def _eval_points(K, rng, tries=64):
    if K.q <= tries:
        yield from K.elements()
    else:
        seen = set()
        for _ in range(tries):
            a = K.random(rng)
            if a not in seen:
                seen.add(a)
                yield a


def _good_point(K, Ft, rng):
    for a in _eval_points(K, rng):
        u = bp_eval_y(K, Ft, a)
        if len(u) == len(Ft) and _univariate_sqfree(K, u):
            return a
    return None


def factor_separable(K, F, rng):
    """Factor F in K[y][x], square-free and separable in x, primitive over K[y].

    Returns factors over K normalized by ``bp_normalize``, or None when K is
    too small to find a good specialization point.
    """
    m = bp_xdeg(F)
    if m <= 0:
        return []
    if m == 1:
        return [bp_normalize(K, F)]
    lc = F[-1]
    # Ft = lc^(m-1) F(x/lc, y), monic in x
    Ft = [[] for _ in range(m + 1)]
    pw = [K.one]
    for i in range(m - 1, -1, -1):
        Ft[i] = ff.pmul(K, F[i], pw)
        pw = ff.pmul(K, pw, lc)
    Ft[m] = [K.one]
    y0 = _good_point(K, Ft, rng)
    if y0 is None:
        return None
    Fs = bp_shift_y(K, Ft, y0)
    N = bp_ydeg(Fs) + 1
    out = []
    neg = K.neg(y0)
    for h in _monic_factors(K, Fs, N):
        h = bp_shift_y(K, h, neg)
        # undo the monic transform: h(lc*x, y), then strip the K[y]-content
        g = []
        pw = [K.one]
        for c in h:
            g.append(ff.pmul(K, c, pw))
            pw = ff.pmul(K, pw, lc)
        g = bp_trim(K, g)
        c = bp_content(K, g)
        g = [ff.pdivmod(K, a, c)[0] for a in g]
        out.append(bp_normalize(K, g))
    return out


def _extension_degree(p, F):
    """Smallest k with p^k comfortably above the number of bad points."""
    m = max(bp_xdeg(F), 1)
    dy = max(bp_ydeg(F), 1)
    need = 4 * (2 * m) * dy * m + 16
    k = 1
    while p ** k < need:
        k += 1
    return k


def factor_separable_Fp(p, F, rng):
    """factor_separable over F_p, moving to an extension if needed."""
    K = ff.field(p)
    res = factor_separable(K, F, rng)
    if res is not None:
        return res
    k = _extension_degree(p, F)
    L = ff.field(p, k)
    FL = [[L.from_int(c) for c in a] for a in F]
    res = factor_separable(L, FL, rng)
    if res is None:
        raise ArithmeticError("no specialization point found in the extension")
    # glue Frobenius orbits
    left = [r for r in res]
    out = []
    while left:
        g = left.pop(0)
        prod = g
        h = _frob_bp(L, g)
        while h != g:
            left.remove(h)
            prod = bp_mul(L, prod, h)
            h = _frob_bp(L, h)
        out.append([[L.to_int(c) for c in a] for a in prod])
    return out


def _content_factors_Fp(p, c):
    K = ff.field(p)
    return [(u, k) for u, k in ff.factor_univariate(K, c)]


def factor_bp_Fp(p, F):
    """Full factorization of F in F_p[x,y]. Returns (factors, unit) where
    factors is a list of (bp, multiplicity)."""
    K = ff.field(p)
    rng = random.Random(p * 7919 + 17)
    unit = F[-1][-1] if F else 0
    rem = [list(a) for a in F]
    power = 1
    found = {}

    def record(G, mult):
        key = repr(G)
        if key in found:
            found[key] = (found[key][0], found[key][1] + mult)
        else:
            found[key] = (G, mult)

    while not bp_is_const(rem):
        progress = []
        dx = bp_deriv_x(K, rem)
        if dx:
            R = bp_divexact(K, rem, bp_gcd(K, rem, dx))
            Rp, c = bp_primitive(K, R)
            progress += [G for G in factor_separable_Fp(p, Rp, rng)]
            progress += [[u] for u, _ in _content_factors_Fp(p, c)]
        else:
            S = bp_swap(K, rem)
            dy = bp_deriv_x(K, S)
            if dy:
                R = bp_divexact(K, S, bp_gcd(K, S, dy))
                Rp, c = bp_primitive(K, R)
                progress += [bp_normalize(K, bp_swap(K, G)) for G in factor_separable_Fp(p, Rp, rng)]
                progress += [bp_normalize(K, bp_swap(K, [u])) for u, _ in _content_factors_Fp(p, c)]
        if progress:
            for G in progress:
                if bp_is_const(G):
                    continue
                k = 0
                while True:
                    q = bp_divexact(K, rem, G)
                    if q is None:
                        break
                    rem = q
                    k += 1
                if k == 0:
                    raise ArithmeticError("factor does not divide")
                record(G, k * power)
        else:
            # every exponent is divisible by p: take the p-th root
            rem = [ff.trim([rem[i][j] for j in range(0, len(rem[i]), p)], K) for i in range(0, len(rem), p)]
            power *= p
    return list(found.values()), unit


# ---------------------------------------------------------------------------
# public API on MultiPoly


def _key(f: MultiPoly):
    from dimgrowth.poly import to_text

    return (f.total_degree(), to_text(f))


def factor_mod_p(f: MultiPoly, p: int):
    """Irreducible factors of f over F_p with multiplicities.

    f must involve at most two variables. Factors have coefficients in
    [0, p); each is normalized so that its highest power of the main variable
    (the first variable that occurs in f) has a coefficient polynomial that is
    monic in the other variable. Sorted by (total degree, text).
    """
    from dimgrowth.poly import reduce_mod_p

    g = reduce_mod_p(f, p)
    if g.is_zero():
        raise PolyError("polynomial vanishes mod p")
    used = g.used_vars()
    if len(used) > 2:
        raise PolyError("factor_mod_p handles at most two variables")
    if not used:
        return []
    xi = used[0]
    yi = used[1] if len(used) > 1 else (1 if xi == 0 and g.nvars > 1 else 0)
    if g.nvars == 1:
        K = ff.field(p)
        out = []
        for u, k in ff.factor_univariate(K, ff.from_ints(K, g.univariate_coeffs())):
            out.append((MultiPoly.from_univariate([K.to_int(c) for c in u], g.vars), k))
        out.sort(key=lambda t: _key(t[0]))
        return out
    K = ff.field(p)
    F = mp_to_bp(K, g, xi, yi)
    facs, _ = factor_bp_Fp(p, F)
    out = [(bp_to_mp(K, G, g.vars, xi, yi), k) for G, k in facs]
    out.sort(key=lambda t: _key(t[0]))
    return out


def product_mod_p(factors, vars, p):
    acc = MultiPoly.constant(vars, 1)
    for g, k in factors:
        acc = acc * (g ** k)
    return MultiPoly(vars, {e: c % p for e, c in acc.terms.items()})


# ---------------------------------------------------------------------------
# absolute irreducibility modulo p


@dataclass
class AbsIrrResult:
    value: bool
    vanishes: bool = False
    reason: str = ""

    def __bool__(self):
        return self.value


def _is_Fp_irreducible_bp(p, F, rng, tries=None):
    """Fast certificate: F primitive in x and some F(x, a) irreducible of full
    degree, a among the first ``tries`` elements. Returns True, or None when
    inconclusive."""
    K = ff.field(p)
    m = bp_xdeg(F)
    if m <= 0:
        return None
    if len(bp_content(K, F)) > 1:
        return False
    for a in range(p if tries is None else min(p, tries)):
        u = bp_eval_y(K, F, a)
        if len(u) == m + 1 and ff.is_irreducible_univariate(K, u):
            return True
    return None


def _smooth_point_exists(p, F):
    K = ff.field(p)
    Fx = bp_deriv_x(K, F)
    Fy = bp_deriv_x(K, bp_swap(K, F))
    for b in range(p):
        u = bp_eval_y(K, F, b)
        ux = bp_eval_y(K, Fx, b)
        for a in range(p):
            if ff.peval(K, u, a) == 0:
                if ff.peval(K, ux, a) != 0:
                    return True
                # d/dy at (a, b): Fy is stored with y as main variable
                v = bp_eval_y(K, Fy, a)
                if ff.peval(K, v, b) != 0:
                    return True
    return False


def _count_factors_over(p, k, F, rng):
    """Number of irreducible factors of the F_p-irreducible F over F_{p^k}."""
    K = ff.field(p)
    if not bp_deriv_x(K, F):
        F = bp_swap(K, F)
    L = ff.field(p, k)
    FL = [[L.from_int(c) for c in a] for a in F]
    res = factor_separable(L, FL, rng)
    if res is None:
        raise ArithmeticError("extension too small")
    return len(res)


def _abs_irreducible_bp(p, F, rng):
    """F in F_p[x,y] nonconstant. Return (bool, reason)."""
    K = ff.field(p)
    mx, my = bp_xdeg(F), bp_ydeg(F)
    # a short scan in both orientations first: x^3 - a is never irreducible
    # when every a is a cube, but the swapped form is linear
    cert = None
    for tries in (8, None):
        if cert is None and mx >= 1:
            cert = _is_Fp_irreducible_bp(p, F, rng, tries)
        if cert is None and my >= 1 and mx >= 1:
            cert = _is_Fp_irreducible_bp(p, bp_swap(K, F), rng, tries)
    if cert is False:
        return False, "reducible"
    if cert is None:
        facs, _ = factor_bp_Fp(p, F)
        if len(facs) != 1 or facs[0][1] != 1:
            return False, "reducible"
    # F is irreducible over F_p; the absolute factors form one Frobenius orbit
    # of size r dividing gcd(deg_x, deg_y)
    g = math.gcd(mx, my)
    if g <= 1:
        return True, "degree-gcd"
    if _smooth_point_exists(p, F):
        return True, "smooth-point"
    k = g
    while p ** k < 4 * (2 * max(mx, my)) * max(mx, my) ** 2 + 16:
        k += g
    r = _count_factors_over(p, k, F, rng)
    return r == 1, ("extension" if r == 1 else "reducible-over-extension")


def is_absolutely_irreducible_mod_p(f, p: int) -> AbsIrrResult:
    """Absolute irreducibility of f mod p for a BiHomPoly or a bivariate
    MultiPoly. A polynomial vanishing mod p is reported as not absolutely
    irreducible with ``vanishes`` set."""
    from dimgrowth.poly import dehomogenize_pair, is_prime

    if not is_prime(p):
        raise PolyError(f"{p} is not prime")
    rng = random.Random(1000003 * p + 1)
    K = ff.field(p)
    if isinstance(f, BiHomPoly):
        red = MultiPoly(f.base.vars, {e: c % p for e, c in f.base.terms.items()})
        if red.is_zero():
            return AbsIrrResult(False, vanishes=True, reason="vanishes")
        g = dehomogenize_pair(red)
        # powers of Y and V lost by the chart
        a = f.d1 - (g.degree(0) if not g.is_zero() else 0)
        b = f.d2 - (g.degree(1) if not g.is_zero() else 0)
        extra = a + b
        if g.is_constant():
            return AbsIrrResult(extra == 1, reason="linear" if extra == 1 else "reducible")
        if extra:
            return AbsIrrResult(False, reason="reducible")
        F = mp_to_bp(K, g, 0, 1)
    else:
        red = MultiPoly(f.vars, {e: c % p for e, c in f.terms.items()})
        if red.is_zero():
            return AbsIrrResult(False, vanishes=True, reason="vanishes")
        used = red.used_vars()
        if len(used) > 2:
            raise PolyError("absolute irreducibility test is bivariate")
        if not used:
            return AbsIrrResult(False, reason="constant")
        xi = used[0]
        yi = used[1] if len(used) > 1 else (1 - xi if red.nvars > 1 else 0)
        if red.nvars == 1 or len(used) == 1:
            coeffs = red.univariate_coeffs(xi)
            ok = len(coeffs) == 2
            return AbsIrrResult(ok, reason="univariate")
        F = mp_to_bp(K, red, xi, yi)
    ok, why = _abs_irreducible_bp(p, F, rng)
    return AbsIrrResult(ok, reason=why)


# ---------------------------------------------------------------------------
# irreducibility over Q


class IrreducibilityUnknown(RuntimeError):
    pass


def _small_primes(cap):
    from sympy import primerange

    return list(primerange(2, cap + 1))


def _restrict_to_plane(f: MultiPoly, rng, p):
    """Random affine plane restriction x_i = a_i s + b_i t + c_i mod p."""
    from dimgrowth.poly import substitute

    vars2 = ("s", "t")
    s, t = MultiPoly.gens(vars2)
    mapping = {}
    for i in range(f.nvars):
        a, b, c = rng.randrange(p), rng.randrange(p), rng.randrange(p)
        mapping[i] = s * a + t * b + c
    g = substitute(f, mapping, vars2)
    return MultiPoly(vars2, {e: c % p for e, c in g.terms.items()})


def is_irreducible_over_Q(f: MultiPoly, cap: int = 211) -> bool:
    """Irreducibility over Q by reduction certificates, falling back to a
    full factorization in sympy when no prime up to ``cap`` certifies."""
    if f.is_zero() or f.is_constant():
        return False
    _, f = content_primitive(f)
    f = f.drop_unused()
    deg = f.total_degree()
    if deg == 1:
        return True
    rng = random.Random(12345)
    if f.nvars <= 2:
        for p in _small_primes(cap):
            g = MultiPoly(f.vars, {e: c % p for e, c in f.terms.items()})
            if g.total_degree() != deg:
                continue
            if f.nvars == 1:
                facs = factor_mod_p(g, p)
                if len(facs) == 1 and facs[0][1] == 1:
                    return True
                continue
            K = ff.field(p)
            F = mp_to_bp(K, g)
            cert = _is_Fp_irreducible_bp(p, F, rng)
            if cert is None:
                cert = _is_Fp_irreducible_bp(p, bp_swap(K, F), rng)
            if cert:
                return True
            if cert is None and p > 3:
                facs = factor_mod_p(g, p)
                if len(facs) == 1 and facs[0][1] == 1:
                    return True
    else:
        for p in _small_primes(cap):
            for _ in range(3):
                g = _restrict_to_plane(f, rng, p)
                if g.total_degree() != deg:
                    continue
                K = ff.field(p)
                F = mp_to_bp(K, g)
                cert = _is_Fp_irreducible_bp(p, F, rng)
                if cert is None:
                    cert = _is_Fp_irreducible_bp(p, bp_swap(K, F), rng)
                if cert:
                    return True
            if p > 31:
                break
    return _sympy_irreducible(f)


def _sympy_irreducible(f: MultiPoly) -> bool:
    import sympy

    from dimgrowth.poly import to_sympy

    _, facs = sympy.factor_list(to_sympy(f).as_expr(), *[sympy.Symbol(v) for v in f.vars])
    return len(facs) == 1 and facs[0][1] == 1


def is_absolutely_irreducible_over_Qbar(f, nprimes: int = 5) -> bool:
    """Absolute irreducibility over the algebraic closure of Q.

    A good prime reduction that is absolutely irreducible certifies the
    answer. When the first ``nprimes`` good primes all fail, f is declared
    not absolutely irreducible.
    """
    from sympy import nextprime

    if isinstance(f, BiHomPoly):
        base = f.base
    else:
        base = f
    deg = base.total_degree()
    p = 1
    tried = 0
    while tried < nprimes:
        p = nextprime(p)
        red = MultiPoly(base.vars, {e: c % p for e, c in base.terms.items()})
        if red.is_zero():
            continue
        if not isinstance(f, BiHomPoly) and red.total_degree() != deg:
            continue
        tried += 1
        if is_absolutely_irreducible_mod_p(f, p):
            return True
    return False
