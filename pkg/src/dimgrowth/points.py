"""Heights, canonical P^1 representatives, enumeration of bounded-height
points and brute-force counting oracles.

Every oracle solves for the last coordinate instead of scanning a full grid:
fibers of a curve in P^1 x P^1 are binary forms, fibers of an affine
hypersurface are univariate polynomials in the last variable.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from dimgrowth.poly import BiHomPoly, MultiPoly, PolyError


@dataclass(frozen=True, order=True)
class ProjPoint:
    x: int
    y: int

    @property
    def height(self):
        return max(abs(self.x), abs(self.y))

    def as_fraction(self):
        """Affine coordinate x/y (None for the point at infinity)."""
        return None if self.y == 0 else Fraction(self.x, self.y)

    def __str__(self):
        return f"({self.x}:{self.y})"


@dataclass(frozen=True)
class BiProjPoint:
    first: ProjPoint
    second: ProjPoint

    @property
    def biheight(self):
        return (self.first.height, self.second.height)

    def coords(self):
        return (self.first.x, self.first.y, self.second.x, self.second.y)


@dataclass(frozen=True)
class AffPointZ:
    coords: tuple

    def __len__(self):
        return len(self.coords)


@dataclass
class HeightHistogram:
    counts: dict = field(default_factory=dict)
    cap: int = 0

    def total(self):
        return sum(self.counts.values())

    def to_json(self):
        return {"cap": self.cap, "counts": {str(k): v for k, v in sorted(self.counts.items())}}


def canonicalize_p1(x: int, y: int) -> ProjPoint:
    if x == 0 and y == 0:
        raise ValueError("(0, 0) is not a point of P^1")
    g = math.gcd(x, y)
    x, y = x // g, y // g
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return ProjPoint(x, y)


def height_q(t) -> int:
    """Height of a rational number in lowest terms; H(0) = 1."""
    t = Fraction(t)
    return max(abs(t.numerator), t.denominator)


def _points_of_height(h):
    if h == 1:
        return [ProjPoint(-1, 1), ProjPoint(0, 1), ProjPoint(1, 0), ProjPoint(1, 1)]
    pts = [ProjPoint(x, h) for x in range(-h + 1, h) if math.gcd(x, h) == 1]
    pts += [ProjPoint(s * h, y) for s in (-1, 1) for y in range(1, h) if math.gcd(h, y) == 1]
    pts.sort()
    return pts


def enumerate_p1(B: int) -> Iterator[ProjPoint]:
    """All points of P^1(Q) of height <= B, by increasing height then lex."""
    for h in range(1, B + 1):
        yield from _points_of_height(h)


def count_p1(B: int) -> int:
    if B < 1:
        return 0
    return 4 + 4 * sum(_phi(h) for h in range(2, B + 1))


def _phi(n):
    from sympy import totient

    return int(totient(n))


def _sort_key(P: ProjPoint):
    return (P.height, P.x, P.y)


# ---------------------------------------------------------------------------
# roots


def _horner(c, t):
    acc = 0
    for a in reversed(c):
        acc = acc * t + a
    return acc


def _divisors_upto(n, B):
    n = abs(n)
    return [d for d in range(1, min(n, B) + 1) if n % d == 0]


def rational_roots_bounded(c, B):
    """Rational roots of sum c[k] t^k with height <= B (distinct, exact).

    Rational root theorem: after removing the root 0 a root u/v has u | c[low]
    and v | c[high], so it suffices to test divisors up to B.
    """
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise PolyError("zero polynomial has every root")
    out = []
    low = 0
    while c[low] == 0:
        low += 1
    if low:
        out.append(Fraction(0))
    c = c[low:]
    if len(c) == 1:
        return out
    a0, an = c[0], c[-1]
    if len(c) == 2:
        r = Fraction(-a0, an)
        if height_q(r) <= B:
            out.append(r)
        return sorted(out)
    if B > 200:
        return sorted(out + _rational_roots_numeric(c, B))
    us = _divisors_upto(a0, B)
    vs = _divisors_upto(an, B)
    d = len(c) - 1
    for v in vs:
        for u in us:
            if math.gcd(u, v) != 1:
                continue
            for su in (u, -u):
                # v^d f(su/v) without fractions, Horner in su
                acc = 0
                pw = 1
                for k in range(d, -1, -1):
                    acc = acc * su + c[k] * pw
                    pw *= v
                if acc == 0:
                    out.append(Fraction(su, v))
    return sorted(set(out))


def _rational_roots_numeric(c, B):
    """Candidates from floating eigenvalues, confirmed exactly."""
    r = np.roots(np.array([float(a) for a in reversed(c)]))
    out = set()
    for z in r:
        if not np.isfinite(z):
            continue
        if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
            continue
        q = Fraction(float(z.real)).limit_denominator(B)
        for cand in (q,):
            if height_q(cand) <= B and _horner(c, cand) == 0:
                out.add(cand)
    return sorted(out)


def rational_roots(g) -> list:
    """All rational roots of a univariate integer polynomial, with multiplicity
    (each root repeated as often as it divides g)."""
    if isinstance(g, MultiPoly):
        if g.is_zero():
            raise PolyError("zero polynomial has every root")
        c = g.univariate_coeffs()
    else:
        c = list(g)
        while c and c[-1] == 0:
            c.pop()
        if not c:
            raise PolyError("zero polynomial has every root")
    if len(c) == 1:
        return []
    import sympy

    T = sympy.Symbol("T")
    P = sympy.Poly(list(reversed(c)), T, domain="ZZ")
    _, facs = P.factor_list()
    out = []
    for h, k in facs:
        if h.degree() == 1:
            a, b = h.all_coeffs()
            out += [Fraction(-int(b), int(a))] * k
    return sorted(out)


# ---------------------------------------------------------------------------
# P^1 x P^1


def count_P1P1_brute(f: BiHomPoly, B1: int, B2: int, retain: bool = True):
    """N(f; B1, B2) and the points in enumeration order (first coordinate,
    then second) when ``retain``."""
    if f.base.is_zero():
        raise PolyError("zero polynomial: infinitely many points")
    second_all = list(enumerate_p1(B2))
    pts = []
    count = 0
    for P in enumerate_p1(B1):
        c = f.fiber_form(P.x, P.y)
        if not any(c):
            count += len(second_all)
            if retain:
                pts += [BiProjPoint(P, Q) for Q in second_all]
            continue
        sols = []
        # (u:v) = (1:0) is a root iff the U^d2 coefficient vanishes
        if c[-1] == 0 and f.d2 >= 1:
            sols.append(ProjPoint(1, 0))
        if f.d2 >= 1:
            for r in rational_roots_bounded(c, B2):
                sols.append(ProjPoint(r.numerator, r.denominator))
        count += len(sols)
        if retain:
            sols.sort(key=_sort_key)
            pts += [BiProjPoint(P, Q) for Q in sols]
    return count, (pts if retain else None)


def count_A1P1_brute(f: MultiPoly, B1: int, B2: int, retain: bool = True):
    """Number of (x, t) in Z x Q with |x| <= B1, H(t) <= B2 and f(x, t) = 0."""
    if f.is_zero():
        raise PolyError("zero polynomial: infinitely many points")
    if f.nvars != 2:
        raise PolyError("count_A1P1_brute expects f(x, t)")
    by_t = f.collect(1)
    d2 = max(by_t)
    coeff_polys = [by_t.get(k) for k in range(d2 + 1)]
    ts_all = None
    count = 0
    pts = []
    for x in range(-B1, B1 + 1):
        c = [cp.evaluate((x, 0)) if cp is not None else 0 for cp in coeff_polys]
        if not any(c):
            if ts_all is None:
                ts_all = [P.as_fraction() for P in enumerate_p1(B2) if P.y != 0]
            count += len(ts_all)
            if retain:
                pts += [(x, t) for t in ts_all]
            continue
        if len(c) == 1 or not any(c[1:]):
            continue
        roots = rational_roots_bounded(c, B2)
        count += len(roots)
        if retain:
            pts += [(x, t) for t in roots]
    return count, (pts if retain else None)


# ---------------------------------------------------------------------------
# affine hypersurfaces


_INT64_SAFE = 2 ** 62


def _eval_coeff_grid(cp: MultiPoly, grids, B, nprefix):
    """Exact values of a polynomial in the prefix variables over the grid."""
    bound = sum(abs(c) * B ** sum(e) for e, c in cp.terms.items())
    exact_int = bound < _INT64_SAFE
    dtype = np.int64 if exact_int else object
    out = np.zeros(grids[0].shape if grids else (1,), dtype=dtype)
    powcache = {}
    for e, c in cp.terms.items():
        term = np.full(out.shape, c, dtype=dtype)
        for i in range(nprefix):
            k = e[i]
            if k:
                key = (i, k)
                if key not in powcache:
                    g = grids[i].astype(dtype)
                    powcache[key] = g ** k
                term = term * powcache[key]
        out = out + term
    return out


def count_affine_brute(f: MultiPoly, B: int, retain_points: bool = False):
    """N_aff(V(f), B): integral points in [-B, B]^n on f = 0.

    The first n-1 coordinates run over the box (vectorized); the last is
    solved for. Coefficients are computed exactly (int64 when provably safe,
    Python ints otherwise); candidate roots come from exact division in the
    linear case and from floating companion eigenvalues otherwise, and every
    candidate is confirmed by exact evaluation.
    """
    if f.is_zero():
        raise PolyError("zero polynomial: every point lies on it")
    n = f.nvars
    if f.is_constant():
        return 0, ([] if retain_points else None)
    last = n - 1
    by_z = f.collect(last)
    dz = max(by_z)
    side = np.arange(-B, B + 1, dtype=np.int64)
    if n > 1:
        grids = [g.ravel() for g in np.meshgrid(*([side] * (n - 1)), indexing="ij")]
    else:
        grids = []
    size = grids[0].shape[0] if grids else 1
    coeffs = []
    for k in range(dz + 1):
        cp = by_z.get(k)
        if cp is None:
            coeffs.append(np.zeros(size, dtype=np.int64))
        else:
            coeffs.append(_eval_coeff_grid(cp, grids, B, n - 1))
    # effective degree in z at every prefix
    nz = np.stack([np.asarray(c != 0, dtype=bool) for c in coeffs])
    eff = np.full(size, -1, dtype=np.int64)
    for k in range(dz + 1):
        eff[nz[k]] = k
    count = 0
    hits = []  # (prefix index, z)
    full = np.nonzero(eff == -1)[0]
    count += len(full) * (2 * B + 1)
    if retain_points:
        for i in full:
            hits += [(int(i), z) for z in range(-B, B + 1)]
    for k in range(1, dz + 1):
        idx = np.nonzero(eff == k)[0]
        if len(idx) == 0:
            continue
        if k == 1:
            c0 = coeffs[0][idx]
            c1 = coeffs[1][idx]
            # |z| = |c0/c1| <= B, checked in floats with margin before exact work
            ratio = np.abs(c0.astype(float)) / np.abs(c1.astype(float))
            keep = ratio <= B * (1 + 1e-9) + 1
            idx = idx[keep]
            c0, c1 = c0[keep], c1[keep]
            for i, a, b in zip(idx.tolist(), c0.tolist(), c1.tolist()):
                q, r = divmod(-a, b)
                if r == 0 and -B <= q <= B:
                    count += 1
                    if retain_points:
                        hits.append((i, q))
            continue
        cols = [coeffs[j][idx] for j in range(k + 1)]
        cand = _integer_root_candidates(cols, B)
        for row, zs in cand.items():
            i = int(idx[row])
            exact = [int(cols[j][row]) for j in range(k + 1)]
            found = sorted({z for z in zs if _horner(exact, z) == 0})
            count += len(found)
            if retain_points:
                hits += [(i, z) for z in found]
    pts = None
    if retain_points:
        pts = []
        for i, z in sorted(hits):
            pre = tuple(int(g[i]) for g in grids)
            pts.append(pre + (z,))
    return count, pts


def _integer_root_candidates(cols, B):
    """Map row -> candidate integer roots in [-B, B] for the polynomials with
    coefficient columns cols[0..k] (cols[k] nonzero)."""
    k = len(cols) - 1
    lead = cols[k].astype(float)
    m = len(lead)
    out = {}
    # zero roots are found exactly
    zero_rows = np.nonzero(cols[0] == 0)[0]
    for r in zero_rows.tolist():
        out.setdefault(r, set()).add(0)
    comp = np.zeros((m, k, k))
    for j in range(k):
        comp[:, 0, j] = -cols[k - 1 - j].astype(float) / lead
    for j in range(1, k):
        comp[:, j, j - 1] = 1.0
    finite = np.all(np.isfinite(comp.reshape(m, -1)), axis=1)
    good = np.nonzero(finite)[0]
    if len(good):
        ev = np.linalg.eigvals(comp[good])
        re = ev.real
        tol = 1e-5 * np.maximum(1.0, np.abs(ev)) + 1e-6
        realish = np.abs(ev.imag) <= np.maximum(tol, 1e-3 * np.maximum(1.0, np.abs(re)))
        inbox = np.abs(re) <= B + 1.5
        mask = realish & inbox
        rows, cols_ = np.nonzero(mask)
        for r, c in zip(rows.tolist(), cols_.tolist()):
            z = re[r, c]
            base = int(math.floor(z))
            s = out.setdefault(int(good[r]), set())
            for cand in (base - 1, base, base + 1, base + 2):
                if -B <= cand <= B:
                    s.add(cand)
    bad = np.nonzero(~finite)[0]
    for r in bad.tolist():
        # overflowed floats: fall back to the rational root theorem
        exact = [int(c[r]) for c in cols]
        for q in rational_roots_bounded(exact, B):
            if q.denominator == 1 and -B <= q.numerator <= B:
                out.setdefault(r, set()).add(q.numerator)
    return out


def count_affine_grid(f: MultiPoly, B: int) -> int:
    """Full-grid oracle (tiny B only)."""
    from itertools import product

    return sum(1 for pt in product(range(-B, B + 1), repeat=f.nvars) if f.evaluate(pt) == 0)


def schwartz_zippel_bound(d: int, m: int, B: int) -> int:
    return d * (2 * B + 1) ** m


def height_cap(F: MultiPoly, B: int) -> int:
    d1 = F.degree(0)
    from dimgrowth.poly import height_norm

    return (d1 + 1) * height_norm(F) * B ** d1


def height_histogram(F: MultiPoly, B: int, predicate: Callable | None = None) -> HeightHistogram:
    """n_i = number of t in Q of height i such that F(x, t) = 0 for some
    integer x with |x| <= B (and ``predicate(x, t)`` if given)."""
    if F.is_zero():
        raise PolyError("zero polynomial")
    cap = height_cap(F, B)
    by_t = F.collect(1)
    d2 = max(by_t)
    ts = set()
    for x in range(-B, B + 1):
        c = [by_t[k].evaluate((x, 0)) if k in by_t else 0 for k in range(d2 + 1)]
        if not any(c):
            raise PolyError(f"F(x, t) vanishes identically at x = {x}")
        if not any(c[1:]):
            continue
        for t in set(rational_roots(c)):
            if height_q(t) <= cap and (predicate is None or predicate(x, t)):
                ts.add(t)
    counts = {}
    for t in ts:
        h = height_q(t)
        counts[h] = counts.get(h, 0) + 1
    return HeightHistogram(dict(sorted(counts.items())), cap)


# ---------------------------------------------------------------------------
# CSV


def write_points_csv(points, path, kind="bihom", nvars=None):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if kind == "bihom":
            w.writerow(["x", "y", "u", "v"])
            for P in points:
                w.writerow(P.coords())
        elif kind == "a1p1":
            w.writerow(["x", "t"])
            for x, t in points:
                w.writerow([x, str(t)])
        else:
            n = nvars or (len(points[0]) if points else 0)
            w.writerow([f"x{i + 1}" for i in range(n)])
            for p in points:
                w.writerow(list(p))
