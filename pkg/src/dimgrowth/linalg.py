"""Exact integer linear algebra: Bareiss determinants, echelon forms, kernels,
gcd of maximal minors, p-adic valuations."""
from __future__ import annotations

import math
from functools import reduce
from itertools import combinations


def det_bareiss(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri = a[i]
            rk = a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _row_gcd(r):
    return reduce(math.gcd, r, 0)


def echelon(rows, ncols=None):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns). Rows are divided by their content
    as we go, which keeps entries small and does not change the row space
    over Q.
    """
    a = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(a):
            break
        piv = None
        best = None
        for i in range(r, len(a)):
            v = a[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, len(a)):
            v = a[i][c]
            if v:
                g = math.gcd(pv, v)
                m1, m2 = pv // g, v // g
                ri = a[i]
                for j in range(c, ncols):
                    ri[j] = ri[j] * m1 - pr[j] * m2
                g2 = _row_gcd(ri)
                if g2 > 1:
                    a[i] = [x // g2 for x in ri]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(echelon(rows, ncols)[1])


def primitive_vector(v):
    g = _row_gcd(v)
    if g == 0:
        return list(v)
    v = [x // g for x in v]
    for x in v:
        if x:
            if x < 0:
                v = [-y for y in v]
            break
    return v


def kernel(rows, ncols):
    """Integer basis (primitive vectors) of the right kernel over Q.

    One vector per free column: set that column to 1, others free to 0 and
    back-substitute with fractions cleared at the end.
    """
    from fractions import Fraction

    ech, pivots = echelon(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in reversed(list(zip(ech, pivots))):
            s = sum((Fraction(row[j]) * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (q.denominator for q in x), 1)
        basis.append(primitive_vector([int(q * den) for q in x]))
    return basis


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(r, v)) for r in a]


def padic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def maximal_minor_gcd(rows):
    """gcd of all maximal minors of an s x r integer matrix with s <= r.

    Column operations by unimodular matrices preserve the gcd of the maximal
    minors, so reduce the transpose to Hermite-like form with integer row
    operations; the product of the diagonal of the resulting s x s block is
    the answer.
    """
    s = len(rows)
    if s == 0:
        return 1
    r = len(rows[0])
    if s > r:
        raise ValueError("need at least as many columns as rows")
    # work on the transpose: r rows of length s; row ops there = column ops here
    t = [list(col) for col in zip(*rows)]
    det = 1
    top = 0
    for c in range(s):
        # euclid down column c among rows top..r-1
        while True:
            nz = [i for i in range(top, r) if t[i][c]]
            if not nz:
                return 0
            i0 = min(nz, key=lambda i: abs(t[i][c]))
            t[top], t[i0] = t[i0], t[top]
            done = True
            pv = t[top][c]
            for i in range(top + 1, r):
                if t[i][c]:
                    q = t[i][c] // pv
                    t[i] = [a - q * b for a, b in zip(t[i], t[top])]
                    if t[i][c]:
                        done = False
            if done:
                break
        det *= abs(t[top][c])
        top += 1
    return det


def maximal_minor_gcd_brute(rows):
    """Same quantity by listing every maximal minor. Small inputs only."""
    s = len(rows)
    r = len(rows[0])
    g = 0
    for cols in combinations(range(r), s):
        g = math.gcd(g, det_bareiss([[row[c] for c in cols] for row in rows]))
    return g


# fast routes through FLINT; the pure-Python versions above serve as oracles


def kernel_flint(rows, ncols):
    """Same contract as ``kernel`` (primitive integer basis, one vector per
    free column up to basis change), computed with FLINT."""
    import flint

    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    X, n = flint.fmpz_mat(rows).nullspace()
    return [primitive_vector([int(X[i, j]) for i in range(ncols)]) for j in range(n)]


def rank_mod_p(rows, p):
    """Rank over F_p (a lower bound for the rank over Q)."""
    import flint

    if not rows or not rows[0]:
        return 0
    return flint.nmod_mat([[x % p for x in r] for r in rows], p).rank()


def unimodular_row_reduce(cols, n):
    """Row-reduce the n x k integer matrix whose columns are ``cols``.

    Returns (W, Winv) with W unimodular and W A = [H; 0], H square upper
    triangular of size rank(A). The last n - rank rows of W are a basis of the
    integer vectors orthogonal to every column (a saturated lattice).
    """
    A = [[c[i] for c in cols] for i in range(n)]
    k = len(cols)
    W = [[int(i == j) for j in range(n)] for i in range(n)]
    Winv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        W[i], W[j] = W[j], W[i]
        for row in Winv:
            row[i], row[j] = row[j], row[i]

    def addmul(i, j, q):
        # row_i += q * row_j
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        W[i] = [a + q * b for a, b in zip(W[i], W[j])]
        for row in Winv:
            row[j] -= q * row[i]

    r = 0
    for c in range(k):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            if piv != r:
                swap(r, piv)
            done = True
            for i in range(r + 1, n):
                if A[i][c]:
                    addmul(i, r, -(A[i][c] // A[r][c]))
                    if A[i][c]:
                        done = False
            if done:
                break
        if any(A[i][c] for i in range(r, n)):
            r += 1
    return W, Winv, r


def gauss_reduce(u, w):
    """Lagrange-Gauss reduction of two independent integer vectors.

    Returns (u', w') spanning the same lattice with |u'| <= |w'| and
    |u'.w'| <= |u'|^2 / 2.
    """
    from fractions import Fraction

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    u, w = list(u), list(w)
    if dot(u, u) > dot(w, w):
        u, w = w, u
    while True:
        q = Fraction(dot(u, w), dot(u, u))
        m = math.floor(q + Fraction(1, 2))
        w = [b - m * a for a, b in zip(u, w)]
        if dot(w, w) >= dot(u, u):
            return u, w
        u, w = w, u
