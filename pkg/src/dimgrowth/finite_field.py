"""Finite fields F_{p^e} and univariate polynomial arithmetic over them.

Prime-field elements are plain ints in [0, p). Extension elements are tuples
of e ints (coefficients of 1, z, ..., z^(e-1) modulo a fixed irreducible).
Univariate polynomials are lists of field elements, lowest degree first,
with no trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import random
from functools import lru_cache


class GF:
    def __init__(self, p: int, e: int = 1, modulus=None):
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            self.modulus = None
            self.zero, self.one = 0, 1
        else:
            self.modulus = tuple(modulus) if modulus is not None else _first_irreducible(p, e)
            self.zero = (0,) * e
            self.one = (1,) + (0,) * (e - 1)

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # element ops --------------------------------------------------------
    def from_int(self, c):
        c %= self.p
        if self.e == 1:
            return c
        return (c,) + (0,) * (self.e - 1)

    def is_zero(self, a):
        return a == self.zero

    def add(self, a, b):
        p = self.p
        if self.e == 1:
            return (a + b) % p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        if self.e == 1:
            return (a - b) % p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        if self.e == 1:
            return (-a) % p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p = self.p
        if self.e == 1:
            return a * b % p
        e = self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        m = self.modulus  # monic, length e+1
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(e):
                    prod[k - e + j] -= c * m[j]
        return tuple(x % p for x in prod[:e])

    def scal(self, c: int, a):
        """Multiply by an integer."""
        if self.e == 1:
            return c * a % self.p
        return tuple(c * x % self.p for x in a)

    def pow(self, a, k):
        if self.e == 1:
            return pow(a, k, self.p)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        return self.pow(a, self.p)

    def pth_root(self, a):
        # the inverse of Frobenius is a -> a^(q/p)
        return self.pow(a, self.q // self.p)

    def elements(self):
        if self.e == 1:
            yield from range(self.p)
            return
        for n in range(self.q):
            digits = []
            for _ in range(self.e):
                n, r = divmod(n, self.p)
                digits.append(r)
            yield tuple(digits)

    def random(self, rng):
        if self.e == 1:
            return rng.randrange(self.p)
        return tuple(rng.randrange(self.p) for _ in range(self.e))

    def in_prime_field(self, a):
        return self.e == 1 or not any(a[1:])

    def to_int(self, a):
        """Prime-field value of an element of F_p (error otherwise)."""
        if self.e == 1:
            return a
        if any(a[1:]):
            raise ValueError("element is not in the prime field")
        return a[0]


# ---------------------------------------------------------------------------
# univariate polynomials over a field K


def trim(f, K):
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def padd(K, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return trim(out, K)


def psub(K, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.sub(a, b))
    return trim(out, K)


def pneg(K, f):
    return [K.neg(a) for a in f]


def pmul(K, f, g):
    if not f or not g:
        return []
    if K.e == 1:
        p = K.p
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return trim([c % p for c in out], K)
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not K.is_zero(a):
            for j, b in enumerate(g):
                out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(out, K)


def pscale(K, f, c):
    if K.is_zero(c):
        return []
    return [K.mul(a, c) for a in f]


def pdivmod(K, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    inv_lc = K.inv(g[-1])
    q = [K.zero] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if K.is_zero(c):
            continue
        c = K.mul(c, inv_lc)
        q[k] = c
        for j in range(dg + 1):
            r[k + j] = K.sub(r[k + j], K.mul(c, g[j]))
    return trim(q, K), trim(r[:dg] if dg else [], K)


def pmod(K, f, g):
    return pdivmod(K, f, g)[1]


def monic(K, f):
    if not f:
        return f
    return pscale(K, f, K.inv(f[-1]))


def pgcd(K, f, g):
    while g:
        f, g = g, pmod(K, f, g)
    return monic(K, f)


def pxgcd(K, f, g):
    """Return (d, s, t) with s f + t g = d monic."""
    r0, r1 = f, g
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(K, s0, pmul(K, q, s1))
        t0, t1 = t1, psub(K, t0, pmul(K, q, t1))
    if not r0:
        return [], [], []
    c = K.inv(r0[-1])
    return pscale(K, r0, c), pscale(K, s0, c), pscale(K, t0, c)


def pderiv(K, f):
    return trim([K.scal(i, f[i]) for i in range(1, len(f))], K)


def ppowmod(K, f, k, m):
    result = [K.one]
    base = pmod(K, f, m)
    while k:
        if k & 1:
            result = pmod(K, pmul(K, result, base), m)
        k >>= 1
        if k:
            base = pmod(K, pmul(K, base, base), m)
    return result


def peval(K, f, a):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, a), c)
    return acc


def from_ints(K, coeffs):
    return trim([K.from_int(c) for c in coeffs], K)


# ---------------------------------------------------------------------------
# factorization


def sqf_decomposition(K, f):
    """Square-free decomposition: list of (g, k) with f = lc * prod g^k."""
    f = monic(K, f)
    if len(f) <= 1:
        return []
    out = []
    p = K.p

    def rec(f, mult):
        if len(f) <= 1:
            return
        df = pderiv(K, f)
        if not df:
            # f is a p-th power: take p-th roots of coefficients
            g = [K.pth_root(f[i]) for i in range(0, len(f), p)]
            rec(g, mult * p)
            return
        c = pgcd(K, f, df)
        w = pdivmod(K, f, c)[0]
        i = 1
        while len(w) > 1:
            y = pgcd(K, w, c)
            z = pdivmod(K, w, y)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = pdivmod(K, c, y)[0]
        if len(c) > 1:
            g = [K.pth_root(c[i]) for i in range(0, len(c), p)]
            rec(g, mult * p)

    rec(f, 1)
    return out


def distinct_degree(K, f):
    """f monic square-free; return list of (product of degree-d factors, d)."""
    out = []
    x = [K.zero, K.one]
    h = x
    f = list(f)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(K, h, K.q, f)
        g = pgcd(K, f, psub(K, h, x))
        if len(g) > 1:
            out.append((g, d))
            f = pdivmod(K, f, g)[0]
            h = pmod(K, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(K, f, d, rng):
    """Split monic square-free f whose factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([K.random(rng) for _ in range(n)], K)
        if len(a) <= 1:
            continue
        if K.p == 2:
            # trace map to F_2: a + a^2 + ... + a^(2^(e d - 1))
            t = a
            acc = a
            for _ in range(K.e * d - 1):
                t = pmod(K, pmul(K, t, t), f)
                acc = padd(K, acc, t)
            b = acc
        else:
            b = ppowmod(K, a, (K.q ** d - 1) // 2, f)
            b = psub(K, b, [K.one])
        g = pgcd(K, f, b)
        if 1 < len(g) < len(f):
            h = pdivmod(K, f, g)[0]
            return equal_degree(K, g, d, rng) + equal_degree(K, h, d, rng)


def factor_univariate(K, f, seed=0):
    """Monic irreducible factors with multiplicity, sorted by (degree, repr)."""
    rng = random.Random(seed)
    out = []
    for g, k in sqf_decomposition(K, f):
        for h, d in distinct_degree(K, g):
            for u in equal_degree(K, h, d, rng):
                out.append((u, k))
    out.sort(key=lambda t: (len(t[0]), repr(t[0]), t[1]))
    return out


def is_irreducible_univariate(K, f):
    f = monic(K, f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if len(pgcd(K, f, pderiv(K, f))) > 1:
        return False
    x = [K.zero, K.one]
    h = x
    for d in range(1, n // 2 + 1):
        h = ppowmod(K, h, K.q, f)
        if len(pgcd(K, f, psub(K, h, x))) > 1:
            return False
    return True


def roots(K, f):
    """Distinct roots in K (brute force for small fields)."""
    if K.q <= 4096:
        return [a for a in K.elements() if K.is_zero(peval(K, f, a))]
    out = []
    for u, _ in factor_univariate(K, f):
        if len(u) == 2:
            out.append(K.neg(u[0]))
    return out


@lru_cache(maxsize=None)
def _first_irreducible(p, e):
    """Lexicographically first monic irreducible of degree e over F_p."""
    Fp = GF(p)
    for n in range(p ** e):
        tail = []
        m = n
        for _ in range(e):
            m, r = divmod(m, p)
            tail.append(r)
        if tail[0] == 0:
            continue
        f = tail + [1]
        if is_irreducible_univariate(Fp, f):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def field(p, e=1):
    return GF(p, e)
