"""Primes, Mertens sums, point counts over F_p and the bad-prime product b(f)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from dimgrowth.factor import is_absolutely_irreducible_mod_p, is_absolutely_irreducible_over_Qbar, is_irreducible_over_Q
from dimgrowth.poly import BiHomPoly, MultiPoly, PolyError, height_norm


class PrimeTable:
    """Sieve of Eratosthenes up to ``limit`` (inclusive)."""

    def __init__(self, limit: int):
        self.limit = limit
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for i in range(2, int(math.isqrt(limit)) + 1):
            if sieve[i]:
                sieve[i * i :: i] = False
        self._sieve = sieve
        self.primes = np.nonzero(sieve)[0].tolist()

    def is_prime(self, n):
        if n > self.limit:
            raise ValueError(f"{n} is beyond the sieve limit {self.limit}")
        return n >= 2 and bool(self._sieve[n])

    def upto(self, n):
        import bisect

        return self.primes[: bisect.bisect_right(self.primes, n)]

    def between(self, lo, hi):
        """Primes p with lo < p <= hi."""
        import bisect

        return self.primes[bisect.bisect_right(self.primes, lo) : bisect.bisect_right(self.primes, hi)]


def find_prime_in_range(lo: int, hi: int) -> int:
    """Largest prime in [lo, hi]."""
    from sympy import prevprime

    if hi < 2 or hi < lo:
        raise ValueError(f"no prime in [{lo}, {hi}]")
    p = hi if _isprime(hi) else (prevprime(hi) if hi > 2 else None)
    if p is None or p < lo:
        raise ValueError(f"no prime in [{lo}, {hi}]")
    return int(p)


def _isprime(n):
    from sympy import isprime

    return bool(isprime(n))


def mertens_sum(n: int) -> float:
    """Sum of log(p)/p over primes p <= n, accumulated in increasing p."""
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 0.0
    for p in PrimeTable(n).primes:
        total += math.log(p) / p
    return total


# ---------------------------------------------------------------------------
# counts over F_p


def _p1_points(p):
    return [(x, 1) for x in range(p)] + [(1, 0)]


def _chart_poly(f: BiHomPoly, P, Q):
    """Local affine equation of f around ((P),(Q)) with the point at the origin,
    as a dict {(i, j): c} (integer coefficients)."""
    # chart: dehomogenize at the nonzero coordinate of each factor
    x, y = P
    u, v = Q
    fx = 1 if y != 0 else 0  # y != 0: set Y=1, local coordinate s = X - x
    fu = 1 if v != 0 else 0
    out = {}
    for (a, b, c, d), k in f.base.terms.items():
        # first factor
        if fx:
            # X = x + s, Y = 1: X^a
            first = _binom_shift(a, x)  # {i: coeff of s^i}
        else:
            # Y = 0 + s, X = 1: Y^b
            first = {b: 1}
        if fu:
            second = _binom_shift(c, u)
        else:
            second = {d: 1}
        for i, ci in first.items():
            for j, cj in second.items():
                out[(i, j)] = out.get((i, j), 0) + k * ci * cj
    return out


def _binom_shift(a, x0):
    """(x0 + s)^a as {i: coeff}."""
    return {i: math.comb(a, i) * x0 ** (a - i) for i in range(a + 1)}


def multiplicity_mod_p(f: BiHomPoly, p: int, P, Q) -> int:
    """Multiplicity of the point (P, Q) of P^1(F_p)^2 on f mod p (0 if off the
    curve); infinite multiplicity is impossible for f mod p != 0 unless the
    local equation vanishes, in which case an error is raised."""
    loc = _chart_poly(f, P, Q)
    best = None
    for (i, j), c in loc.items():
        if c % p:
            if best is None or i + j < best:
                best = i + j
    if best is None:
        raise PolyError("f vanishes mod p")
    return best


def _eval_grid_mod_p(f: BiHomPoly, p):
    pts = _p1_points(p)
    xs = np.array([q[0] for q in pts], dtype=np.int64)
    ys = np.array([q[1] for q in pts], dtype=np.int64)
    n = len(pts)
    val = np.zeros((n, n), dtype=np.int64)
    for (a, b, c, d), k in f.base.terms.items():
        first = (pow_mod_vec(xs, a, p) * pow_mod_vec(ys, b, p)) % p
        second = (pow_mod_vec(xs, c, p) * pow_mod_vec(ys, d, p)) % p
        val = (val + (k % p) * np.outer(first, second)) % p
    return pts, val


def pow_mod_vec(v, k, p):
    out = np.ones_like(v)
    for _ in range(k):
        out = (out * v) % p
    return out


def weil_count_mod_p(f: BiHomPoly, p: int):
    """(n_set, n_mult) for the points of f mod p on P^1(F_p) x P^1(F_p)."""
    if all(c % p == 0 for c in f.base.terms.values()):
        raise PolyError(f"f vanishes identically mod {p}")
    pts, val = _eval_grid_mod_p(f, p)
    zi, zj = np.nonzero(val == 0)
    n_set = len(zi)
    n_mult = 0
    for i, j in zip(zi.tolist(), zj.tolist()):
        n_mult += multiplicity_mod_p(f, p, pts[i], pts[j])
    return n_set, n_mult


def weil_bound(d1: int, d2: int, p: int) -> float:
    return p + 1 + 2 * (d1 - 1) * (d2 - 1) * math.sqrt(p)


# ---------------------------------------------------------------------------
# b(f)


@dataclass
class BadPrimeReport:
    f: MultiPoly
    cap: int
    bad_primes: list = field(default_factory=list)  # (p, reason)
    b: float = 1.0
    certified: bool = False
    absolutely_irreducible: bool = True

    def primes(self):
        return [p for p, _ in self.bad_primes]

    def to_json(self):
        return {
            "f": self.f.to_json(),
            "cap": self.cap,
            "bad_primes": [{"p": p, "reason": r} for p, r in self.bad_primes],
            "b": self.b,
            "certified": self.certified,
        }


def default_b_cap(f: BiHomPoly) -> int:
    return max(f.absdeg ** 2, 2 ** 20)


def compute_b(f: BiHomPoly, cap: int | None = None, check_irreducible: bool = True) -> BadPrimeReport:
    """Product of exp(log p / p) over primes |d|^2 < p <= cap at which f mod p
    is not absolutely irreducible; 0 when f is not absolutely irreducible.

    The infinite product is truncated at ``cap``; ``certified`` is only set
    when the value is provably exact (the b = 0 case).
    """
    if cap is None:
        cap = default_b_cap(f)
    if check_irreducible and not is_irreducible_over_Q(f.base):
        raise PolyError("f is reducible over Q")
    if not is_absolutely_irreducible_over_Qbar(f):
        return BadPrimeReport(f.base, cap, [], 0.0, True, False)
    lo = f.absdeg ** 2
    bad = []
    log_sum = 0.0
    for p in PrimeTable(cap).between(lo, cap):
        res = is_absolutely_irreducible_mod_p(f, p)
        if not res:
            bad.append((p, "vanishes-mod-p" if res.vanishes else "reducible-mod-p"))
            log_sum += math.log(p) / p
    return BadPrimeReport(f.base, cap, bad, math.exp(log_sum), False, True)


def b_upper_value(f: BiHomPoly, C: float) -> float:
    return C * max(math.log(height_norm(f.base)) / f.absdeg, 1.0) ** 2


def check_b_upper(f: BiHomPoly, C: float | None = None, cap: int = 10 ** 4, b: float | None = None):
    """Whether b(f) <= C max(log||f|| / |d|, 1)^2. Returns (ok, b, bound)."""
    if C is None:
        from dimgrowth.calibration import constant

        C = constant("b_upper_C")
    if b is None:
        b = compute_b(f, cap).b
    bound = b_upper_value(f, C)
    return b <= bound, b, bound
