"""Sparse multivariate integer polynomials.

Terms are stored as a dict mapping exponent tuples to nonzero ``int``
coefficients. Iteration follows graded lexicographic order (highest first),
which also fixes the sign convention of primitive parts.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from dimgrowth.linalg import det_bareiss


class PolyError(ValueError):
    pass


class PolyParseError(PolyError):
    def __init__(self, msg, line=1, col=1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, int] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(k) for k in e)
                if len(e) != n:
                    raise PolyError(f"exponent {e} does not match {n} variables")
                if any(k < 0 for k in e):
                    raise PolyError(f"negative exponent in {e}")
                c = int(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name_or_index, power=1):
        vars = tuple(vars)
        i = vars.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * len(vars)
        e[i] = power
        return cls(vars, {tuple(e): 1})

    @classmethod
    def gens(cls, vars):
        return tuple(cls.var(vars, i) for i in range(len(vars)))

    @classmethod
    def from_univariate(cls, coeffs, vars=("x",), index=0):
        """coeffs[k] is the coefficient of var**k."""
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(vars)
            e[index] = k
            terms[tuple(e)] = c
        return cls(vars, terms)

    # basic protocol -----------------------------------------------------
    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self):
        """(exps, coeff) pairs in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda it: _grlex_key(it[0]), reverse=True)

    def leading_coefficient(self):
        if not self.terms:
            return 0
        return self.sorted_terms()[0][1]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, v):
        i = self._index(v)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def used_vars(self):
        """Indices of variables that actually occur."""
        return [i for i in range(self.nvars) if any(e[i] for e in self.terms)]

    def coefficients(self):
        return list(self.terms.values())

    def _index(self, v):
        return self.vars.index(v) if isinstance(v, str) else v

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise PolyError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.vars, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.vars}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative int")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale_exact(self, d):
        """Divide every coefficient by ``d`` (must divide exactly)."""
        t = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise PolyError(f"{d} does not divide coefficient {c}")
            t[e] = q
        return MultiPoly(self.vars, t)

    # calculus / evaluation ----------------------------------------------
    def partial(self, v):
        i = self._index(v)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return MultiPoly(self.vars, t)

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise PolyError("wrong number of coordinates")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def collect(self, v):
        """Split by powers of variable ``v``: {k: coefficient polynomial}."""
        i = self._index(v)
        parts = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[ne] = c
        return {k: MultiPoly(self.vars, t) for k, t in parts.items()}

    def univariate_coeffs(self, v=None):
        """Dense coefficient list (low to high) for a polynomial in one variable."""
        used = self.used_vars()
        if v is None:
            if len(used) > 1:
                raise PolyError("polynomial is not univariate")
            i = used[0] if used else 0
        else:
            i = self._index(v)
            if any(j != i for j in used):
                raise PolyError("polynomial involves other variables")
        deg = max((e[i] for e in self.terms), default=0)
        out = [0] * (deg + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    # variable bookkeeping -------------------------------------------------
    def with_vars(self, new_vars):
        """Rename variables (same count)."""
        if len(new_vars) != self.nvars:
            raise PolyError("rename needs the same number of variables")
        return MultiPoly(new_vars, self.terms)

    def embed(self, new_vars):
        """Re-express in a variable list that contains every used variable."""
        idx = []
        for i, name in enumerate(self.vars):
            if name in new_vars:
                idx.append(new_vars.index(name))
            elif any(e[i] for e in self.terms):
                raise PolyError(f"variable {name} missing from {new_vars}")
            else:
                idx.append(None)
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for k, j in zip(e, idx):
                if j is not None:
                    ne[j] += k
            t[tuple(ne)] = c
        return MultiPoly(new_vars, t)

    def drop_unused(self):
        keep = [self.vars[i] for i in self.used_vars()]
        return self.embed(tuple(keep))

    # serialization ------------------------------------------------------
    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [{"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            vars = obj["vars"]
            terms = {}
            for t in obj["terms"]:
                e = tuple(t["exps"])
                terms[e] = terms.get(e, 0) + int(t["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PolyError(f"malformed polynomial JSON: {exc}") from None
        return cls(vars, terms)


# ---------------------------------------------------------------------------
# text format


def _fmt_term(e, c, vars, first):
    mon = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(vars, e) if k)
    a = abs(c)
    if not mon:
        body = str(a)
    elif a == 1:
        body = mon
    else:
        body = f"{a}*{mon}"
    if first:
        return body if c > 0 else "-" + body
    return (" + " if c > 0 else " - ") + body


def to_text(f: MultiPoly) -> str:
    if not f.terms:
        return "0"
    return "".join(_fmt_term(e, c, f.vars, i == 0) for i, (e, c) in enumerate(f.sorted_terms()))


def dump_text(f: MultiPoly) -> str:
    return f"vars: {','.join(f.vars)}\n{to_text(f)}\n"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


class _Parser:
    def __init__(self, text, vars, line_starts):
        self.text = text
        self.vars = tuple(vars)
        self.line_starts = line_starts
        self.toks = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise self.error(f"unexpected character {text[pos]!r}", pos)
            start = m.start(m.lastindex)
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num), start))
            elif name is not None:
                if name not in self.vars:
                    raise self.error(f"undeclared variable {name!r}", start)
                self.toks.append(("var", name, start))
            else:
                self.toks.append(("op", "^" if op == "**" else op, start))
            pos = m.end()
        self.i = 0
        # end of input is reported just after the last non-blank character
        self.end = len(text.rstrip())

    def error(self, msg, pos):
        line = 0
        for k, s in enumerate(self.line_starts):
            if s <= pos:
                line = k
        return PolyParseError(msg, line + 1, pos - self.line_starts[line] + 1)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        if not self.toks:
            raise self.error("empty polynomial", self.end)
        p = self.expr()
        t = self.peek()
        if t is not None:
            raise self.error(f"unexpected token {t[1]!r}", t[2])
        return p

    def expr(self):
        sign = 1
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term() * sign
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            t = self.peek()
            if t is None:
                return acc
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif t[0] in ("num", "var") or (t[0] == "op" and t[1] == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        t = self.peek()
        if t and t[0] == "op" and t[1] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            k = self.take()
            if k is None or k[0] != "num":
                raise self.error("exponent must be a non-negative integer", k[2] if k else self.end)
            return base ** k[1]
        return base

    def atom(self):
        t = self.take()
        if t is None:
            raise self.error("unexpected end of input", self.end)
        kind, val, pos = t
        if kind == "num":
            return MultiPoly.constant(self.vars, val)
        if kind == "var":
            return MultiPoly.var(self.vars, val)
        if val == "(":
            inner = self.expr()
            close = self.take()
            if close is None or close[1] != ")":
                raise self.error("missing ')'", close[2] if close else self.end)
            return inner
        raise self.error(f"unexpected token {val!r}", pos)


def parse_poly(text: str, vars: Sequence[str]) -> MultiPoly:
    """Parse an expression over declared variables (``+ - * ^`` and parentheses)."""
    starts = [0] + [m.end() for m in re.finditer("\n", text)]
    return _Parser(text, vars, starts).parse()


def load_text(text: str) -> MultiPoly:
    """Parse the file format: a ``vars: x,y,z`` header followed by one expression."""
    lines = text.split("\n")
    header_at = None
    for k, line in enumerate(lines):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        header_at = k
        break
    if header_at is None:
        raise PolyParseError("empty input")
    head = lines[header_at].strip()
    if not head.startswith("vars:"):
        raise PolyParseError("expected header 'vars: ...'", header_at + 1, 1)
    vars = [v.strip() for v in head[5:].split(",") if v.strip()]
    if not vars or len(set(vars)) != len(vars):
        raise PolyParseError("bad variable list", header_at + 1, 6)
    # keep line numbering of the original text for error messages
    body_lines = ["" if (k <= header_at or ln.strip().startswith("#")) else ln for k, ln in enumerate(lines)]
    body = "\n".join(body_lines)
    return parse_poly(body, vars)


def load_poly(text: str) -> MultiPoly:
    """Accept either the text format or the JSON form."""
    s = text.lstrip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PolyParseError(exc.msg, exc.lineno, exc.colno) from None
        return MultiPoly.from_json(obj)
    return load_text(text)


def load_poly_list(text: str) -> list:
    """Several polynomials over shared variables: a ``vars:`` header and one
    expression per line, or JSON (a list of polynomial objects, or
    ``{"polys": [...]}``)."""
    s = text.lstrip()
    if s.startswith("{") or s.startswith("["):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PolyParseError(exc.msg, exc.lineno, exc.colno) from None
        items = obj["polys"] if isinstance(obj, dict) and "polys" in obj else obj
        if not isinstance(items, list):
            raise PolyError("expected a list of polynomials")
        return [MultiPoly.from_json(o) for o in items]
    lines = text.split("\n")
    head = None
    out = []
    for k, line in enumerate(lines):
        t = line.strip()
        if not t or t.startswith("#"):
            continue
        if head is None:
            if not t.startswith("vars:"):
                raise PolyParseError("expected header 'vars: ...'", k + 1, 1)
            head = [v.strip() for v in t[5:].split(",") if v.strip()]
            if not head or len(set(head)) != len(head):
                raise PolyParseError("bad variable list", k + 1, 6)
            continue
        # pad with newlines so parse errors report the file line
        out.append(parse_poly("\n" * k + line, head))
    if head is None:
        raise PolyParseError("empty input")
    if not out:
        raise PolyParseError("no polynomials after the header", len(lines), 1)
    return out


# ---------------------------------------------------------------------------
# bihomogeneous polynomials

BIHOM_VARS = ("X", "Y", "U", "V")


@dataclass(frozen=True)
class BiHomPoly:
    """Polynomial in (X,Y,U,V), homogeneous of degree d1 in X,Y and d2 in U,V."""

    base: MultiPoly
    bidegree: tuple

    def __post_init__(self):
        if self.base.nvars != 4:
            raise PolyError("a bihomogeneous polynomial needs exactly four variables")
        d = bidegree_check(self.base)
        if d != tuple(self.bidegree):
            raise PolyError(f"declared bidegree {self.bidegree} but polynomial has {d}")

    @classmethod
    def from_poly(cls, f: MultiPoly):
        return cls(f, bidegree_check(f))

    @classmethod
    def parse(cls, text, vars=BIHOM_VARS):
        return cls.from_poly(parse_poly(text, vars))

    @property
    def d1(self):
        return self.bidegree[0]

    @property
    def d2(self):
        return self.bidegree[1]

    @property
    def absdeg(self):
        return self.bidegree[0] * self.bidegree[1]

    @property
    def c_f(self):
        """Coefficient of X^d1 U^d2."""
        return self.base.terms.get((self.d1, 0, self.d2, 0), 0)

    def height(self):
        return height_norm(self.base)

    def __call__(self, x, y, u, v):
        return self.base.evaluate((x, y, u, v))

    def fiber_form(self, x, y):
        """Coefficients c[k] of U^k V^(d2-k) after fixing (X:Y) = (x:y)."""
        out = [0] * (self.d2 + 1)
        for (a, b, c, _), coef in self.base.terms.items():
            out[c] += coef * x ** a * y ** b
        return out

    def swap(self):
        """Exchange the roles of (X,Y) and (U,V)."""
        t = {(c, d, a, b): k for (a, b, c, d), k in self.base.terms.items()}
        return BiHomPoly(MultiPoly(self.base.vars, t), (self.d2, self.d1))

    def __str__(self):
        return to_text(self.base)


# ---------------------------------------------------------------------------
# operations


def height_norm(f: MultiPoly) -> int:
    if f.is_zero():
        raise PolyError("undefined height: zero polynomial")
    return max(abs(c) for c in f.terms.values())


def content_primitive(f: MultiPoly):
    """Return (content, f / content) with content > 0.

    The sign of f is kept, so content * primitive == f. Use
    ``canonical_primitive`` for a representative with positive leading
    coefficient.
    """
    if f.is_zero():
        raise PolyError("content of the zero polynomial")
    g = reduce(math.gcd, (abs(c) for c in f.terms.values()))
    return g, f.scale_exact(g)


def canonical_primitive(f: MultiPoly) -> MultiPoly:
    """Primitive part with positive graded-lex leading coefficient."""
    prim = content_primitive(f)[1]
    return -prim if prim.leading_coefficient() < 0 else prim


def primitive_part(f):
    return content_primitive(f)[1]


def bidegree_check(f: MultiPoly):
    """Bidegree (d1, d2) of a polynomial in (X,Y,U,V); raise if not bihomogeneous."""
    if f.is_zero():
        raise PolyError("zero polynomial has no bidegree")
    if f.nvars != 4:
        raise PolyError("bidegree needs four variables (X,Y,U,V)")
    d = None
    for e, c in f.sorted_terms():
        de = (e[0] + e[1], e[2] + e[3])
        if d is None:
            d = de
        elif de != d:
            mon = _fmt_term(e, c, f.vars, True)
            raise PolyError(f"not bihomogeneous: term {mon} has bidegree {de}, expected {d}")
    return d


def substitute(f: MultiPoly, mapping: Mapping, target_vars: Sequence[str] | None = None) -> MultiPoly:
    """Compose ``f`` with polynomials given per variable (name or index).

    Variables absent from ``mapping`` map to the variable of the same name in
    the target ring.
    """
    images = {}
    for k, g in mapping.items():
        i = f._index(k)
        images[i] = g
    if target_vars is None:
        if images:
            target_vars = next(iter(images.values())).vars
        else:
            target_vars = f.vars
    target_vars = tuple(target_vars)
    for i in range(f.nvars):
        if i not in images:
            name = f.vars[i]
            if name in target_vars:
                images[i] = MultiPoly.var(target_vars, name)
            elif any(e[i] for e in f.terms):
                raise PolyError(f"no image for variable {name}")
            else:
                images[i] = MultiPoly.constant(target_vars, 1)
    for g in images.values():
        if g.vars != target_vars:
            raise PolyError("images must share one variable list")
    cache = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    result = MultiPoly(target_vars)
    acc = {}
    for e, c in f.terms.items():
        term = MultiPoly.constant(target_vars, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        for te, tc in term.terms.items():
            acc[te] = acc.get(te, 0) + tc
    result = MultiPoly(target_vars, acc)
    return result


def homogenize_pair(f: MultiPoly, d1: int, d2: int, vars=BIHOM_VARS) -> BiHomPoly:
    """Bihomogenize f(x, t) to bidegree (d1, d2): x -> X/Y, t -> U/V."""
    if f.nvars != 2:
        raise PolyError("homogenize_pair expects a polynomial in two variables")
    if f.is_zero():
        raise PolyError("cannot homogenize the zero polynomial")
    if f.degree(0) > d1 or f.degree(1) > d2:
        raise PolyError(f"degrees ({f.degree(0)}, {f.degree(1)}) exceed ({d1}, {d2})")
    t = {(a, d1 - a, b, d2 - b): c for (a, b), c in f.terms.items()}
    return BiHomPoly(MultiPoly(vars, t), (d1, d2))


def dehomogenize_pair(F: BiHomPoly | MultiPoly, vars=("x", "t")) -> MultiPoly:
    """Set Y = V = 1."""
    base = F.base if isinstance(F, BiHomPoly) else F
    t = {}
    for (a, b, c, d), k in base.terms.items():
        t[(a, c)] = t.get((a, c), 0) + k
    return MultiPoly(vars, t)


def weighted_top_part(f: MultiPoly, weights: Sequence[int]) -> MultiPoly:
    if f.is_zero():
        return f
    if len(weights) != f.nvars:
        raise PolyError("one weight per variable required")
    wdeg = {e: sum(w * k for w, k in zip(weights, e)) for e in f.terms}
    top = max(wdeg.values())
    return MultiPoly(f.vars, {e: c for e, c in f.terms.items() if wdeg[e] == top})


def top_degree_part(f: MultiPoly) -> MultiPoly:
    return weighted_top_part(f, [1] * f.nvars)


def is_homogeneous(f: MultiPoly) -> bool:
    return len({sum(e) for e in f.terms}) <= 1


def binary_form_coeffs(F: MultiPoly, d: int | None = None):
    """Coefficients [a_d, ..., a_0] of a binary form sum a_k T^k S^(d-k)."""
    if F.nvars != 2:
        raise PolyError("binary form must be in two variables")
    if not is_homogeneous(F):
        raise PolyError("binary form must be homogeneous")
    if d is None:
        d = F.total_degree() if not F.is_zero() else 0
    out = [0] * (d + 1)
    for (a, b), c in F.terms.items():
        if a + b != d:
            raise PolyError(f"term of degree {a + b} in a form of degree {d}")
        out[d - a] = c
    return out


def sylvester_matrix(a, b):
    """Sylvester matrix of coefficient lists (highest degree first); rows of
    ``a`` on top."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(a) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(b) + [0] * (size - n - 1 - i))
    return rows


def resultant_hom(F0: MultiPoly, F1: MultiPoly) -> int:
    """Resultant of two binary forms of the same degree (Sylvester determinant,
    F0 rows first)."""
    d0 = F0.total_degree() if not F0.is_zero() else 0
    d1 = F1.total_degree() if not F1.is_zero() else 0
    if F0.is_zero() or F1.is_zero():
        return 0
    if d0 != d1:
        raise PolyError(f"degree mismatch: {d0} vs {d1}")
    a = binary_form_coeffs(F0, d0)
    b = binary_form_coeffs(F1, d1)
    if d0 == 0:
        return 1
    return det_bareiss(sylvester_matrix(a, b))


def univariate_resultant(a, b):
    """Resultant of integer coefficient lists given highest degree first."""
    return det_bareiss(sylvester_matrix(a, b))


def is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def reduce_mod_p(f: MultiPoly, p: int) -> MultiPoly:
    if not is_prime(p):
        raise PolyError(f"{p} is not prime")
    return MultiPoly(f.vars, {e: c % p for e, c in f.terms.items()})


def poly_divide(f: MultiPoly, g: MultiPoly):
    """Exact division over Q in lex order; returns (quotient, remainder) with
    Fraction-valued terms dicts converted to polys when integral.

    Since {g} is a Groebner basis of (g), remainder zero iff g divides f.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lex = lambda e: e  # noqa: E731
    gt = sorted(g.terms.items(), key=lambda it: lex(it[0]), reverse=True)
    ge, gc = gt[0]
    rem = {e: Fraction(c) for e, c in f.terms.items()}
    quo = {}
    out_rem = {}
    while rem:
        e = max(rem, key=lex)
        c = rem[e]
        if all(a >= b for a, b in zip(e, ge)):
            qe = tuple(a - b for a, b in zip(e, ge))
            qc = c / gc
            quo[qe] = quo.get(qe, 0) + qc
            for te, tc in gt:
                ne = tuple(a + b for a, b in zip(qe, te))
                v = rem.get(ne, 0) - qc * tc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        else:
            out_rem[e] = c
            del rem[e]
    return quo, out_rem


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    """True iff g divides f in Q[vars] (equivalently in Z[vars] for primitive g)."""
    if f.is_zero():
        return True
    _, r = poly_divide(f, g)
    return not r


def exact_quotient(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    q, r = poly_divide(f, g)
    if r:
        raise PolyError("division is not exact")
    terms = {}
    for e, c in q.items():
        if c.denominator != 1:
            raise PolyError("quotient has non-integer coefficients")
        terms[e] = int(c)
    return MultiPoly(f.vars, terms)


def from_sympy(expr, vars):
    import sympy

    P = sympy.Poly(expr, *[sympy.Symbol(v) for v in vars])
    return MultiPoly(vars, {tuple(m): int(c) for m, c in zip(P.monoms(), P.coeffs())})


def to_sympy(f: MultiPoly):
    import sympy

    syms = [sympy.Symbol(v) for v in f.vars]
    return sympy.Poly.from_dict({e: c for e, c in f.terms.items()} or {(0,) * f.nvars: 0}, *syms, domain="ZZ")
