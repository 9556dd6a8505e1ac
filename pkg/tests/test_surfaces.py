import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimgrowth.calibration import constant
from dimgrowth.corpus import SURFACES, affine_curve_corpus, cylinder_corpus, surface
from dimgrowth.points import count_affine_brute, enumerate_p1
from dimgrowth.poly import MultiPoly, PolyError, parse_poly, resultant_hom, substitute, top_degree_part
from dimgrowth.surfaces import (
    Line3,
    LineFamily,
    count_integral_values,
    count_integral_values_direct,
    count_lines_union,
    count_t_with_integer_root,
    cylinder_test,
    directions_at_infinity,
    integral_points_on_line,
    inverse_height_bound,
    inverse_height_sum,
    is_cylindrical,
    line_intersection,
    linear_form_poly,
    lines_with_direction,
    on_lines,
    resultant_divisor_sieve,
    shortest_basis_plane,
    walkowiak_bound_check,
    walkowiak_E,
    walkowiak_shift,
)

XYZ = ("x", "y", "z")
XT = ("x", "t")


def P3(text):
    return parse_poly(text, XYZ)


def reconstructs(f, w):
    L = [linear_form_poly(a, f.vars) for a in w.forms]
    return substitute(w.g, {i: L[i] for i in range(len(L))}, f.vars) == f


# --- cylinders ----------------------------------------------------------------


def test_cylinder_examples():
    f = P3("(x + y)^3 - z + 1")
    w = cylinder_test(f)
    assert w.directions == [[1, -1, 0]]
    assert reconstructs(f, w)
    assert cylinder_test(P3("x*y*z - 1")) is None
    w = cylinder_test(P3("x^2 + y^2"))
    assert w.directions == [[0, 0, 1]] and reconstructs(P3("x^2 + y^2"), w)
    with pytest.raises(PolyError):
        cylinder_test(P3("7"))


def test_cylinder_corpus_detected():
    for f, _, _, _ in cylinder_corpus():
        w = cylinder_test(f)
        assert w is not None and reconstructs(f, w)


forms3 = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)).filter(any)


@given(forms3, forms3, st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), min_size=1, max_size=4))
@settings(max_examples=40)
def test_cylinders_built_from_two_forms_are_found(l1, l2, gterms):
    g = MultiPoly(("s", "t"), gterms)
    if g.is_constant():
        return
    f = substitute(g, {0: linear_form_poly(l1, XYZ), 1: linear_form_poly(l2, XYZ)}, XYZ)
    if f.is_constant():
        return
    w = cylinder_test(f)
    assert w is not None and reconstructs(f, w)
    # f is constant along every witness direction
    for v in w.directions:
        for p in [(0, 0, 0), (1, -2, 3), (2, 1, -1)]:
            q = tuple(a + 5 * b for a, b in zip(p, v))
            assert f.evaluate(p) == f.evaluate(q)


# --- directions and lines -----------------------------------------------------


def _direction_scan(f, H):
    fd = top_degree_part(f)
    out = set()
    for v in itertools.product(range(-H, H + 1), repeat=3):
        if any(v) and math.gcd(*v) == 1 and fd.evaluate(v) == 0:
            first = next(x for x in v if x)
            out.add(v if first > 0 else tuple(-x for x in v))
    return out


def test_directions_examples():
    assert set(directions_at_infinity(P3("x^3 + y^3 + z^3 - 1"), 1)) == {(1, -1, 0), (1, 0, -1), (0, 1, -1)}
    got = set(directions_at_infinity(P3("z - x*y"), 2))
    assert got == _direction_scan(P3("z - x*y"), 2)
    assert all(v[0] == 0 or v[1] == 0 for v in got) and (0, 0, 1) in got
    got = set(directions_at_infinity(P3("x^3 - y^2*z"), 1))
    assert got == _direction_scan(P3("x^3 - y^2*z"), 1)
    assert (1, 1, 1) in got and (0, 0, 1) in got


@pytest.mark.parametrize("name", sorted(SURFACES))
def test_directions_match_scan(name):
    f = surface(name)
    assert set(directions_at_infinity(f, 2)) == _direction_scan(f, 2)


def test_lines_examples():
    fermat = P3("x^3 + y^3 + z^3 - 1")
    assert lines_with_direction(fermat, (1, -1, 0)) == [Line3((0, 0, 1), (1, -1, 0), True)]
    assert lines_with_direction(P3("z - x*y"), (1, 0, 0)) == [Line3((0, 0, 0), (1, 0, 0), True)]
    assert lines_with_direction(P3("x*y*z - 1"), (1, 0, 0)) == []
    with pytest.raises(ValueError):
        lines_with_direction(fermat, (2, -2, 0))
    with pytest.raises(LineFamily):
        lines_with_direction(P3("(x + y)^3 - z + 1"), (1, -1, 0))


@pytest.mark.parametrize("name", sorted(SURFACES))
def test_lines_lie_on_surface_and_respect_degree_bound(name):
    f = surface(name)
    d = f.total_degree()
    if is_cylindrical(f):
        return
    for v in directions_at_infinity(f, 1):
        try:
            lines = lines_with_direction(f, v)
        except LineFamily:
            continue
        assert len(lines) <= d * d
        for L in lines:
            for t in range(-3, 4):
                assert f.evaluate(L.point(t)) == 0


def test_integral_points_on_line_examples():
    assert integral_points_on_line(Line3((0, 0, 1), (1, -1, 0)), 10) == 21
    assert integral_points_on_line(Line3((0, 0, 2), (1, -1, 0)), 1) == 0
    with pytest.raises(ValueError):
        integral_points_on_line(Line3((0, 0, 1), (3, -3, 0)), 10)


@given(st.tuples(*[st.integers(-6, 6)] * 3), forms3, st.integers(0, 8))
def test_integral_points_on_line_matches_scan(a, v, B):
    if math.gcd(*v) != 1:
        return
    L = Line3(a, v)
    expected = sum(1 for t in range(-40, 41) if all(abs(x) <= B for x in L.point(t)))
    assert integral_points_on_line(L, B) == expected


def test_line_intersection():
    L1 = Line3((0, 0, 1), (1, -1, 0))
    L2 = Line3((0, 1, 0), (1, 0, -1))
    assert line_intersection(L1, L2) == (-1, 1, 1)
    assert line_intersection(L1, Line3((0, 0, 2), (1, -1, 0))) is None


def test_lines_union_examples():
    fermat = P3("x^3 + y^3 + z^3 - 1")
    r = count_lines_union(fermat, 1, 10)
    _, pts = count_affine_brute(fermat, 10, retain_points=True)
    assert r.total == sum(1 for p in pts if on_lines(r.lines, p)) == 60
    assert r.per_line == [21, 21, 21]
    # a quartic with no real directions at infinity
    assert count_lines_union(P3("x^4 + y^4 + z^4 + x*y - 1"), 2, 10).total == 0
    with pytest.raises(PolyError):
        count_lines_union(P3("(x + y)^3 - z + 1"), 1, 5)


@pytest.mark.parametrize("name", sorted(SURFACES))
def test_lines_union_matches_brute(name):
    f = surface(name)
    if is_cylindrical(f):
        return
    for B in (5, 12):
        r = count_lines_union(f, 1, B)
        _, pts = count_affine_brute(f, B, retain_points=True)
        assert r.total == sum(1 for p in pts if on_lines(r.lines, p))


# --- lattices ----------------------------------------------------------------


def _minima(a, b, c, R=6):
    """Brute-force successive minima (squared) of the plane lattice."""
    vs = [v for v in itertools.product(range(-R, R + 1), repeat=3) if any(v) and a * v[0] + b * v[1] + c * v[2] == 0]
    vs.sort(key=lambda v: sum(x * x for x in v))
    first = vs[0]
    second = next(v for v in vs if any(first[i] * v[j] != first[j] * v[i] for i in range(3) for j in range(3)))
    return sum(x * x for x in first), sum(x * x for x in second)


def test_shortest_basis_examples():
    b = shortest_basis_plane(1, 1, 1)
    assert (b.v2, b.v3) == ((1, -1, 0), (0, 1, -1))
    b = shortest_basis_plane(1, 0, 0)
    assert (b.v2, b.v3) == ((0, 1, 0), (0, 0, 1))
    b = shortest_basis_plane(1, 2, 3)
    n2, n3 = (sum(x * x for x in v) for v in (b.v2, b.v3))
    assert (n2, n3) == _minima(1, 2, 3)
    with pytest.raises(ValueError):
        shortest_basis_plane(2, 4, 6)


@given(st.tuples(*[st.integers(-5, 5)] * 3))
@settings(max_examples=40)
def test_shortest_basis_properties(n):
    if not any(n) or math.gcd(*n) != 1:
        return
    b = shortest_basis_plane(*n)
    for v in (b.v2, b.v3):
        assert sum(x * y for x, y in zip(v, n)) == 0
    # index one: the cross product is +-n
    u, w = b.v2, b.v3
    cross = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
    assert cross in (tuple(n), tuple(-x for x in n))
    uu, ww, uw = (sum(x * y for x, y in zip(p, q)) for p, q in ((u, u), (w, w), (u, w)))
    assert uu <= ww and 2 * abs(uw) <= uu
    n2, n3 = b.norms()
    assert n2 * n3 <= 2 * b.det
    assert (uu, ww) == _minima(*n, R=8)


# --- inverse heights and integrality --------------------------------------------


def test_inverse_height_sum_examples():
    s = inverse_height_sum(parse_poly("x*t - 1", XT), 10)
    assert s == 2 * sum(Fraction(1, k) for k in range(1, 11))
    assert abs(float(s) - 5.8579) < 1e-4
    s = inverse_height_sum(parse_poly("x - t", XT), 3)
    assert s == 1 + 2 * (1 + Fraction(1, 2) + Fraction(1, 3))
    # t = x^2: sum of 1/x^2 over 0 < |x| <= B plus t = 0
    s = inverse_height_sum(parse_poly("x^2 - t", XT), 20)
    assert s == 1 + 2 * sum(Fraction(1, k * k) for k in range(1, 21))


def test_inverse_height_frozen_bound_on_affine_corpus():
    C, eps = constant("inverse_height_C"), constant("inverse_height_eps")
    for c in affine_curve_corpus():
        assert float(inverse_height_sum(c.f, c.B1)) <= inverse_height_bound(c.f, c.B1, C, eps)


def test_integral_values_examples():
    assert count_integral_values([0, 1], [1, 0, 1], 2, 1) == 2
    assert count_integral_values([0, 1], [1, 0, 1], 2, 2) == 0
    assert count_integral_values([1], [0, 1], 1, 1) == 3
    for i in range(2, 12):
        assert count_integral_values([1], [0, 1], 1, i) == 2
    with pytest.raises(PolyError):
        resultant_divisor_sieve([0, 1], [0, 1], 1, 3)


def _coprime(F1, F0, d2):
    A = MultiPoly(("T", "S"), {(k, d2 - k): c for k, c in enumerate(F1) if c})
    C = MultiPoly(("T", "S"), {(k, d2 - k): c for k, c in enumerate(F0) if c})
    return not A.is_zero() and not C.is_zero() and resultant_hom(C, A) != 0


@given(
    st.integers(1, 3).flatmap(
        lambda d: st.tuples(
            st.just(d),
            st.lists(st.integers(-6, 6), min_size=1, max_size=d + 1),
            st.lists(st.integers(-6, 6), min_size=1, max_size=d + 1),
        )
    ),
    st.integers(1, 30),
)
@settings(max_examples=60)
def test_sieve_equals_direct_enumeration(data, i):
    d2, F1, F0 = data
    if not _coprime(F1, F0, d2):
        return
    assert resultant_divisor_sieve(F1, F0, d2, i) == count_integral_values_direct(F1, F0, d2, i)


# --- integer roots over fibers ------------------------------------------------------


def test_walkowiak_examples():
    r = walkowiak_bound_check(parse_poly("x^2 - t", XT), 100)
    assert r.count == 11
    # x^2 = t^3 has the integer root x = k^3 exactly at t = k^2
    F = parse_poly("x^2 - t^3", XT)
    expected = sum(1 for P in enumerate_p1(8) if P.y == 1 and P.x >= 0 and math.isqrt(P.x) ** 2 == P.x)
    assert walkowiak_bound_check(F, 8).count == expected == 3
    with pytest.raises(PolyError):
        walkowiak_bound_check(parse_poly("x*t - 1", XT), 10)


def test_walkowiak_E_small_inputs():
    for text in ("x^2 - t", "x^2 - 2*t", "x^2 + 3*t - 1"):
        assert walkowiak_E(parse_poly(text, XT), 3) == 1
    F = parse_poly("x^2 - t", XT)
    assert walkowiak_shift(F, 2) == parse_poly("(x + t^2)^2 - t", XT)


def test_shift_preserves_integer_root_counts():
    # x -> x + t^E maps integer roots at integer t to integer roots
    for c in affine_curve_corpus()[:20]:
        if c.f.degree(0) < 2:
            continue
        G = walkowiak_shift(c.f, 2)
        ts = [P for P in enumerate_p1(6) if P.y == 1]
        for P in ts:
            t = P.x
            a = [x for x in range(-300, 301) if c.f.evaluate((x, t)) == 0]
            b = [x for x in range(-300 - t * t, 301 - t * t) if G.evaluate((x, t)) == 0]
            assert len(a) == len(b)


def test_walkowiak_frozen_bound_on_affine_corpus():
    for c in affine_curve_corpus():
        if c.f.degree(0) < 2:
            continue
        r = walkowiak_bound_check(c.f, c.B2)
        assert r.count <= r.bound
        assert r.count == count_t_with_integer_root(c.f, c.B2)
