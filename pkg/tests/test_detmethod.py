import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimgrowth.calibration import constant
from dimgrowth.corpus import curve_corpus
from dimgrowth.density import compute_b
from dimgrowth.detmethod import (
    AuxPolyError,
    CurveBoundConstants,
    aux_polynomial,
    bezout_cap,
    build_FH,
    build_lift_instance,
    count_A1P1,
    det_valuation_check,
    envelope_bound,
    independent_monomials,
    monomial_basis,
    normalize_leading_coeff,
    minor_gcd_c1_needed,
    minor_gcd_instance,
    quotient_dim,
    s_formula,
    shear,
    shear_height_factor,
    standard_monomials,
    theorem32_bound,
    affine_curve_bound,
)
from dimgrowth.points import count_A1P1_brute, count_P1P1_brute
from dimgrowth.poly import BIHOM_VARS, BiHomPoly, MultiPoly, PolyError, content_primitive, divides, height_norm, parse_poly

XT = ("x", "t")


def B(text):
    return BiHomPoly.parse(text)


def mono(text):
    (e, _), = parse_poly(text, BIHOM_VARS).terms.items()
    return e


# --- monomials ----------------------------------------------------------------


def test_monomial_basis_examples():
    b = monomial_basis(1, 1)
    assert set(b.monomials) == {mono(m) for m in ("X*U", "X*V", "Y*U", "Y*V")} and len(b) == 4
    assert set(monomial_basis(2, 0).monomials) == {mono(m) for m in ("X^2", "X*Y", "Y^2")}
    assert len(monomial_basis(2, 2)) == 9


@given(st.integers(0, 6), st.integers(0, 6))
def test_monomial_basis_size_and_order(D1, D2):
    b = monomial_basis(D1, D2)
    assert len(b) == (D1 + 1) * (D2 + 1) == len(set(b.monomials))
    assert all(m[0] + m[1] == D1 and m[2] + m[3] == D2 for m in b.monomials)
    assert list(b.monomials) == sorted(b.monomials, reverse=True)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 5))
def test_standard_monomial_count(d1, d2, M):
    f = BiHomPoly(MultiPoly(BIHOM_VARS, {(d1, 0, d2, 0): 1, (0, d1, 0, d2): 1}), (d1, d2))
    n = len(standard_monomials(f, d1 * M, d2 * M))
    assert n == quotient_dim(d1, d2, M) == s_formula(d1, d2, M) + d1 * d2


def test_bezout_cap_examples():
    assert bezout_cap(1, 1, 2) == 4
    assert bezout_cap(2, 3, 1) == 12
    assert bezout_cap(1, 1, 1) == 2


# --- leading coefficient shear ------------------------------------------------


def test_normalize_examples():
    g, ab = normalize_leading_coeff(B("X*V - Y*U"))
    assert ab == (0, 1) and g == B("X*V + X*U - Y*U")
    g, ab = normalize_leading_coeff(B("Y*V"))
    assert ab == (1, 1)
    f = B("3*X*U + X*V - 2*Y*V")
    assert normalize_leading_coeff(f) == (f, (0, 0))


def _random_primitive(rng, d1, d2, hmax):
    while True:
        terms = {(a, d1 - a, c, d2 - c): rng.randint(-hmax, hmax) for a in range(d1 + 1) for c in range(d2 + 1) if rng.random() < 0.5}
        base = MultiPoly(BIHOM_VARS, terms)
        if not base.is_zero():
            return BiHomPoly(content_primitive(base)[1], (d1, d2))


def test_normalize_postconditions_on_random_forms():
    rng = random.Random(37)
    for _ in range(500):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        f = _random_primitive(rng, d1, d2, 10 ** 9)
        g, (a, b) = normalize_leading_coeff(f)
        h = height_norm(f.base)
        assert abs(a) <= d1 and abs(b) <= d2
        assert g == shear(f, a, b)
        assert content_primitive(g.base)[0] == 1
        assert g.c_f == f(1, a, 1, b)
        assert abs(g.c_f) * 3 ** (d1 + d2) >= h
        assert height_norm(g.base) <= shear_height_factor(d1, d2) * h


def test_shear_point_count_inequality():
    for c in curve_corpus(n_random=0):
        if c.B1 > 6 or c.B2 > 6:
            continue
        g, _ = normalize_leading_coeff(c.f)
        d1, d2 = c.f.bidegree
        assert count_P1P1_brute(c.f, c.B1, c.B2)[0] <= count_P1P1_brute(g, d1 * c.B1, d2 * c.B2)[0]


# --- auxiliary polynomial ---------------------------------------------------


def test_aux_diagonal_height_one():
    f = B("X*V - Y*U")
    res = aux_polynomial(f, 1, 1)
    assert res.M == 2 and res.bezout_cap == 4
    assert res.points_checked == 4
    # at M = 1 the three standard columns have full rank on the 4 points
    m1 = [e for e in res.profile if e["M"] == 1]
    assert m1 and m1[0]["rank_mod_p"] == 3
    assert res.vanishes and not res.f_divides_g
    assert res.g.bidegree == (2, 2)
    js = res.to_json()
    assert js["certificates"] == {"points_checked": 4, "vanishes": True, "division_remainder_zero": False}


def test_aux_bidegree_two_one():
    f = B("X^2*V - Y^2*U")
    n, pts = count_P1P1_brute(f, 1, 1)
    res = aux_polynomial(f, 1, 1, points=pts)
    assert n <= res.bezout_cap == 4 * res.M
    assert all(res.g.base.evaluate(P.coords()) == 0 for P in pts)
    assert not divides(f.base, res.g.base)


def test_aux_cap_and_bad_input():
    f = B("X*V - Y*U")
    with pytest.raises(AuxPolyError) as e:
        aux_polynomial(f, 8, 8, M_max=3)
    assert e.value.profile
    with pytest.raises(PolyError):
        aux_polynomial(B("2*X*V - 2*Y*U"), 2, 2)
    with pytest.raises(PolyError):
        aux_polynomial(B("X^2*V^2 - Y^2*U^2"), 2, 2)


@pytest.mark.parametrize("text", ["X*V - Y*U", "X^2*V - Y^2*U", "X*U^2 + Y*V^2 - X*V^2", "X^2*U - 3*Y^2*V + X*Y*V"])
def test_aux_M_monotone_in_heights(text):
    f = B(text)
    prev = 0
    for b in (1, 2, 3, 5, 8, 12):
        res = aux_polynomial(f, b, b)
        n = count_P1P1_brute(f, b, b)[0]
        assert n <= res.bezout_cap
        assert res.M >= prev
        prev = res.M
    # and separately in each coordinate
    assert aux_polynomial(f, 3, 8).M >= aux_polynomial(f, 3, 5).M
    assert aux_polynomial(f, 8, 3).M >= aux_polynomial(f, 5, 3).M


def test_aux_random_corpus_sample():
    for c in [c for c in curve_corpus(seed=99, n_random=10) if c.tag == "random"]:
        n, pts = count_P1P1_brute(c.f, c.B1, c.B2)
        res = aux_polynomial(c.f, c.B1, c.B2, points=pts)
        assert all(res.g.base.evaluate(P.coords()) == 0 for P in pts)
        assert not divides(c.f.base, res.g.base)
        assert n <= res.bezout_cap


# --- determinant valuations ---------------------------------------------------


def test_det_valuation_diagonal_at_infinity_of_lifts():
    f = B("X*V - Y*U")
    c = constant("detval_slack_c")
    pts = [(1, 5 * k, 1, 5 * k) for k in range(3)]
    mons = independent_monomials(f, pts, 3)
    r = det_valuation_check(f, 5, ((1, 0), (1, 0)), pts, mons)
    assert r.mu == 1 and r.s == 3
    assert r.e is not None and r.e >= math.ceil(9 / 2) - c * 3


def test_det_valuation_small_s():
    f = B("X*V - Y*U")
    r = det_valuation_check(f, 7, ((3, 1), (3, 1)), [(3, 1, 3, 1)], independent_monomials(f, [(3, 1, 3, 1)], 1))
    assert r.s == 1 and r.e >= 0
    pts = [(3, 1, 3, 1), (10, 1, 10, 1)]
    r = det_valuation_check(f, 7, ((3, 1), (3, 1)), pts, independent_monomials(f, pts, 2))
    assert r.e >= 1


def test_det_valuation_input_errors():
    f = B("X*V - Y*U")
    with pytest.raises(ValueError):
        det_valuation_check(f, 5, ((0, 1), (0, 1)), [(1, 1, 2, 1)], [(1, 0, 1, 0)])
    with pytest.raises(ValueError):
        det_valuation_check(f, 5, ((0, 1), (0, 1)), [(1, 1, 1, 1)], [(1, 0, 1, 0)])


@pytest.mark.parametrize("name", ["diagonal", "parabola", "cubic-graph", "conic-shift", "node", "cusp"])
def test_lift_families_respect_frozen_slack(name):
    c = constant("detval_slack_c")
    for p in (5, 7, 11):
        for s in range(1, 11):
            f, target, pts, mons = build_lift_instance(name, p, 1, s, node_split=name == "node")
            if mons is None:
                continue
            r = det_valuation_check(f, p, target, pts, mons)
            if r.e is not None:
                assert r.e >= math.ceil(r.lower) - c * r.s


def test_node_lifts_have_multiplicity_two():
    f, target, pts, mons = build_lift_instance("node", 5, 1, 6, node_split=True)
    assert det_valuation_check(f, 5, target, pts, mons).mu == 2


def test_minor_gcd_bound_with_frozen_constant():
    c1 = constant("minor_gcd_c1")
    for c in curve_corpus(n_random=0)[:8]:
        b = compute_b(c.f, 2000).b
        if b <= 0:
            continue
        _, pts = count_P1P1_brute(c.f, c.B1, c.B2)
        d1, d2 = c.f.bidegree
        for s in range(2, min(8, len(pts)) + 1):
            M = 1
            while quotient_dim(d1, d2, M) < s:
                M += 1
            inst = minor_gcd_instance(c.f, [P.coords() for P in pts[:s]], (d1 * M, d2 * M), b)
            if inst is not None:
                assert minor_gcd_c1_needed(*inst) <= c1


# --- bound evaluators ---------------------------------------------------------


def test_curve_bound_examples():
    f = B("X*V - Y*U")
    # main term 10 * 10, log term switched off, constant term 1
    assert theorem32_bound(f, 10, 10, CurveBoundConstants(1.0, 0.0, 1.0), b=1.0) == pytest.approx(101.0)
    for C in (1.0, 2.5):
        assert theorem32_bound(f, 1, 1, CurveBoundConstants(C, C, C), b=1.0) == pytest.approx(2 * C)
    full = theorem32_bound(f, 10, 10, CurveBoundConstants(1.0, 1.0, 1.0), b=1.0)
    assert full == pytest.approx(101.0 + math.log(100))


def test_envelope_and_affine_curve_bounds():
    assert envelope_bound(B("X*V - Y*U"), 10, 10, 1.0) == pytest.approx(100.0)
    assert envelope_bound(B("X^2*V - Y^2*U"), 16, 9, 1.0) == pytest.approx(2 ** 3.5 * 16 * 3)
    assert affine_curve_bound(1, 1, 100, 100, 1.0) == pytest.approx(10 * 100 * math.log(10 ** 4))


def test_corpus_counts_below_frozen_envelope():
    C = constant("envelope_C")
    for c in curve_corpus(n_random=0):
        assert count_P1P1_brute(c.f, c.B1, c.B2)[0] <= envelope_bound(c.f, c.B1, c.B2, C)


# --- F_H and the A1 x P1 pipeline ---------------------------------------------


def test_build_FH_examples():
    assert build_FH(parse_poly("x*t - 1", XT), 2) == B("2*X*U - Y*V")
    assert build_FH(parse_poly("x*t - 1", XT), 1) == B("X*U - Y*V")
    assert build_FH(parse_poly("x^2*t - 1", XT), 3) == B("9*X^2*U - Y^2*V")
    with pytest.raises(PolyError):
        build_FH(parse_poly("x*t - 1", XT), 0)


@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-5, 5), min_size=1, max_size=5), st.integers(1, 7))
@settings(max_examples=40)
def test_FH_carries_solutions(terms, H):
    f = MultiPoly(XT, terms)
    if f.is_zero() or f.degree(0) < 1 or f.degree(1) < 1:
        return
    F = build_FH(f, H)
    assert F.bidegree == (f.degree(0), f.degree(1))
    top = f.collect(0)[f.degree(0)]
    assert height_norm(F.base) >= H ** f.degree(0) * height_norm(top)
    _, pts = count_A1P1_brute(f, 6, 6)
    for x, t in pts:
        assert F(x, H, t.numerator, t.denominator) == 0


def test_count_A1P1_examples():
    r = count_A1P1(parse_poly("x*t - 1", XT), 100, 100)
    assert r.count == 200 and r.branch == "B'∤f0" and r.prime == 97 and r.ok
    r = count_A1P1(parse_poly("x^2 - t", XT), 10 ** 4, 100)
    assert r.count == 21 and r.bound > 21 and r.ok
    r = count_A1P1(parse_poly("x*t - 6", XT), 3, 3)
    assert r.branch.startswith("(∏B')|f0") and r.prime is None
    assert r.count == count_A1P1_brute(parse_poly("x*t - 6", XT), 3, 3)[0]
    assert set(r.to_json()) == {"count", "bound", "branch", "prime", "H", "FH_height", "ok"}
    with pytest.raises(PolyError):
        count_A1P1(parse_poly("x*t - x", XT), 5, 5)
