"""Kernel tests: rationals, polynomials, rational functions, Laurent series."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finsum.exact import (
    INFINITY,
    LaurentSeries,
    Polynomial,
    RationalFunction,
    TruncationError,
    format_rational,
    padic_valuation,
    parse_rational,
    poly_gcd,
    series_exp,
    series_geometric,
    series_log_one_plus,
)

F = Fraction


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

def test_padic_valuation_basics():
    assert padic_valuation(F(1, 2), 2) == -1
    assert padic_valuation(18, 3) == 2
    assert padic_valuation(0, 5) == INFINITY


def test_padic_valuation_rejects_nonprime():
    with pytest.raises(ValueError):
        padic_valuation(F(1, 2), 4)
    with pytest.raises(ValueError):
        padic_valuation(F(1, 2), 1)


@settings(max_examples=200)
@given(
    st.fractions(min_value=-50, max_value=50),
    st.fractions(min_value=-50, max_value=50),
    st.sampled_from([2, 3, 5]),
)
def test_padic_valuation_is_additive(a, b, p):
    if a == 0 or b == 0:
        assert padic_valuation(a * b, p) == INFINITY
        return
    assert padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p)


def test_parse_and_format_rational():
    assert parse_rational("-5/8") == F(-5, 8)
    assert parse_rational("12") == 12
    assert format_rational(F(-5, 8)) == "-5/8"
    assert format_rational(F(4, 2)) == "2"
    for bad in ("", "1.5", "1/-2", "+3", "a/b", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(st.fractions(min_value=-1000, max_value=1000))
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def poly(*cs):
    return Polynomial(tuple(F(c) for c in cs))


coeff_lists = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=9)


@settings(max_examples=60)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_polynomial_ring_axioms(a, b, c):
    pa, pb, pc = poly(*a), poly(*b), poly(*c)
    assert (pa + pb) + pc == pa + (pb + pc)
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert pa * pb == pb * pa


def test_polynomial_divmod_and_gcd():
    a = poly(-1, 0, 1)          # x^2 - 1
    b = poly(1, 1)              # x + 1
    q, r = divmod(a, b)
    assert q == poly(-1, 1) and not r
    g = poly_gcd(poly(-1, 0, 1), poly(1, 2, 1))   # gcd(x^2-1, (x+1)^2)
    assert g == poly(1, 1)


def test_polynomial_trailing_zeros_trimmed():
    assert poly(1, 2, 0, 0) == poly(1, 2)
    assert not poly(0, 0)
    assert poly().degree == -1


def test_polynomial_eval_and_derivative():
    p = poly(1, -3, 2)  # 1 - 3x + 2x^2
    assert p(F(1, 2)) == 0
    assert p.derivative() == poly(-3, 4)


def test_polynomial_text():
    assert poly(1, F(-3, 2), 0, 1).to_text() == "1 - 3/2*L + L^3"
    assert poly(12, -63, 137, -163, 137).to_text(descending=True) == \
        "137*L^4 - 163*L^3 + 137*L^2 - 63*L + 12"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def test_ratfun_cancellation():
    a, b, c = poly(1, 1), poly(2, 0, 1), poly(-3, 1, 4)
    assert RationalFunction(a * c, b * c) == RationalFunction(a, b)


def test_ratfun_canonical_form():
    f = RationalFunction(poly(F(1, 2), F(1, 2)), poly(-1, -1, -1))
    # integer coefficients, coprime contents, positive leading denominator
    assert all(F(x).denominator == 1 for x in f.num.coeffs + f.den.coeffs)
    assert F(f.den.leading) > 0


def test_ratfun_derivative_examples():
    L = RationalFunction.variable()
    f = 1 / (L * (L - 1))
    expected = RationalFunction(-poly(-1, 2), (L * (L - 1)).num ** 2)
    assert f.derivative() == expected
    assert RationalFunction(7).derivative() == RationalFunction(0)
    g = RationalFunction(poly(1, -3), poly(0, 0, 2) * poly(1, -2, 1))
    assert g.derivative() == RationalFunction(poly(2, -7, 9), poly(0, 0, 0, 2) * poly(-1, 3, -3, 1))


@settings(max_examples=40)
@given(coeff_lists, coeff_lists, coeff_lists, coeff_lists)
def test_ratfun_product_rule(a, b, c, d):
    pa, pb, pc, pd = poly(*a), poly(*b), poly(*c), poly(*d)
    if not pb or not pd:
        return
    f = RationalFunction(pa, pb)
    g = RationalFunction(pc, pd)
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_ratfun_evaluation():
    L = RationalFunction.variable()
    f = (1 - 3 * L) / (2 * L ** 2 * (L - 1) ** 2)
    assert f(F(2)) == F(-5, 8)
    with pytest.raises(ZeroDivisionError):
        f(F(1))


# ---------------------------------------------------------------------------
# Laurent series
# ---------------------------------------------------------------------------

def test_mercator_series():
    s = LaurentSeries.mercator(3)
    assert s.coefficients(0, 3) == [0, F(1), F(-1, 2), F(1, 3)]


def test_log_one_plus_variants():
    z = LaurentSeries.monomial(F(1), 1)
    assert series_log_one_plus(z, 3).coefficients(1, 3) == [F(1), F(-1, 2), F(1, 3)]
    assert not series_log_one_plus(LaurentSeries.zero(), 5)
    two_z = LaurentSeries.monomial(F(2), 1)
    assert series_log_one_plus(two_z, 2).coefficients(1, 2) == [F(2), F(-2)]
    with pytest.raises(ValueError):
        series_log_one_plus(LaurentSeries.one(), 3)


def test_geometric_series():
    g = series_geometric(2)
    assert g.coefficients(0, 2) == [1, 1, 1]
    one_minus_z = LaurentSeries(0, (F(1), F(-1)))
    prod = series_geometric(5) * one_minus_z
    assert prod.coefficients(0, 5) == [1, 0, 0, 0, 0, 0]


def test_series_division_examples():
    num = LaurentSeries(1, (F(1), F(-1, 2)))
    assert (num / LaurentSeries.monomial(F(1), 1)).coefficients(0, 1) == [1, F(-1, 2)]
    a = LaurentSeries(0, (F(1), F(1)))
    b = LaurentSeries(0, (F(1), F(-1)))
    assert (a * b).coefficients(0, 2) == [1, 0, -1]


def test_log_over_z_z_minus_one():
    # ln(1+z) / (z(z-1)): the alternating-harmonic partial sums, negated
    num = LaurentSeries.mercator(6)
    den = LaurentSeries(1, (F(-1), F(1)))  # z^2 - z
    q = num / den
    assert q.min_order == 0
    assert q.coefficients(0, 3) == [F(-1), F(-1, 2), F(-5, 6), F(-7, 12)]


def test_series_compose_examples():
    em1 = LaurentSeries.exponential(3) - 1
    sq = LaurentSeries.monomial(F(1), 2)
    assert sq.compose(em1).coefficients(2, 3) == [1, 1]
    s = LaurentSeries(0, (F(2), F(3), F(4)), 5)
    assert s.compose(LaurentSeries.monomial(F(1), 1)).agrees_with(s)
    log_comp = LaurentSeries.mercator(4).compose(LaurentSeries.exponential(4) - 1)
    assert log_comp.coefficients(0, 4) == [0, 1, 0, 0, 0]


def test_exp_log_inversion():
    for T in (4, 9, 16):
        u = LaurentSeries.mercator(T)
        assert series_exp(u, T).coefficients(0, T) == [1, 1] + [0] * (T - 1)


@settings(max_examples=40)
@given(coeff_lists, coeff_lists)
def test_series_mul_is_cauchy_convolution(a, b):
    sa = LaurentSeries(0, tuple(F(c) for c in a), 32)
    sb = LaurentSeries(0, tuple(F(c) for c in b), 32)
    prod = sa * sb
    for k in range(0, min(int(prod.top_known), 16) + 1):
        brute = sum(
            (F(a[i]) * F(b[k - i]) for i in range(len(a)) if 0 <= k - i < len(b)),
            F(0),
        )
        assert prod.coefficient(k) == brute


def test_truncation_is_enforced():
    s = LaurentSeries.mercator(4)
    s.coefficient(4)
    with pytest.raises(TruncationError):
        s.coefficient(5)
    q = LaurentSeries.mercator(4) / LaurentSeries(1, (F(-1), F(1)))
    assert q.top_known == 3
    with pytest.raises(TruncationError):
        q.coefficient(4)


def test_inverse_tracks_pole_order():
    # 1/(e^t - 1) has a simple pole at t = 0
    em1 = LaurentSeries.exponential(6) - 1
    inv = em1.inverse()
    assert inv.min_order == -1
    assert inv.coefficient(-1) == 1
    assert inv.coefficient(0) == F(-1, 2)
    assert inv.top_known == 4  # 6 - 2*1


def test_negative_powers():
    z = LaurentSeries.monomial(F(2), 1)
    s = z ** -3
    assert s.coefficient(-3) == F(1, 8)


def test_series_over_rational_function_coefficients():
    lam = RationalFunction.variable()
    w = (lam - 1) / lam
    u = LaurentSeries.monomial(-w, 1)
    log_series = series_log_one_plus(u, 3)
    assert log_series.coefficient(1) == -w
    assert log_series.coefficient(2) == -(w ** 2) / 2
    den = LaurentSeries(1, (F(-1), F(1)))
    g = log_series / den
    assert g.coefficient(0) == w
