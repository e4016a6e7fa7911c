"""Generating functions for the log-type sums and their relatives.

Everything here returns truncated Laurent series (or polynomials) with exact
coefficients.  The coefficient ring is duck-typed through the parameter: a
Fraction gives numeric coefficients, a RationalFunction or Polynomial gives
symbolic ones.

The central series is

    log_gf(T, q) = log(1 - (q-1)/q * z) / (z * (z - 1)),

whose z^n coefficient equals (1-q)^(n+2) * S(n, q) for the log-type sums S.
The companions are its three classical specialisations (q = -1, 2, 1/2), the
Gauss hypergeometric rewrite, the two-parameter generating function of the
Leibnitz triangle polynomials, the even log-product, and the generalised
Fibonacci-type family.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import LaurentSeries, Polynomial

from .special import leibnitz

_SQUARE_MINUS = Polynomial((Fraction(0), Fraction(-1), Fraction(1)))  # z^2 - z


def _log_over_square(T: int, scale) -> LaurentSeries:
    """log(1 + scale*z) / (z^2 - z), exact through order T."""
    num = LaurentSeries.mercator(T + 1, scale)
    return num / LaurentSeries.from_polynomial(_SQUARE_MINUS)


def log_gf(T: int, q) -> LaurentSeries:
    """The log-type generating series for parameter q, exact through order T."""
    return _log_over_square(T, (1 - q) / q)


_SPECIAL_SCALES = {
    "g1": Fraction(-2),      # parameter -1:  log(1 - 2z) / (z^2 - z)
    "g2": Fraction(-1, 2),   # parameter  2:  log(1 - z/2) / (z^2 - z)
    "g3": Fraction(1),       # parameter 1/2: log(1 + z) / (z^2 - z)
}


def log_gf_special(which: str, T: int) -> LaurentSeries:
    """One of the three classical specialisations, built from its own scale."""
    if which not in _SPECIAL_SCALES:
        raise ValueError(f"unknown series {which!r}; expected one of {sorted(_SPECIAL_SCALES)}")
    return _log_over_square(T, _SPECIAL_SCALES[which])


def gauss_2f1(a, b, c, T: int, scale=Fraction(1)) -> LaurentSeries:
    """Truncated Gauss hypergeometric series 2F1(a, b; c; scale * z).

    Coefficient of z^m is (a)_m (b)_m / ((c)_m m!) times scale^m, with (.)_m
    the rising factorial.  c must not be a nonpositive integer.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise ValueError("third parameter must not be a nonpositive integer")
    coeffs = []
    term = Fraction(1)
    power = 1
    for m in range(T + 1):
        coeffs.append(term * power)
        term = term * (a + m) * (b + m) / ((c + m) * (m + 1))
        power = power * scale
    return LaurentSeries(0, coeffs, T)


def alternating_harmonic_gf(T: int) -> LaurentSeries:
    """log(1 + u) / (u - 1): ordinary generating series of 1 - 1/2 + ... +- 1/n, negated."""
    return LaurentSeries.mercator(T + 1) / LaurentSeries.from_polynomial(
        Polynomial((Fraction(-1), Fraction(1)))
    )


def harmonic_gf(T: int) -> LaurentSeries:
    """log(1 - u) / (u - 1): ordinary generating series of the harmonic numbers."""
    return LaurentSeries.mercator(T + 1, Fraction(-1)) / LaurentSeries.from_polynomial(
        Polynomial((Fraction(-1), Fraction(1)))
    )


# ---------------------------------------------------------------------------
# Leibnitz triangle polynomials
# ---------------------------------------------------------------------------

def leibnitz_polynomial(n: int) -> Polynomial:
    """Row polynomial sum_l leibnitz(n, l) x^l of the Leibnitz triangle."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return Polynomial(tuple(leibnitz(n, l) for l in range(n + 1)))


def leibnitz_gf(x, T: int) -> LaurentSeries:
    """Two-parameter series (log(1-u) + log(1-x*u)) / ((1-u)(1-x*u) - 1).

    The u^n coefficient is the Leibnitz row polynomial evaluated at x; x may
    be a Fraction or a symbolic ring element.
    """
    num = LaurentSeries.mercator(T + 2, Fraction(-1)) + LaurentSeries.mercator(T + 2, -x)
    den = Polynomial((0, -(1 + x), x))  # (1-u)(1-x*u) - 1
    return num / LaurentSeries.from_polynomial(den)


# ---------------------------------------------------------------------------
# even log-product
# ---------------------------------------------------------------------------

def log_product_gf(T: int, q) -> LaurentSeries:
    """log(1 - w*z) * log(1 + w*z) / (z^2 - z) with w = (q-1)/q."""
    w = (q - 1) / q
    num = LaurentSeries.mercator(T + 1, -w) * LaurentSeries.mercator(T + 1, w)
    return num / LaurentSeries.from_polynomial(_SQUARE_MINUS)


# ---------------------------------------------------------------------------
# Fibonacci-type family
# ---------------------------------------------------------------------------

def _check_fib_shape(k: int, m: int, l: int) -> None:
    if k < 1 or m < 1 or l < 0:
        raise ValueError("shape parameters need k >= 1, m >= 1, l >= 0")


def fib_gf(T: int, x, y, k: int, m: int, l: int) -> LaurentSeries:
    """Series expansion of 1 / (1 - x^k t - y^m t^(m+l)) through order T."""
    _check_fib_shape(k, m, l)
    step = m + l
    coeffs = [Fraction(0)] * (step + 1)
    coeffs[0] = Fraction(1)
    coeffs[1] = coeffs[1] - x ** k
    coeffs[step] = coeffs[step] - y ** m
    den = Polynomial(tuple(coeffs))
    return LaurentSeries.from_polynomial(den).inverse(through=T)


def fib_term(n: int, x, y, k: int, m: int, l: int):
    """Closed form of the t^n coefficient of the Fibonacci-type series."""
    _check_fib_shape(k, m, l)
    if n < 0:
        raise ValueError("index must be nonnegative")
    step = m + l
    total = 0
    for c in range(n // step + 1):
        total = total + math.comb(n - c * (step - 1), c) * y ** (m * c) * x ** (k * (n - c * step))
    return total
