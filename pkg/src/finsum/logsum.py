"""Log-type finite sums: exact values, closed symbolic forms, and the table.

The family computed here is

    S(n, q) = sum_{j=0}^{n} (-1)^n / ((j+1) * q^(j+1) * (q-1)^(n+1-j))

for n >= 0 and a rational parameter q outside {0, 1}.  These numbers are
(up to the scale (1-q)^(n+2)) the Maclaurin coefficients of
log(1 - (q-1)/q * z) / (z*(z-1)), and they touch several classical corners:
alternating harmonic numbers at q = 1/2, Bernoulli/Stirling double sums,
and the lcm-normalised harmonic integers carried by the symbolic numerators.

Four independent evaluation routes are provided on purpose; their agreement
is the backbone of the verification suite:

  * logsum_direct             -- the defining sum, term by term
  * logsum_bernoulli_stirling -- double sum over Bernoulli numbers and
                                 signed Stirling numbers of the first kind
  * logsum_recurrence         -- two-term recurrence in n
  * logsum_symbolic           -- closed rational function of the parameter

The numeric routes are duck-typed in the parameter: a Fraction gives exact
numbers, a RationalFunction gives exact symbolic forms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import Polynomial, RationalFunction

from .special import harmonic_alternating, bernoulli, stirling_first

_BAD_PARAMETER = "parameter must avoid 0 and 1"


def _checked(q):
    """Normalise a numeric parameter, rejecting the two poles."""
    if isinstance(q, (int, Fraction)):
        q = Fraction(q)
        if q == 0 or q == 1:
            raise ValueError(_BAD_PARAMETER)
    return q


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError("index must be nonnegative")


# ---------------------------------------------------------------------------
# the four evaluation routes
# ---------------------------------------------------------------------------

def logsum_direct(n: int, q):
    """Defining alternating sum, one term per j."""
    _check_index(n)
    q = _checked(q)
    acc = 0
    for j in range(n + 1):
        acc = acc + 1 / ((j + 1) * q ** (j + 1) * (q - 1) ** (n + 1 - j))
    return acc if n % 2 == 0 else -acc


def logsum_recurrence(n: int, q):
    """Two-term recurrence: (q-1)*S(n, q) + S(n-1, q) = (-1)^n/((n+1)*q^(n+1))."""
    _check_index(n)
    q = _checked(q)
    val = 1 / (q * (q - 1))
    for m in range(1, n + 1):
        sign = 1 if m % 2 == 0 else -1
        val = (sign / ((m + 1) * q ** (m + 1)) - val) / (q - 1)
    return val


def logsum_bernoulli_stirling(n: int, q):
    """Double sum over Bernoulli numbers and signed Stirling numbers.

    The outer index runs over 0..n, the inner over 0..outer; each term is
    (-1)^(v-n) * (q-1)^(v-n-1) * B_k * s(v,k) / (q^(v+1) * v!).
    """
    _check_index(n)
    q = _checked(q)
    total = 0
    for v in range(n + 1):
        weight = (q - 1) ** (v - n - 1) / (q ** (v + 1) * math.factorial(v))
        if (n - v) % 2:
            weight = -weight
        for k in range(v + 1):
            b = bernoulli(k)
            if not b:
                continue
            total = total + weight * (b * stirling_first(v, k))
    return total


@lru_cache(maxsize=None)
def _symbolic_parts(n: int):
    """(numerator, scale, power) with S(n) = numerator / (scale * L^power * (L-1)^power).

    The numerator is an integer polynomial of degree n; scale = lcm(1..n+1)
    clears every 1/(j+1).  The three pieces are in lowest terms: the numerator
    vanishes at neither 0 nor 1, and any common integer content is divided out.
    """
    _check_index(n)
    scale = math.lcm(*range(1, n + 2))
    shifted = Polynomial((Fraction(-1), Fraction(1)))  # L - 1
    num = Polynomial()
    for j in range(n + 1):
        num = num + Polynomial.monomial(Fraction(scale // (j + 1)), n - j) * shifted ** j
    if n % 2:
        num = -num
    g = math.gcd(int(num.content()), scale)
    if g > 1:
        num = num.scale(Fraction(1, g))
        scale //= g
    return num, scale, n + 1


@lru_cache(maxsize=None)
def logsum_symbolic(n: int) -> RationalFunction:
    """Closed form of S(n, .) as a reduced rational function of the parameter."""
    num, scale, power = _symbolic_parts(n)
    shifted = Polynomial((Fraction(-1), Fraction(1)))
    den = (Polynomial.monomial(Fraction(scale), power)) * shifted ** power
    return RationalFunction(num, den)


_METHODS = ("direct", "alg1", "recurrence", "symbolic")


def logsum(n: int, q=None, method: str = "recurrence"):
    """Evaluate S(n, q) by the requested route.

    method "symbolic" with q=None returns the RationalFunction itself;
    every other combination returns an exact scalar (or a symbolic result
    when q is itself a RationalFunction).
    """
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")
    if method == "symbolic" and q is None:
        return logsum_symbolic(n)
    if q is None:
        raise ValueError("a parameter value is required for numeric methods")
    if method == "direct":
        return logsum_direct(n, q)
    if method == "alg1":
        return logsum_bernoulli_stirling(n, q)
    if method == "recurrence":
        return logsum_recurrence(n, q)
    q = _checked(q)
    return logsum_symbolic(n)(q)


@lru_cache(maxsize=None)
def logsum_value(n: int, q) -> Fraction:
    """Cached exact value; the workhorse for the identity sweeps."""
    q = Fraction(q)
    if q == 0 or q == 1:
        raise ValueError(_BAD_PARAMETER)
    if n == 0:
        return 1 / (q * (q - 1))
    sign = Fraction(-1, n + 1) if n % 2 else Fraction(1, n + 1)
    return (sign / q ** (n + 1) - logsum_value(n - 1, q)) / (q - 1)


def logsum_at_half(n: int) -> Fraction:
    """Closed evaluation at parameter 1/2 via alternating harmonic numbers."""
    _check_index(n)
    return Fraction(2) ** (n + 2) * harmonic_alternating(n + 1)


# ---------------------------------------------------------------------------
# table formatting
# ---------------------------------------------------------------------------

def table_entry(n: int) -> str:
    """Canonical text of S(n): descending numerator over the factored denominator."""
    num, scale, power = _symbolic_parts(n)
    num_text = num.to_text("L", descending=True)
    if sum(1 for c in num.coeffs if c) > 1:
        num_text = f"({num_text})"
    factors = []
    if scale != 1:
        factors.append(str(scale))
    factors.append("L" if power == 1 else f"L^{power}")
    factors.append("(L - 1)" if power == 1 else f"(L - 1)^{power}")
    return f"{num_text}/({'*'.join(factors)})"


def table(max_n: int) -> list[str]:
    """Table rows 0..max_n, one canonical string per index."""
    _check_index(max_n)
    return [table_entry(n) for n in range(max_n + 1)]


# ---------------------------------------------------------------------------
# the lcm-normalised harmonic integers
# ---------------------------------------------------------------------------

def lcm_harmonic(k: int) -> int:
    """lcm(1..k) * (1 + 1/2 + ... + 1/k) as an integer, k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    scale = math.lcm(*range(1, k + 1))
    return sum(scale // j for j in range(1, k + 1))


def harmonic_lcm_sequence(count: int, method: str = "harmonic") -> list:
    """First `count` terms, via the harmonic sum or the symbolic numerators.

    The "table" route reads |leading coefficient| of the degree-(k-1)
    numerator, which equals lcm(1..k) * H_k.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if method == "harmonic":
        return [lcm_harmonic(k) for k in range(1, count + 1)]
    if method == "table":
        out = []
        for k in range(count):
            num, _, _ = _symbolic_parts(k)
            out.append(abs(int(Fraction(num.leading))))
        return out
    raise ValueError(f"unknown method {method!r}; expected 'harmonic' or 'table'")
