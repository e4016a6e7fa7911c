"""Exact arithmetic kernel.

Everything downstream is built on four layers:

  * Fraction            -- the universal scalar (stdlib, already reduced)
  * Polynomial          -- dense univariate polynomial, duck-typed coefficients
  * RationalFunction    -- canonical-form quotient of integer-coefficient polynomials
  * LaurentSeries       -- truncated series with finitely many negative powers

The series layer tracks, for every result, the largest order through which its
coefficients are exact, and refuses to report anything beyond that.  That rule
is what keeps the substitution checks (poles at t = 0 and all) honest.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

INFINITY = math.inf  # +infinity sentinel (valuations, untruncated series)


# ---------------------------------------------------------------------------
# rational plumbing
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def padic_valuation(q, p: int):
    """v_p(q) for a rational q; returns INFINITY for q = 0."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    q = Fraction(q)
    if q == 0:
        return INFINITY
    v = 0
    num = abs(q.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" grammar: optional minus, integer, optional /positive-integer."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs):
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Polynomial:
    """Dense univariate polynomial; index = degree, trailing zeros trimmed.

    Coefficients are duck-typed: Fraction/int for ordinary work, but any ring
    element with +, *, unary -, and truthiness (RationalFunction, even another
    Polynomial) works too.  The zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, k: int):
        return cls((0,) * k + (c,)) if c else cls()

    # -- structure --------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(Fraction(other))
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(Fraction(other))
        if isinstance(other, Fraction):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, factor) -> "Polynomial":
        """Coefficient-wise scaling (for exotic scalar rings; see RationalFunction
        for the plain-field path)."""
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; x may be a scalar, Polynomial or RationalFunction."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    # -- Euclidean structure (field coefficients) -------------------------
    def __divmod__(self, other):
        o = self._lift(other)
        if o is None or not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(o.coeffs) + 1)
        dlead = o.coeffs[-1]
        dd = o.degree
        while len(rem) - 1 >= dd and any(rem):
            k = len(rem) - 1
            if not rem[k]:
                rem.pop()
                continue
            f = rem[k] / dlead
            q[k - dd] = f
            for i, c in enumerate(o.coeffs):
                rem[k - dd + i] = rem[k - dd + i] - f * c
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- content / primitive part (Fraction coefficients) -----------------
    def content(self) -> Fraction:
        """Positive rational g with self = g * (primitive integer polynomial)."""
        if not self.coeffs:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            c = Fraction(c)
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = math.lcm(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive(self) -> "Polynomial":
        g = self.content()
        if not g:
            return self
        return Polynomial(tuple(Fraction(c) / g for c in self.coeffs))

    # -- formatting --------------------------------------------------------
    def to_text(self, letter: str = "L", descending: bool = False) -> str:
        """Render "c0 + c1*L + c2*L^2" (or the descending variant)."""
        if not self.coeffs:
            return "0"
        terms = []
        indices = range(len(self.coeffs))
        if descending:
            indices = reversed(indices)
        for k in indices:
            c = self.coeffs[k]
            if not c:
                continue
            if not isinstance(c, (int, Fraction)):
                # exotic coefficient ring: render opaquely in parentheses
                var = "" if k == 0 else ("*" + (letter if k == 1 else f"{letter}^{k}"))
                terms.append((False, f"({c.to_text()}){var}"))
                continue
            c = Fraction(c)
            if k == 0:
                body = format_rational(abs(c))
            else:
                var = letter if k == 1 else f"{letter}^{k}"
                body = var if abs(c) == 1 else f"{format_rational(abs(c))}*{var}"
            terms.append((c < 0, body))
        out = []
        for i, (neg, body) in enumerate(terms):
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self.to_text()})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """gcd over Q via the primitive Euclidean algorithm.

    Returns a primitive integer-coefficient polynomial with positive leading
    coefficient (or the zero polynomial when both inputs are zero).
    """
    a = a.primitive()
    b = b.primitive()
    while b:
        _, r = divmod(a, b)
        a, b = b, r.primitive()
    if a and Fraction(a.leading) < 0:
        a = -a
    return a


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RationalFunction:
    """Quotient of polynomials in canonical form.

    Canonical: num/den coprime, both with integer coefficients whose two
    contents are themselves coprime, and den has positive leading coefficient.
    Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(Fraction(num))
        if den is None:
            den = Polynomial.constant(Fraction(1))
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(Fraction(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            object.__setattr__(self, "num", Polynomial())
            object.__setattr__(self, "den", Polynomial.constant(Fraction(1)))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        cn, cd = num.content(), den.content()
        scale = cn / cd  # num = scale * num.primitive() / den.primitive()
        num = num.primitive()
        den = den.primitive()
        num = Polynomial(tuple(c * scale.numerator for c in num.coeffs))
        den = Polynomial(tuple(c * scale.denominator for c in den.coeffs))
        if Fraction(den.leading) < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def variable(cls):
        return cls(Polynomial.variable())

    # -- structure --------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    # -- field operations --------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            if not self:
                raise ZeroDivisionError("0 ** negative")
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __call__(self, x):
        d = self.den(x)
        if isinstance(d, Fraction) and d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(x)) / Fraction(d) if isinstance(d, Fraction) else self.num(x) / d

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def to_text(self, letter: str = "L", descending: bool = False) -> str:
        n = self.num.to_text(letter, descending)
        if self.den == Polynomial.constant(Fraction(1)):
            return n
        d = self.den.to_text(letter, descending)
        np = n if (self.num.degree <= 0 and "-" not in n) else f"({n})"
        dp = d if self.den.degree <= 0 else f"({d})"
        return f"{np}/{dp}"

    def __repr__(self):
        return f"RationalFunction({self.to_text()})"


# ---------------------------------------------------------------------------
# truncated Laurent series
# ---------------------------------------------------------------------------

class TruncationError(Exception):
    """Asked for a coefficient beyond the exactly-known window."""


def _as_order(t):
    return INFINITY if t is None else t


class LaurentSeries:
    """Series sum(coeffs[i] * z^(offset+i)); exact through order `trunc`.

    trunc = None means the series is exactly the stored finite sum (a Laurent
    polynomial).  Every operation computes the tightest truncation order its
    inputs support; coefficient() raises TruncationError past that order.
    """

    __slots__ = ("offset", "coeffs", "trunc")

    def __init__(self, offset: int, coeffs, trunc=None):
        cs = list(coeffs)
        # normalize: drop leading zeros (bumping offset), drop tail beyond trunc
        while cs and not cs[0]:
            cs.pop(0)
            offset += 1
        if trunc is not None:
            cs = cs[: max(0, trunc - offset + 1)]
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            offset = 0
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *a):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, trunc=None):
        return cls(0, (), trunc)

    @classmethod
    def one(cls):
        return cls(0, (Fraction(1),))

    @classmethod
    def monomial(cls, c, k: int = 1):
        return cls(k, (c,))

    @classmethod
    def from_polynomial(cls, p: Polynomial):
        return cls(0, p.coeffs)

    @classmethod
    def geometric(cls, T: int):
        """1 + z + z^2 + ... through order T."""
        return cls(0, (Fraction(1),) * (T + 1), T)

    @classmethod
    def exponential(cls, T: int, scale=Fraction(1)):
        """exp(scale * z) through order T."""
        cs = []
        c = Fraction(1)
        for k in range(T + 1):
            cs.append(c)
            c = c * scale / (k + 1)
        return cls(0, cs, T)

    @classmethod
    def mercator(cls, T: int, scale=Fraction(1)):
        """ln(1 + scale*z) = sum_{j>=1} (-1)^(j+1) (scale*z)^j / j through T."""
        cs = [Fraction(0)]
        p = Fraction(1)
        for j in range(1, T + 1):
            p = p * scale
            cs.append(p * Fraction((-1) ** (j + 1), j))
        return cls(0, cs, T)

    # -- structure --------------------------------------------------------
    @property
    def min_order(self) -> int:
        return self.offset

    @property
    def top_known(self):
        """Largest order whose coefficient may be reported."""
        return _as_order(self.trunc)

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k: int):
        if self.trunc is not None and k > self.trunc:
            raise TruncationError(f"order {k} beyond truncation {self.trunc}")
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def coefficients(self, lo: int, hi: int):
        return [self.coefficient(k) for k in range(lo, hi + 1)]

    def truncate(self, T: int) -> "LaurentSeries":
        if self.trunc is not None and T > self.trunc:
            raise TruncationError(f"cannot extend truncation {self.trunc} to {T}")
        return LaurentSeries(self.offset, self.coeffs, T)

    def agrees_with(self, other: "LaurentSeries", through=None) -> bool:
        """Coefficient-wise equality through min of the reliable windows."""
        hi = min(self.top_known, other.top_known)
        if through is not None:
            hi = min(hi, through)
        if hi == INFINITY:
            return self.offset == other.offset and self.coeffs == other.coeffs
        lo = min(self.offset, other.offset)
        hi = int(hi)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, hi + 1))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.offset, self.coeffs, self.trunc) == (other.offset, other.coeffs, other.trunc)

    def __hash__(self):
        return hash(("LaurentSeries", self.offset, self.coeffs, self.trunc))

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
            if isinstance(other, Polynomial):
                return LaurentSeries.from_polynomial(other)
            return LaurentSeries(0, (other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        T = min(_as_order(self.trunc), _as_order(o.trunc))
        if not self.coeffs:
            return LaurentSeries(o.offset, o.coeffs, None if T == INFINITY else int(T))
        if not o.coeffs:
            return LaurentSeries(self.offset, self.coeffs, None if T == INFINITY else int(T))
        lo = min(self.offset, o.offset)
        hi = max(self.offset + len(self.coeffs), o.offset + len(o.coeffs)) - 1
        if T != INFINITY:
            hi = min(hi, int(T))
        out = []
        for k in range(lo, hi + 1):
            a = self.coeffs[k - self.offset] if 0 <= k - self.offset < len(self.coeffs) else 0
            b = o.coeffs[k - o.offset] if 0 <= k - o.offset < len(o.coeffs) else 0
            out.append(a + b)
        return LaurentSeries(lo, out, None if T == INFINITY else int(T))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.offset, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            # zero (so far as known) series: conservative truncation window
            T = min(_as_order(self.trunc), _as_order(o.trunc))
            return LaurentSeries.zero(None if T == INFINITY else int(T))
        # product of a (exact through Ta) and b (exact through Tb) is exact
        # through min(Ta + b.offset, Tb + a.offset)
        T = min(_as_order(self.trunc) + o.offset, _as_order(o.trunc) + self.offset)
        lo = self.offset + o.offset
        hi_stored = (self.offset + len(self.coeffs) - 1) + (o.offset + len(o.coeffs) - 1)
        hi = hi_stored if T == INFINITY else min(hi_stored, int(T))
        out = [Fraction(0)] * (hi - lo + 1)
        for i, ca in enumerate(self.coeffs):
            if not ca:
                continue
            base = self.offset + i + o.offset - lo
            for j, cb in enumerate(o.coeffs):
                k = base + j
                if k > hi - lo:
                    break
                if cb:
                    out[k] = out[k] + ca * cb
        return LaurentSeries(lo, out, None if T == INFINITY else int(T))

    __rmul__ = __mul__

    def inverse(self, through=None) -> "LaurentSeries":
        """Multiplicative inverse.

        For a series exact through T with min_order mu the inverse is exact
        through T - 2*mu.  An untruncated (polynomial) input needs an explicit
        `through` order, since its inverse is an infinite series.
        """
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero series")
        mu = self.offset
        if self.trunc is None:
            if len(self.coeffs) == 1:
                return LaurentSeries(-mu, (_ring_inverse(self.coeffs[0]),),
                                     None if through is None else through)
            if through is None:
                raise TruncationError("inverse of an exact polynomial needs a target order")
            T_out = through
        else:
            T_out = self.trunc - 2 * mu
            if through is not None:
                T_out = min(T_out, through)
        L = T_out + mu  # the unit part 1/(1+u) is needed through order L
        if L < 0:
            return LaurentSeries.zero(T_out)
        lead_inv = _ring_inverse(self.coeffs[0])
        # u: self = lead * z^mu * (1 + u), u an ordinary series, u(0) = 0
        u = [Fraction(0)] * (L + 1)
        for i in range(1, min(len(self.coeffs), L + 1)):
            if self.coeffs[i]:
                u[i] = self.coeffs[i] * lead_inv
        # 1/(1+u): c_0 = 1, c_k = -sum_{i=1..k} u_i c_{k-i}
        inv = [Fraction(0)] * (L + 1)
        inv[0] = Fraction(1)
        for k in range(1, L + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if u[i] and inv[k - i]:
                    acc = acc + u[i] * inv[k - i]
            inv[k] = -acc
        out = [c * lead_inv for c in inv]
        return LaurentSeries(-mu, out, T_out)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._divide(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o._divide(self)

    def _divide(self, den: "LaurentSeries", through=None) -> "LaurentSeries":
        if not den.coeffs:
            raise ZeroDivisionError("division by zero series")
        mu = den.offset
        Ta = _as_order(self.trunc)
        Tb = _as_order(den.trunc)
        T = min(Ta - mu, Tb - 2 * mu + self.offset)
        if through is not None:
            T = min(T, through)
        if T == INFINITY:
            # only reachable when den is an exact monomial and self is exact
            return self * den.inverse()
        inv = den.inverse(through=int(T) - self.offset)
        out = self * inv
        if out.trunc is None or out.trunc > T:
            out = LaurentSeries(out.offset, out.coeffs, int(T))
        return out

    def divide(self, den: "LaurentSeries", through=None) -> "LaurentSeries":
        return self._divide(self._lift(den), through)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """self(inner(z)) for inner with min_order >= 1, self with min_order >= 0."""
        if self.offset < 0:
            raise ValueError("composition needs an outer series with min_order >= 0")
        if inner.coeffs and inner.offset < 1:
            raise ValueError("composition needs inner min_order >= 1 (zero constant term)")
        Ta = _as_order(self.trunc)
        Tb = _as_order(inner.trunc)
        if not inner.coeffs:
            c0 = self.coefficient(0) if (self.trunc is None or self.trunc >= 0) else Fraction(0)
            return LaurentSeries(0, (c0,), None if Tb == INFINITY else int(Tb))
        mu = inner.offset
        T = min(Tb, (Ta + 1) * mu - 1)
        # Horner from the top stored coefficient
        top = self.offset + len(self.coeffs) - 1
        acc = LaurentSeries.zero(None if T == INFINITY else int(T))
        for k in range(top, -1, -1):
            acc = acc * inner
            c = self.coeffs[k - self.offset] if k >= self.offset else None
            if c is not None and c:
                acc = acc + LaurentSeries(0, (c,))
            if T != INFINITY and acc.trunc is not None:
                acc = LaurentSeries(acc.offset, acc.coeffs, min(int(T), acc.trunc))
        if T == INFINITY:
            return acc
        return LaurentSeries(acc.offset, acc.coeffs, int(T))

    def derivative(self) -> "LaurentSeries":
        cs = [(self.offset + i) * c for i, c in enumerate(self.coeffs)]
        T = None if self.trunc is None else self.trunc - 1
        return LaurentSeries(self.offset - 1, cs, T)

    def to_text(self, letter: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.offset + i
            cs = format_rational(c) if isinstance(c, (int, Fraction)) else f"({c.to_text()})"
            if k == 0:
                parts.append(cs)
            else:
                var = letter if k == 1 else f"{letter}^{k}"
                parts.append(f"{cs}*{var}")
        body = " + ".join(parts)
        if self.trunc is not None:
            body += f" + O({letter}^{self.trunc + 1})"
        return body

    def __repr__(self):
        return f"LaurentSeries({self.to_text()})"


def _ring_inverse(c):
    if isinstance(c, (int, Fraction)):
        return 1 / Fraction(c)
    if isinstance(c, RationalFunction):
        return RationalFunction(1) / c
    raise TypeError(f"no inverse for coefficient {c!r}")


# ---------------------------------------------------------------------------
# series builders used all over the place
# ---------------------------------------------------------------------------

def series_log_one_plus(u: LaurentSeries, T: int) -> LaurentSeries:
    """ln(1 + u) for a series u with min_order >= 1, exact through T."""
    if u.coeffs and u.offset < 1:
        raise ValueError("series_log_one_plus needs min_order >= 1")
    T_in = _as_order(u.trunc)
    T_eff = int(min(T, T_in)) if min(T, T_in) != INFINITY else T
    acc = LaurentSeries.zero(T_eff)
    if not u.coeffs:
        return acc
    power = LaurentSeries.one()
    sign = 1
    j = 0
    while (j + 1) * u.offset <= T_eff:
        j += 1
        power = power * u
        if power.trunc is None or power.trunc > T_eff:
            power = LaurentSeries(power.offset, power.coeffs, T_eff)
        acc = acc + LaurentSeries(power.offset,
                                  tuple(c * Fraction(sign, j) for c in power.coeffs),
                                  power.trunc)
        sign = -sign
    return acc


def series_exp(u: LaurentSeries, T: int) -> LaurentSeries:
    """exp(u) for a series u with min_order >= 1, exact through T."""
    if u.coeffs and u.offset < 1:
        raise ValueError("series_exp needs min_order >= 1")
    T_in = _as_order(u.trunc)
    T_eff = int(min(T, T_in)) if min(T, T_in) != INFINITY else T
    acc = LaurentSeries.one() + LaurentSeries.zero(T_eff)
    if not u.coeffs:
        return acc
    power = LaurentSeries.one()
    fact = Fraction(1)
    j = 0
    while (j + 1) * u.offset <= T_eff:
        j += 1
        fact = fact / j
        power = power * u
        if power.trunc is None or power.trunc > T_eff:
            power = LaurentSeries(power.offset, power.coeffs, T_eff)
        acc = acc + LaurentSeries(power.offset,
                                  tuple(c * fact for c in power.coeffs),
                                  power.trunc)
    return acc


def series_geometric(T: int) -> LaurentSeries:
    return LaurentSeries.geometric(T)


def ratfun_derivative(f: RationalFunction) -> RationalFunction:
    return f.derivative()
