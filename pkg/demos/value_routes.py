"""Tour: one number, four independent routes, and the integer sequence.

Run with:  python3 demos/value_routes.py
"""

from fractions import Fraction

from finsum.exact import format_rational
from finsum.genfun import log_gf
from finsum.logsum import (
    harmonic_lcm_sequence,
    logsum_bernoulli_stirling,
    logsum_direct,
    logsum_recurrence,
    logsum_symbolic,
    table,
)

n, q = 6, Fraction(5, 3)
print(f"S({n}, {format_rational(q)}) by four routes:")
print("  direct alternating sum     :", format_rational(logsum_direct(n, q)))
print("  Bernoulli-Stirling rewrite :", format_rational(logsum_bernoulli_stirling(n, q)))
print("  two-term recurrence        :", format_rational(logsum_recurrence(n, q)))
print("  symbolic closed form at q  :", format_rational(logsum_symbolic(n)(q)))

coefficient = log_gf(n + 2, q).coefficient(n)
scaled = coefficient / (1 - q) ** (n + 2)
print("  generating series route    :", format_rational(scaled), "(after scaling by (1-q)^-(n+2))")

print()
print("Closed forms for n = 0..4 (numerator, common factor, pole structure):")
for row in table(4):
    print("  ", row)

print()
print("The |leading numerator coefficients| equal lcm(1..k) * H(k) — an")
print("integer for every k.  First eleven terms:")
print("  ", " ".join(str(v) for v in harmonic_lcm_sequence(11)))
