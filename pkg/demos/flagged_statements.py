"""Tour: statements that fail under exact arithmetic, and their repairs.

The identity catalog carries 18 records with status
``printed_fails_corrected_ok``: the statement as originally displayed is
false, an exact counterexample is stored, and a corrected form passes a
full sweep.  This demo replays three of them live.

Run with:  python3 demos/flagged_statements.py
"""

from fractions import Fraction

from finsum.identities import get_record, run_identity
from finsum.logsum import logsum_value
from finsum.special import euler_polynomial, harmonic_alternating
from finsum.zetavals import eta_neg

HALF = Fraction(1, 2)

print("1) The half-parameter evaluation")
print("   claimed:  S(n,1/2) = 2^(n+1) A(n+1)")
print("   at n = 0:")
print("     S(0,1/2)        =", logsum_value(0, HALF))
print("     2^1 * A(1)      =", Fraction(2) * harmonic_alternating(1))
print("   corrected: S(n,1/2) = 2^(n+2) A(n+1)")
print("     2^2 * A(1)      =", Fraction(4) * harmonic_alternating(1))

print()
print("2) The eta/Euler degree offset")
print("   claimed:  eta(-m, 2) = E_(m+1)(2)")
print("   at m = 0:")
print("     eta(0, 2)       =", eta_neg(0, 2))
print("     E_1(2)          =", euler_polynomial(1)(Fraction(2)))
print("   corrected: eta(-m, 2) = E_m(2)")
print("     E_0(2)          =", euler_polynomial(0)(Fraction(2)))

print()
print("3) The full records, re-verified just now:")
for identity_id in (
    "half-parameter-harmonic",
    "eta-degree-offset",
    "harmonic-split",
    "ode-derivative-forms",
    "harmonic-stirling-second",
):
    entry = run_identity(identity_id)
    record = get_record(identity_id)
    flag = "ok" if entry["passed"] else "UNEXPECTED"
    print(f"   {identity_id:<28} swept={entry['swept']:<4} {flag}")
    for cx in record.counterexamples:
        where = ", ".join(f"{k}={v}" for k, v in cx.params.items())
        print(f"       counterexample at {where}: {cx.lhs} != {cx.rhs}")
