"""Tour: p-adic Riemann sums converging to Bernoulli and Daehee numbers.

The Volkenborn integral of x^j is the Bernoulli number B_j; of the falling
factorial (x)_n it is the Daehee number D_n = (-1)^n n!/(n+1); of C(x,n)
it is (-1)^n/(n+1).  Finite Riemann sums at level N approximate these with
p-adic error valuation growing in N — computed exactly here, no p-adic
floats involved.

Run with:  python3 demos/padic_certificates.py
"""

from finsum.exact import INFINITY, format_rational
from finsum.special import bernoulli
from finsum.volkenborn import convergence_report, integral_limit, volkenborn_sample

for p in (2, 3):
    j = 3
    report = convergence_report(p, "power", j, 8)
    print(f"x^{j} at p={p}:  limit B_{j} = {format_rational(bernoulli(j))}")
    for row in report["rows"]:
        print(
            f"   level {row['N']}: partial {row['partial_sum']:>22}"
            f"   v_{p}(error) = {row['valuation']}"
        )
    print("   bound v >= N-j-2 and monotone growth:", "ok" if report["ok"] else "VIOLATED")
    print()

print("Falling-factorial and binomial integrands at the top level:")
for integrand in ("falling", "binom"):
    for j in range(5):
        sample = volkenborn_sample(3, 8, integrand, j)
        v = sample.error_valuation
        print(
            f"   {integrand:>7} j={j}: limit {format_rational(integral_limit(integrand, j)):>8}"
            f"   partial {format_rational(sample.partial_sum):>28}"
            f"   v_3(error) = {'+inf' if v == INFINITY else v}"
        )
