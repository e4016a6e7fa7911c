"""Exact arithmetic toolkit for the alternating log-sum numbers S(n, q).

S(n, q) = sum_{j=0}^{n} (-1)^n / ((j+1) q^(j+1) (q-1)^(n+1-j)), a rational
function of q with poles only at 0 and 1.  The package computes these
numbers by four independent routes, expands the associated generating
series, evaluates the weighted Bernoulli / Stirling / Daehee network
around them, certifies p-adic (Volkenborn) integral limits, and ships a
mechanically verified identity catalog that flags flawed statements with
exact counterexamples.

Everything is exact (`fractions.Fraction`, polynomial and rational-function
arithmetic, truncated Laurent series); the lone floating-point corner is
the cosine series family in :mod:`finsum.zetavals`.
"""

from .exact import (
    INFINITY,
    LaurentSeries,
    Polynomial,
    RationalFunction,
    format_rational,
    parse_rational,
)
from .identities import (
    get_record,
    identity_ids,
    records,
    report_json,
    report_table,
    run_all,
    run_identity,
)
from .logsum import (
    harmonic_lcm_sequence,
    logsum,
    logsum_bernoulli_stirling,
    logsum_direct,
    logsum_recurrence,
    logsum_symbolic,
    logsum_value,
    table,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "INFINITY",
    "LaurentSeries",
    "Polynomial",
    "RationalFunction",
    "format_rational",
    "parse_rational",
    "get_record",
    "identity_ids",
    "records",
    "report_json",
    "report_table",
    "run_all",
    "run_identity",
    "harmonic_lcm_sequence",
    "logsum",
    "logsum_bernoulli_stirling",
    "logsum_direct",
    "logsum_recurrence",
    "logsum_symbolic",
    "logsum_value",
    "table",
]
