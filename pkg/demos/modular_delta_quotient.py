"""
The modular function Delta(tau)/Delta(N tau)
============================================

Its q-expansion has integer coefficients and agrees exactly with a product
of Siegel functions. Conjugates under (1 0 / t 1) have strictly larger
q-order, which makes every power completely normal.
"""

from fractions import Fraction

from normalbasis.modular import (
    SiegelIndex,
    delta_ratio_expansion,
    siegel_expansion,
    valuation_exponent_sum,
    verify_delta_quotient_complete_normality,
    verify_delta_siegel_product,
)

s = delta_ratio_expansion(2, truncation=6)
print("Delta(tau)/Delta(2tau) =", [(str(e), c) for e, c in s.terms.items()])

# g_(0,1/2) = 2i q^(1/12) prod (1 + q^n)^2
g = siegel_expansion(SiegelIndex(0, Fraction(1, 2), 2), truncation=3)
print(g)

for N in range(2, 9):
    check = verify_delta_siegel_product(N, 40)
    print(f"N={N}: product identity holds to q^{check.compared_up_to}: {check.holds}")

print("S(N,t) for N=7:", [str(valuation_exponent_sum(7, t)) for t in range(1, 7)])

cert = verify_delta_quotient_complete_normality(6)
for v in cert.subgroups:
    print(v.elements, v.checks, v.evidence["orders"])
