"""
Normal elements of Q(zeta_{t l}) from two pieces
================================================

sqrt(-t) + 1 is normal in Q(sqrt(-t)), a power of cos(2pi/(t l)) + 1 is
normal in the real subfield, and when the two fields are disjoint their
product is normal in the compositum.
"""

from normalbasis.criterion import cos_plus_one_exponent
from normalbasis.cyclotomic import cos_plus_one_element, sqrt_minus_t
from normalbasis.normality import composite_normal_check

# sqrt(-3) is a Gauss sum in Q(zeta_3); sqrt(-4) = 2i
print(sqrt_minus_t(3), "squared is", sqrt_minus_t(3) ** 2)

for t, ell in ((3, 5), (4, 5), (3, 7), (4, 7)):
    level = t * ell
    m = cos_plus_one_exponent(level).exponent
    res = composite_normal_check(sqrt_minus_t(t) + 1, cos_plus_one_element(level) ** m, level)
    print(f"t={t} l={ell}: m={m}, degrees {res.degrees}, normal={res.normal}")
