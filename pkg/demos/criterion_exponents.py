"""
Finding a power that is completely normal
=========================================

If one conjugate strictly dominates the rest in absolute value, a large
enough power of it is completely normal. The exponent comes from rigorous
interval bounds on the conjugate ratios, refined until every comparison is
certain.
"""

from normalbasis import GaloisGroup, is_completely_normal, zeta
from normalbasis.criterion import (
    PrecisionPolicy,
    affine_power_exponent,
    cos_half_exponent,
    cos_plus_one_exponent,
)

for ell in (5, 7, 8, 9, 11, 12, 13, 15, 16, 20):
    res = cos_plus_one_exponent(ell)
    print(f"{f'cos(2pi/{ell})+1':16} m = {res.exponent:3d}  ratio <= {float(res.ratio_bound):.6f}")

for ell in (5, 7, 9, 11, 13, 15):
    res = cos_half_exponent(ell)
    print(f"{f'cos(pi/{ell})':16} m = {res.exponent:3d}  ratio <= {float(res.ratio_bound):.6f}")

# starting precision only changes the work, never the answer
print("l=28 from 8 starting bits:", cos_plus_one_exponent(28, PrecisionPolicy(start_bits=8)).exponent)

# a*x + b with |a| > 2|b| and x a real algebraic integer generator
G = GaloisGroup(7, "real-quotient")
x = zeta(7) + zeta(7, -1)
res = affine_power_exponent(x, 5, 2, G)
print("(5x+2)^m needs m =", res.exponent, "binding subgroup:", res.details["binding_subgroup"])
print("certified:", bool(is_completely_normal(x * 5 + 2, G, res.exponent)))
