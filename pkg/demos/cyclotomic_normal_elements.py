"""
Normal elements in a real cyclotomic field
==========================================

Exact arithmetic in Q(zeta_l), Galois conjugates, and a per-subgroup
normality certificate checked two independent ways.
"""

from normalbasis import GaloisGroup, all_subgroups, is_completely_normal, zeta
from normalbasis.cyclotomic import cos_plus_one_element

# elements are exact vectors in the power basis of zeta_7
x = zeta(7) + zeta(7, -1)
print("2cos(2pi/7) =", x)
print("its conjugates:", [x.galois(t) for t in (1, 2, 3)])
print("norm to Q:", x.norm())

# the real subfield has Galois group (Z/7)^x / {+-1}, cyclic of order 3
G = GaloisGroup(7, "real-quotient")
print("subgroups:", [H.elements for H in all_subgroups(G)])

# x = 1 is the standard non-example: every nontrivial character sum vanishes
one = is_completely_normal(zeta(7) ** 0, G)
print("x = 1 fails at", [v.elements for v in one.failing()])

# cos(2pi/7) + 1, squared, passes both the character-sum and the determinant test
cert = is_completely_normal(cos_plus_one_element(7), G, exponent=2)
for v in cert.subgroups:
    print(v.elements, v.checks)
print(cert.to_json()[:200], "...")
