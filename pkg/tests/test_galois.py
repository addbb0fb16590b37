from itertools import combinations
from math import gcd

import pytest

from normalbasis.cyclotomic import CyclotomicElement, euler_phi
from normalbasis.errors import EnumerationBoundError
from normalbasis.galois import (
    CyclicShiftGroup,
    GaloisGroup,
    Subgroup,
    all_subgroups,
    build_group,
    characters,
    full_subgroup,
    phi,
)


def test_phi():
    assert (phi(7), phi(12), phi(15)) == (6, 4, 8)


def test_build_group_examples():
    assert build_group(7, "real-quotient").elements == (1, 2, 3)
    assert build_group(5, "full").elements == (1, 2, 3, 4)
    assert build_group(12, "real-quotient").elements == (1, 5)
    with pytest.raises(ValueError):
        build_group(2, "real-quotient")


@pytest.mark.parametrize("level", range(3, 41))
def test_group_orders_and_closure(level):
    full = GaloisGroup(level)
    real = GaloisGroup(level, "real-quotient")
    assert full.order == euler_phi(level)
    assert real.order == euler_phi(level) // 2
    if level not in (3, 4, 6):
        assert real.order >= 2
    for G in (full, real):
        for a in G.elements:
            assert G.mul(a, G.inverse(a)) == 1
            for b in G.elements:
                assert G.mul(a, b) in G.elements


def subgroups_by_triples(G):
    """Oracle: closures of every triple of elements (unit groups here have rank <= 3)."""
    found = set()
    elems = G.elements
    for a in elems:
        for b in elems:
            for c in elems:
                found.add(G.closure([a, b, c]))
    return found


def subgroups_by_subsets(G):
    """Oracle: every subset containing 1 and closed under the group law."""
    others = [g for g in G.elements if g != G.identity]
    found = set()
    for r in range(len(others) + 1):
        for combo in combinations(others, r):
            s = frozenset((G.identity,) + combo)
            if all(G.mul(a, b) in s for a in s for b in s):
                found.add(s)
    return found


@pytest.mark.parametrize("level", range(3, 41))
@pytest.mark.parametrize("mode", ["full", "real-quotient"])
def test_subgroup_lattice_matches_brute_force(level, mode):
    G = GaloisGroup(level, mode)
    subs = all_subgroups(G)
    got = {frozenset(h.elements) for h in subs}
    assert len(got) == len(subs)
    assert got == subgroups_by_triples(G)
    if G.order <= 12:
        assert got == subgroups_by_subsets(G)
    for h in subs:
        assert G.order % h.order == 0
        assert G.identity in h.elements


def test_subgroup_examples():
    assert len(all_subgroups(CyclicShiftGroup(3))) == 2
    sub15 = all_subgroups(GaloisGroup(15, "real-quotient"))
    assert [h.elements for h in sub15] == [(1,), (1, 4), (1, 2, 4, 7)]
    assert len(all_subgroups(GaloisGroup(24, "real-quotient"))) == 5


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        all_subgroups(GaloisGroup(31), bound=10)


def test_characters_small():
    G = GaloisGroup(7)
    triv = Subgroup(G, (1,))
    (chi,) = characters(triv)
    assert chi.is_trivial()
    order2 = Subgroup(G, (1, 6))
    chis = characters(order2)
    assert sorted(c.values for c in chis) == [(0, 0), (0, 1)]
    assert all(c.modulus == 2 for c in chis)


def test_cyclic_order4_characters_brute_force():
    G = GaloisGroup(5)
    H = full_subgroup(G)  # generated by 2: 2 -> 4 -> 3 -> 1
    chis = characters(H)
    assert len(chis) == 4
    gen_values = sorted(c.exponent_of(2) for c in chis)
    assert gen_values == [0, 1, 2, 3]
    # brute force: e is a homomorphism iff e(2^k) = k e(2) mod 4
    for c in chis:
        e = c.exponent_of(2)
        for k in range(4):
            assert c.exponent_of(pow(2, k, 5)) == (k * e) % 4


def char_value(chi, g, level):
    return CyclotomicElement.zeta_power(chi.modulus, chi.exponent_of(g)).lift(level)


@pytest.mark.parametrize("level,mode", [(5, "full"), (8, "full"), (12, "full"), (15, "full"), (21, "real-quotient"), (24, "full")])
def test_character_orthogonality_exact(level, mode):
    G = GaloisGroup(level, mode)
    for H in all_subgroups(G):
        chis = characters(H)
        assert len(chis) == H.order
        assert len({c.values for c in chis}) == H.order
        d = chis[0].modulus
        for chi in chis:
            for psi in chis:
                total = CyclotomicElement.zero(d)
                for g in H.elements:
                    total = total + char_value(chi, G.inverse(g), d) * char_value(psi, g, d)
                assert total == (H.order if chi.values == psi.values else 0)
            # multiplicativity
            for g in H.elements:
                for h in H.elements:
                    assert chi.exponent_of(G.mul(g, h)) == (chi.exponent_of(g) + chi.exponent_of(h)) % d


@pytest.mark.parametrize("level", [l for l in range(5, 41) if l not in (6,)])
def test_real_subfield_degree_formula(level):
    assert GaloisGroup(level, "real-quotient").order == euler_phi(level) // 2
