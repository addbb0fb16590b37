"""Unit groups mod l (and their quotient by +-1), subgroup lattices, characters.

Groups here are small (a few hundred elements at most), so subgroups and
characters are found by closure and brute-force search rather than by
structure theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .cyclotomic import euler_phi
from .errors import EnumerationBoundError

__all__ = [
    "phi",
    "GaloisGroup",
    "CyclicShiftGroup",
    "Subgroup",
    "Character",
    "build_group",
    "all_subgroups",
    "characters",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 512

FULL = "full"
REAL = "real-quotient"


def phi(n: int) -> int:
    """Euler's totient."""
    return euler_phi(n)


class _FiniteAbelianGroup:
    """Shared helpers; subclasses provide elements, identity, mul, canonical."""

    elements: tuple
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverse(self, g):
        h = g
        while True:
            nxt = self.mul(h, g)
            if nxt == self.identity:
                return h
            h = nxt

    def element_order(self, g) -> int:
        k, h = 1, g
        while h != self.identity:
            h = self.mul(h, g)
            k += 1
        return k

    def power(self, g, k: int):
        result = self.identity
        for _ in range(k % self.element_order(g)):
            result = self.mul(result, g)
        return result

    def closure(self, gens) -> frozenset:
        members = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    p = self.mul(h, g)
                    if p not in members:
                        members.add(p)
                        nxt.append(p)
            frontier = nxt
        return frozenset(members)


class GaloisGroup(_FiniteAbelianGroup):
    """Gal(Q(zeta_l)/Q) = (Z/lZ)^x, or Gal(Q(zeta_l)^+/Q) = (Z/lZ)^x/{+-1}.

    Elements are canonical integer representatives: residues in [1, l) for the
    full group, and min(t, l - t) for the real quotient.
    """

    def __init__(self, level: int, mode: str = FULL):
        if mode not in (FULL, REAL):
            raise ValueError(f"unknown group mode {mode!r}")
        if level < 1:
            raise ValueError(f"level must be positive, got {level}")
        if mode == REAL and level < 3:
            raise ValueError(f"real-quotient mode needs level >= 3, got {level}")
        self.level = level
        self.mode = mode
        self.identity = 1
        reps = {self.canonical(t) for t in range(1, max(level, 2)) if gcd(t, level) == 1}
        self.elements = tuple(sorted(reps))

    def canonical(self, t: int) -> int:
        if self.level == 1:
            return 1
        r = t % self.level
        if self.mode == REAL:
            r = min(r, self.level - r)
        return r

    def mul(self, a: int, b: int) -> int:
        return self.canonical(a * b)

    def inverse(self, g: int) -> int:
        if self.level == 1:
            return 1
        return self.canonical(pow(g, -1, self.level))

    def __repr__(self):
        return f"GaloisGroup(level={self.level}, mode={self.mode!r}, order={self.order})"

    def __eq__(self, other):
        return (
            isinstance(other, GaloisGroup)
            and (self.level, self.mode) == (other.level, other.mode)
        )

    def __hash__(self):
        return hash((self.level, self.mode))


class CyclicShiftGroup(_FiniteAbelianGroup):
    """Cyclic group of order n written additively: t stands for the matrix (1 0 / t 1) mod n."""

    mode = "cyclic-shift"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"order must be positive, got {n}")
        self.level = n
        self.identity = 0
        self.elements = tuple(range(n))

    def canonical(self, t: int) -> int:
        return t % self.level

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.level

    def inverse(self, g: int) -> int:
        return (-g) % self.level

    def __repr__(self):
        return f"CyclicShiftGroup(order={self.level})"

    def __eq__(self, other):
        return isinstance(other, CyclicShiftGroup) and self.level == other.level

    def __hash__(self):
        return hash(("shift", self.level))


def build_group(level: int, mode: str = FULL) -> GaloisGroup:
    return GaloisGroup(level, mode)


@dataclass(frozen=True)
class Subgroup:
    parent: _FiniteAbelianGroup = field(compare=False, hash=False)
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    @property
    def exponent(self) -> int:
        e = 1
        for g in self.elements:
            e = lcm(e, self.parent.element_order(g))
        return e

    def is_trivial(self) -> bool:
        return self.order == 1


def _check_bound(order, bound):
    if order > bound:
        raise EnumerationBoundError(f"group order {order} exceeds enumeration bound {bound}")


def all_subgroups(G, bound: int = DEFAULT_BOUND) -> list:
    """Every subgroup of G, sorted by order then elements."""
    _check_bound(G.order, bound)
    found = {G.closure([g]) for g in G.elements}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                j = G.closure(a | b)
                if j not in found and j not in new:
                    new.add(j)
        found |= new
        frontier = new
    subs = [Subgroup(G, tuple(sorted(s))) for s in found]
    subs.sort(key=lambda h: (h.order, h.elements))
    return subs


def full_subgroup(G) -> Subgroup:
    return Subgroup(G, tuple(sorted(G.elements)))


@dataclass(frozen=True)
class Character:
    """A character gamma -> zeta_modulus^exponents[gamma] of a subgroup."""

    subgroup: Subgroup = field(compare=False, hash=False)
    modulus: int
    values: tuple  # exponents aligned with subgroup.elements

    def exponent_of(self, g) -> int:
        return self.values[self.subgroup.elements.index(g)]

    def is_trivial(self) -> bool:
        return not any(self.values)


def _generators(H: Subgroup):
    G = H.parent
    gens, span = [], frozenset({G.identity})
    # larger-order elements first keeps the generating set short
    for g in sorted(H.elements, key=lambda g: (-G.element_order(g), g)):
        if g not in span:
            gens.append(g)
            span = G.closure(gens)
    return gens


def _extend(H: Subgroup, gens, assignment, d):
    G = H.parent
    values = {G.identity: 0}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g, a in zip(gens, assignment):
                p = G.mul(h, g)
                v = (values[h] + a) % d
                if p in values:
                    if values[p] != v:
                        return None
                else:
                    values[p] = v
                    nxt.append(p)
        frontier = nxt
    return values


def characters(H: Subgroup, bound: int = DEFAULT_BOUND) -> list:
    """All |H| characters of H, found by searching homomorphisms H -> Z/d (d = exponent of H)."""
    _check_bound(H.order, bound)
    G = H.parent
    d = H.exponent
    gens = _generators(H)
    # a generator of order k can only map to multiples of d/k
    choices = [range(0, d, d // G.element_order(g)) for g in gens]
    result = []

    def search(i, partial):
        if i == len(gens):
            values = _extend(H, gens, partial, d)
            if values is not None:
                result.append(Character(H, d, tuple(values[g] for g in H.elements)))
            return
        for a in choices[i]:
            search(i + 1, partial + [a])

    search(0, [])
    if len(result) != H.order:
        raise AssertionError(f"found {len(result)} characters for a group of order {H.order}")
    result.sort(key=lambda c: c.values)
    return result
