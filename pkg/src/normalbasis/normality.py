"""Exact normality tests for elements of cyclotomic fields.

Two independent routes decide whether the conjugates of x under a subgroup H
are linearly independent over the fixed field of H:

* character sums: sum over gamma in H of chi(gamma^-1) x^gamma, nonzero for every chi;
* the group determinant det[x^(gamma*delta)], by fraction-free elimination.

They are mathematically equivalent (the group determinant factors into the
character sums), so every certificate runs both and treats disagreement as a bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import lcm

from .cyclotomic import CyclotomicElement
from .errors import HypothesisError, LevelMismatchError, VerificationError
from .galois import REAL, GaloisGroup, Subgroup, all_subgroups, characters, full_subgroup

__all__ = [
    "SCHEMA",
    "CharacterTest",
    "SubgroupVerdict",
    "NormalityCertificate",
    "CompositeResult",
    "character_sum",
    "conjugate",
    "is_normal",
    "group_determinant",
    "is_normal_determinant",
    "is_completely_normal",
    "composite_normal_check",
    "stabilizer",
]

SCHEMA = "normalbasis.certificate/1"


def _check_element(x: CyclotomicElement, H: Subgroup):
    G = H.parent
    if not isinstance(G, GaloisGroup):
        raise TypeError("cyclotomic normality tests need a GaloisGroup parent")
    if x.level != G.level:
        raise LevelMismatchError(f"element level {x.level} but group level {G.level}")
    if G.mode == REAL and not x.is_real():
        raise HypothesisError("real-quotient group only acts on real elements")


def conjugate(x: CyclotomicElement, g: int) -> CyclotomicElement:
    return x.galois(g)


def character_sum(x: CyclotomicElement, H: Subgroup, chi) -> CyclotomicElement:
    """sum_{gamma in H} chi(gamma^-1) x^gamma, computed at level lcm(l, d)."""
    _check_element(x, H)
    G = H.parent
    target = lcm(x.level, chi.modulus)
    step = target // chi.modulus
    total = CyclotomicElement.zero(target)
    for g, e in zip(H.elements, chi.values):
        # chi(g^-1) = zeta_d^(-e)
        total = total + x.galois(g).lift(target).mul_zeta(-e * step)
    return total


@dataclass
class CharacterTest:
    normal: bool
    vanishing: list = field(default_factory=list)  # exponent tuples of characters with zero sum

    def __bool__(self):
        return self.normal


def is_normal(x: CyclotomicElement, H: Subgroup) -> CharacterTest:
    _check_element(x, H)
    vanishing = [list(chi.values) for chi in characters(H) if character_sum(x, H, chi).is_zero()]
    return CharacterTest(not vanishing, vanishing)


def _bareiss_det(rows):
    """Determinant of a square matrix of field elements by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    m = [list(r) for r in rows]
    level = m[0][0].level
    sign = 1
    prev = CyclotomicElement.one(level)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return CyclotomicElement.zero(level)
        pivot = m[k][k]
        prev_inv = prev.inverse()
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - mik * m[k][j]) * prev_inv
            m[i][k] = CyclotomicElement.zero(level)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def group_determinant(x: CyclotomicElement, H: Subgroup) -> CyclotomicElement:
    """det[x^(gamma*delta)] over gamma, delta in H."""
    _check_element(x, H)
    G = H.parent
    conj = {g: x.galois(g) for g in H.elements}
    rows = [[conj[G.mul(g, h)] for h in H.elements] for g in H.elements]
    return _bareiss_det(rows)


def is_normal_determinant(x: CyclotomicElement, H: Subgroup) -> bool:
    return not group_determinant(x, H).is_zero()


@dataclass
class SubgroupVerdict:
    elements: tuple
    checks: dict  # check name -> bool
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "checks": dict(self.checks),
            "evidence": self.evidence,
            "passed": self.passed,
        }


@dataclass
class NormalityCertificate:
    level: int
    mode: str
    element: dict
    exponent: object
    subgroups: list
    claim: str = "completely normal"

    @property
    def completely_normal(self) -> bool:
        return all(v.passed for v in self.subgroups)

    @property
    def verdict(self) -> str:
        return self.claim if self.completely_normal else "not " + self.claim

    def __bool__(self):
        return self.completely_normal

    def failing(self) -> list:
        return [v for v in self.subgroups if not v.passed]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "level": self.level,
            "mode": self.mode,
            "element": self.element,
            "exponent": self.exponent,
            "claim": self.claim,
            "subgroups": [v.to_dict() for v in self.subgroups],
            "verdict": self.verdict,
            "completely_normal": self.completely_normal,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def _verdict(x, H) -> SubgroupVerdict:
    chars = is_normal(x, H)
    det = is_normal_determinant(x, H)
    if bool(chars) != det:
        raise VerificationError(
            f"character-sum and determinant tests disagree on subgroup {H.elements}"
        )
    evidence = {"vanishing_characters": chars.vanishing} if chars.vanishing else {}
    return SubgroupVerdict(
        H.elements, {"character_sum": bool(chars), "group_determinant": det}, evidence
    )


def is_completely_normal(
    x: CyclotomicElement, G: GaloisGroup, exponent: int = 1, subgroups=None
) -> NormalityCertificate:
    """Check x**exponent for normality over every subgroup of G."""
    y = x ** exponent
    if subgroups is None:
        subgroups = all_subgroups(G)
    verdicts = [_verdict(y, H) for H in subgroups]
    return NormalityCertificate(G.level, G.mode, x.to_dict(), exponent, verdicts)


def stabilizer(x: CyclotomicElement) -> tuple:
    """Units t mod l with x^t = x, i.e. Gal(Q(zeta_l)/Q(x))."""
    G = GaloisGroup(x.level)
    return tuple(t for t in G.elements if x.galois(t) == x)


@dataclass
class CompositeResult:
    level: int
    degrees: tuple  # ([Q(x1):Q], [Q(x2):Q], [Q(x1, x2):Q])
    mode: str
    certificate: NormalityCertificate

    @property
    def normal(self) -> bool:
        return self.certificate.completely_normal

    def __bool__(self):
        return self.normal

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "degrees": {
                "first": self.degrees[0],
                "second": self.degrees[1],
                "compositum": self.degrees[2],
            },
            "disjoint": self.degrees[0] * self.degrees[1] == self.degrees[2],
            "mode": self.mode,
            "certificate": self.certificate.to_dict(),
        }


def composite_normal_check(
    x1: CyclotomicElement, x2: CyclotomicElement, level: int
) -> CompositeResult:
    """Lift x1, x2 to Q(zeta_level) and test x1*x2 for normality over Q(x1, x2)/Q.

    The fields Q(x1), Q(x2) must meet only in Q; for abelian fields this is
    checked as [Q(x1,x2):Q] = [Q(x1):Q][Q(x2):Q].
    """
    y1, y2 = x1.lift(level), x2.lift(level)
    G = GaloisGroup(level)
    s1, s2 = set(stabilizer(y1)), set(stabilizer(y2))
    both = s1 & s2
    n = G.order
    degrees = (n // len(s1), n // len(s2), n // len(both))
    if degrees[0] * degrees[1] != degrees[2]:
        raise HypothesisError(
            f"fields are not linearly disjoint: degrees {degrees[0]} * {degrees[1]} != {degrees[2]}"
        )
    if both == {1}:
        group = G
    elif both == {1, level - 1}:
        group = GaloisGroup(level, REAL)
    else:
        raise HypothesisError(
            "compositum is neither Q(zeta_l) nor its real subfield; not supported"
        )
    y = y1 * y2
    H = full_subgroup(group)
    cert = NormalityCertificate(
        level, group.mode, y.to_dict(), 1, [_verdict(y, H)], claim="normal"
    )
    return CompositeResult(level, degrees, group.mode, cert)
