"""Archimedean valuation criterion for complete normality.

If every nontrivial conjugate ratio satisfies |x^gamma / x| < 1, then x^m is
completely normal as soon as |x^gamma / x|^m <= 1/n for all gamma != Id, with
n the degree of the extension. This module certifies those inequalities
rigorously: the ratios are themselves field elements, so comparisons use
interval enclosures with precision doubling, and the boundary case
|y|^m == c is settled by the exact test y^m == +-c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import (
    CyclotomicElement,
    cos_half_element,
    cos_plus_one_element,
    euler_phi,
    zeta,
)
from .errors import DomainError, HypothesisError, VerificationError
from .galois import REAL, GaloisGroup, all_subgroups
from .intervals import numeric_eval

__all__ = [
    "PrecisionPolicy",
    "ExponentResult",
    "RealEnclosure",
    "compare_abs_power",
    "ratio_upper_bound",
    "min_exponent",
    "cos_plus_one_exponent",
    "cos_half_exponent",
    "affine_power_exponent",
    "rational_minimal_polynomial",
]


@dataclass(frozen=True)
class PrecisionPolicy:
    start_bits: int = 64
    max_bits: int = 1 << 16


DEFAULT_POLICY = PrecisionPolicy()


class RealEnclosure:
    """Refinable enclosure of |y| for a real element y (principal embedding)."""

    def __init__(self, y: CyclotomicElement, policy: PrecisionPolicy = DEFAULT_POLICY):
        self.y = y
        self.policy = policy
        self.bits = policy.start_bits
        self._update()

    def _update(self):
        box = numeric_eval(self.y, self.bits)
        if not box.imag_contains_zero():
            raise HypothesisError(f"element {self.y!r} is not real")
        self.lo, self.hi = box.real_abs_bounds()

    def refine(self):
        if self.bits >= self.policy.max_bits:
            raise VerificationError(
                f"could not separate a comparison at {self.bits} bits for {self.y!r}"
            )
        self.bits *= 2
        self._update()


def compare_abs_power(enc: RealEnclosure, m: int, c: Fraction) -> int:
    """Sign of |y|^m - c, certified."""
    exact_checked = False
    while True:
        if enc.hi ** m < c:
            return -1
        if enc.lo ** m > c:
            return 1
        if not exact_checked:
            ym = enc.y ** m
            if ym == c or ym == -c:
                return 0
            exact_checked = True
        enc.refine()


def _certified_upper(enc: RealEnclosure, m: int, c: Fraction) -> Fraction:
    """An upper bound B on |y| with B^m <= c (refining as needed); assumes |y|^m < c."""
    while enc.hi ** m > c:
        enc.refine()
    return enc.hi


def _minimal_power(enc: RealEnclosure, c: Fraction) -> int:
    """Least m >= 1 with |y|^m <= c; needs |y| < 1 and c > 0."""
    m = 1
    while compare_abs_power(enc, m, c) > 0:
        m += 1
    return m


def _require_real(x: CyclotomicElement):
    if not x.is_real():
        raise HypothesisError(f"{x!r} has non-real conjugates")


def _ratio_enclosures(x, conjugates, policy):
    encs = {}
    for g, xg in conjugates.items():
        y = xg / x
        if y == 1 or y == -1:
            raise HypothesisError(f"|x^{g} / x| = 1 exactly")
        enc = RealEnclosure(y, policy)
        if compare_abs_power(enc, 1, Fraction(1)) >= 0:
            raise HypothesisError(f"|x^{g} / x| > 1")
        encs[g] = enc
    return encs


def _nontrivial_conjugates(x, elements, center):
    return {g: x.galois(g) for g in elements if g != center}


def ratio_upper_bound(
    x: CyclotomicElement, G: GaloisGroup, policy: PrecisionPolicy = DEFAULT_POLICY
) -> Fraction:
    """Rational B < 1 with |x^gamma / x| <= B for every gamma != Id in G."""
    if x.is_zero():
        raise HypothesisError("zero has no conjugate ratios")
    _require_real(x)
    encs = _ratio_enclosures(x, _nontrivial_conjugates(x, G.elements, G.identity), policy)
    if not encs:
        return Fraction(0)
    return max(_certified_upper(e, 1, Fraction(1)) for e in encs.values())


@dataclass
class ExponentResult:
    """Minimal exponent from the ratio criterion, with its certified bounds.

    ``ratio_bound`` is a rational upper bound on the largest ratio and
    ``ratio_lower`` a lower bound on the same ratio; ratio_bound**exponent <=
    threshold < ratio_lower**(exponent - 1) whenever exponent > 1.
    """

    level: int
    construction: str
    exponent: int
    ratio_bound: Fraction
    threshold: Fraction
    ratio_lower: Fraction = Fraction(0)
    precision_bits: int = 0
    exact_tie: bool = False
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "construction": self.construction,
            "exponent": self.exponent,
            "ratio_bound": str(self.ratio_bound),
            "ratio_lower": str(self.ratio_lower),
            "threshold": str(self.threshold),
            "exact_tie": self.exact_tie,
            "details": self.details,
        }


def _exponent_from_ratios(encs: dict, threshold: Fraction):
    """Minimal common exponent for a family of ratio enclosures.

    Returns (m, upper bound B over all ratios, lower bound of the binding
    ratio, tie flag, bits used).
    """
    if not encs:
        return 1, Fraction(0), Fraction(0), False, 0
    per = {g: _minimal_power(e, threshold) for g, e in encs.items()}
    m = max(per.values())
    binding = max(g for g, k in per.items() if k == m)
    tie = False
    uppers = []
    for g, e in encs.items():
        if compare_abs_power(e, m, threshold) == 0:
            tie = True
            uppers.append(e.hi)
        else:
            uppers.append(_certified_upper(e, m, threshold))
    lower = encs[binding].lo
    if m > 1:
        while lower ** (m - 1) <= threshold:
            encs[binding].refine()
            lower = encs[binding].lo
    bits = max(e.bits for e in encs.values())
    return m, max(uppers), lower, tie, bits


def min_exponent(
    x: CyclotomicElement,
    G: GaloisGroup,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    construction: str = "custom",
) -> ExponentResult:
    """Least m with |x^gamma / x|^m <= 1/|G| for every gamma != Id."""
    if x.is_zero():
        raise HypothesisError("zero has no conjugate ratios")
    _require_real(x)
    threshold = Fraction(1, G.order)
    encs = _ratio_enclosures(x, _nontrivial_conjugates(x, G.elements, G.identity), policy)
    m, bound, lower, tie, bits = _exponent_from_ratios(encs, threshold)
    return ExponentResult(x.level, construction, m, bound, threshold, lower, bits, tie)


def _closed_form_exponent(x, ratio, level, construction, policy):
    G = GaloisGroup(level, REAL)
    threshold = Fraction(2, euler_phi(level))
    assert threshold == Fraction(1, G.order)
    if ratio == 1 or ratio == -1:
        raise HypothesisError("closed-form ratio has absolute value 1")
    closed = RealEnclosure(ratio, policy)
    if compare_abs_power(closed, 1, Fraction(1)) >= 0:
        raise HypothesisError("closed-form ratio is not below 1")
    m, bound, lower, tie, bits = _exponent_from_ratios({"closed": closed}, threshold)

    # the closed form must dominate every actual conjugate ratio
    dominated = {}
    for g in G.elements:
        if g == G.identity:
            continue
        enc = RealEnclosure(x.galois(g) / x / ratio, policy)
        sign = compare_abs_power(enc, 1, Fraction(1))
        if sign > 0:
            raise VerificationError(f"conjugate {g} exceeds the closed-form ratio at level {level}")
        dominated[str(g)] = "equal" if sign == 0 else "below"
    return ExponentResult(
        level,
        construction,
        m,
        bound,
        threshold,
        lower,
        bits,
        tie,
        {"closed_form_dominates": dominated},
    )


def cos_plus_one_exponent(level: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> ExponentResult:
    """Least m with ((cos(4pi/l)+1)/(cos(2pi/l)+1))^m <= 2/phi(l)."""
    x = cos_plus_one_element(level)
    double_angle = (zeta(level, 2) + zeta(level, -2)) / 2 + 1
    return _closed_form_exponent(x, double_angle / x, level, "cos-plus-one", policy)


def cos_half_exponent(level: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> ExponentResult:
    """Least m with (cos(2pi/l)/cos(pi/l))^m <= 2/phi(l), l odd >= 5."""
    x = cos_half_element(level)
    cos_full = (zeta(level, 1) + zeta(level, -1)) / 2
    return _closed_form_exponent(x, cos_full / x, level, "cos-half", policy)


def rational_minimal_polynomial(x: CyclotomicElement, G: GaloisGroup) -> list:
    """Coefficients (constant first) of prod_{gamma in G} (X - x^gamma), as Fractions.

    This is the minimal polynomial of x over Q when the conjugates are distinct.
    """
    level = x.level
    poly = [CyclotomicElement.one(level)]
    for g in G.elements:
        root = x.galois(g)
        shifted = [CyclotomicElement.zero(level)] + poly
        for i, c in enumerate(poly):
            shifted[i] = shifted[i] - root * c
        poly = shifted
    if not all(c.is_rational() for c in poly):
        raise VerificationError("conjugate product has irrational coefficients")
    return [c.rational_value() for c in poly]


def affine_power_exponent(
    x: CyclotomicElement,
    a: int,
    b: int,
    G: GaloisGroup,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> ExponentResult:
    """Exponent m making (a*x + b)^m completely normal, for real algebraic-integer generators x.

    For each subgroup H (order >= 2) the conjugate of a*x + b of largest
    absolute value is used as centre and the least m_H with every other ratio
    to the power m_H below 1/|H| is found; the result is max m_H.
    """
    if a == 0 or b == 0:
        raise DomainError("a and b must be nonzero integers")
    if abs(a) <= 2 * abs(b):
        raise DomainError(f"need |a/b| > 2, got a={a}, b={b}")
    if not x.is_real():
        raise HypothesisError("x must have only real conjugates")
    conj = {g: x.galois(g) for g in G.elements}
    if len(set(conj.values())) != len(conj):
        raise HypothesisError("x does not generate the field (repeated conjugates)")
    coeffs = rational_minimal_polynomial(x, G)
    if any(c.denominator != 1 for c in coeffs):
        raise HypothesisError("x is not an algebraic integer")

    z = {g: xg * a + b for g, xg in conj.items()}
    elements = list(G.elements)
    for i, g in enumerate(elements):
        for h in elements[i + 1:]:
            if z[g] == z[h] or z[g] == -z[h]:
                raise VerificationError(f"conjugates {g} and {h} of ax+b share an absolute value")

    def dominant(members):
        best = members[0]
        for g in members[1:]:
            enc = RealEnclosure(z[g] / z[best], policy)
            if compare_abs_power(enc, 1, Fraction(1)) > 0:
                best = g
        return best

    per_subgroup = {}
    binding = None
    for H in all_subgroups(G):
        if H.order < 2:
            continue
        centre = dominant(list(H.elements))
        encs = {}
        for g in H.elements:
            if g != centre:
                encs[g] = RealEnclosure(z[g] / z[centre], policy)
        threshold = Fraction(1, H.order)
        m_h, bound, lower, tie, bits = _exponent_from_ratios(encs, threshold)
        per_subgroup[H.elements] = m_h
        if binding is None or m_h > binding[0] or (m_h == binding[0] and H.order > binding[1].order):
            binding = (m_h, H, centre, bound, threshold, lower, tie, bits)

    if binding is None:
        return ExponentResult(x.level, "ax-plus-b", 1, Fraction(0), Fraction(1))
    m, H, centre, bound, threshold, lower, tie, bits = binding
    return ExponentResult(
        x.level,
        "ax-plus-b",
        m,
        bound,
        threshold,
        lower,
        bits,
        tie,
        {
            "a": a,
            "b": b,
            "dominant_conjugate": dominant(elements),
            "binding_subgroup": list(H.elements),
            "binding_centre": centre,
            "minimal_polynomial": [str(c) for c in coeffs],
            "subgroup_exponents": {
                ",".join(map(str, k)): v for k, v in sorted(per_subgroup.items())
            },
        },
    )
