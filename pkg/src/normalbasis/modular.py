"""Siegel functions, the discriminant quotient Delta(tau)/Delta(N tau), and q-valuations.

All expansions are formal: q = exp(2 pi i tau) is a symbol, roots of unity
exp(2 pi i r) with r rational live in a cyclotomic coefficient field, and the
constant (2 pi)^12 of Delta cancels in the quotient so it never appears.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm

from .cyclotomic import CyclotomicElement
from .errors import DomainError, VerificationError
from .galois import CyclicShiftGroup, all_subgroups
from .normality import NormalityCertificate, SubgroupVerdict
from .qseries import QSeries

__all__ = [
    "bernoulli2",
    "frac",
    "SiegelIndex",
    "IntegerMatrix2x2",
    "canonical_index",
    "transform_index",
    "canonical_indices",
    "siegel_leading_exponent",
    "siegel_expansion",
    "q_order",
    "delta_ratio_expansion",
    "ProductCheck",
    "verify_delta_siegel_product",
    "valuation_exponent_sum",
    "conjugate_q_order",
    "verify_delta_quotient_complete_normality",
]

DEFAULT_TRUNCATION = 40


def bernoulli2(x) -> Fraction:
    x = Fraction(x)
    return x * x - x + Fraction(1, 6)


def frac(x) -> Fraction:
    x = Fraction(x)
    return x - floor(x)


@dataclass(frozen=True)
class SiegelIndex:
    """A pair (r1, r2) in (1/N)Z^2 but not in Z^2."""

    r1: Fraction
    r2: Fraction
    N: int

    def __post_init__(self):
        r1, r2 = Fraction(self.r1), Fraction(self.r2)
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "r2", r2)
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        if (r1 * self.N).denominator != 1 or (r2 * self.N).denominator != 1:
            raise ValueError(f"({r1}, {r2}) is not in (1/{self.N})Z^2")
        if r1.denominator == 1 and r2.denominator == 1:
            raise ValueError(f"({r1}, {r2}) lies in Z^2")

    def to_dict(self) -> dict:
        return {"r1": str(self.r1), "r2": str(self.r2), "N": self.N}


@dataclass(frozen=True)
class IntegerMatrix2x2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __matmul__(self, other: IntegerMatrix2x2) -> IntegerMatrix2x2:
        return IntegerMatrix2x2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def lower_unipotent(cls, t: int) -> IntegerMatrix2x2:
        return cls(1, 0, t, 1)


def _reduced(r1, r2, N) -> SiegelIndex:
    a = (frac(r1), frac(r2))
    b = (frac(-r1), frac(-r2))
    r1, r2 = min(a, b)
    if r1 == 0 and r2 == 0:
        raise ValueError("index reduces into Z^2")
    return SiegelIndex(r1, r2, N)


def canonical_index(idx: SiegelIndex) -> SiegelIndex:
    """Representative of +-(r1, r2) mod Z^2 with both entries in [0, 1), lexicographically least."""
    return _reduced(idx.r1, idx.r2, idx.N)


def transform_index(idx: SiegelIndex, alpha: IntegerMatrix2x2) -> SiegelIndex:
    """Canonical form of the row vector (r1, r2) * alpha."""
    r1 = idx.r1 * alpha.a + idx.r2 * alpha.c
    r2 = idx.r1 * alpha.b + idx.r2 * alpha.d
    return _reduced(r1, r2, idx.N)


def canonical_indices(N: int) -> list:
    """All distinct canonical indices at level N."""
    seen = set()
    for i in range(N):
        for j in range(N):
            if i or j:
                seen.add(canonical_index(SiegelIndex(Fraction(i, N), Fraction(j, N), N)))
    return sorted(seen, key=lambda s: (s.r1, s.r2))


def siegel_leading_exponent(idx: SiegelIndex) -> Fraction:
    """(1/2) B2(<r1>), the predicted q-order of g_(r1, r2)."""
    return bernoulli2(frac(idx.r1)) / 2


def _root_level(r1: Fraction, r2: Fraction) -> int:
    # factors exp(pi i r2 (r1 - 1)) and exp(2 pi i r2)
    return lcm((r2 * (r1 - 1) / 2).denominator, r2.denominator)


def siegel_expansion(idx: SiegelIndex, truncation=DEFAULT_TRUNCATION, level: int = None) -> QSeries:
    """q-expansion of g_(r1, r2) from its product formula, with r1 in [0, 1).

    The series is known for exponents below (1/2)B2(r1) + truncation. The
    coefficient field is the smallest cyclotomic field holding the root-of-unity
    factors unless ``level`` (a multiple of it, e.g. 2N^2) is given.
    """
    r1, r2, N = idx.r1, idx.r2, idx.N
    if not 0 <= r1 < 1:
        raise DomainError(f"product expansion needs 0 <= r1 < 1, got r1 = {r1}")
    truncation = Fraction(truncation)
    if truncation <= 0:
        raise DomainError("truncation must be positive")
    M = _root_level(r1, r2)
    if level is not None:
        if level % M:
            raise ValueError(f"coefficient level {level} is not a multiple of {M}")
        M = level
    D = r1.denominator
    n_terms = int(truncation * D) + (0 if (truncation * D).denominator == 1 else 1)

    w = int(r2 * M)  # exp(2 pi i r2) = zeta_M^w
    zero = CyclotomicElement.zero(M)
    coeffs = [CyclotomicElement.one(M)] + [zero] * (n_terms - 1)

    def times_binomial(shift, root_exp):
        # multiply by (1 - zeta_M^root_exp q^(shift/D)), shift > 0
        for k in range(n_terms - 1, shift - 1, -1):
            src = coeffs[k - shift]
            if not src.is_zero():
                coeffs[k] = coeffs[k] - src.mul_zeta(root_exp)

    first_shift = int(r1 * D)
    if first_shift == 0:
        factor = CyclotomicElement.one(M) - CyclotomicElement.zeta_power(M, w)
        coeffs = [c * factor for c in coeffs]
    else:
        times_binomial(first_shift, w)
    n = 1
    while (n - r1) * D < n_terms:
        if (n + r1) * D < n_terms:
            times_binomial(int((n + r1) * D), w)
        times_binomial(int((n - r1) * D), -w)
        n += 1

    lead = siegel_leading_exponent(idx)
    prefactor = -CyclotomicElement.zeta_power(M, int(r2 * (r1 - 1) / 2 * M))
    terms = {lead + Fraction(k, D): c * prefactor for k, c in enumerate(coeffs)}
    return QSeries(M, terms, lead + truncation)


def q_order(s: QSeries) -> Fraction:
    return s.q_order()


def _eta24_coeffs(n_terms: int, step: int = 1) -> list:
    """Integer coefficients of prod_{n>=1} (1 - q^(step*n))^24 below q^n_terms."""
    poly = [1] + [0] * (n_terms - 1)
    for _ in range(24):
        for m in range(step, n_terms, step):
            for k in range(n_terms - 1, m - 1, -1):
                poly[k] -= poly[k - m]
    return poly


def delta_ratio_expansion(N: int, truncation=DEFAULT_TRUNCATION) -> QSeries:
    """Delta(tau)/Delta(N tau) = q^(1-N) prod (1-q^n)^24 / (1-q^(Nn))^24, integer coefficients.

    Known for exponents below 1 - N + truncation.
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    T = int(truncation)
    if T < 1 or T != truncation:
        raise DomainError(f"truncation must be a positive integer, got {truncation}")
    num = _eta24_coeffs(T)
    den = _eta24_coeffs(T, N)
    # den has constant term 1: divide exactly
    quot = [0] * T
    for k in range(T):
        acc = num[k]
        for j in range(1, k + 1):
            if den[j]:
                acc -= den[j] * quot[k - j]
        quot[k] = acc
    return QSeries.from_integer_list(quot, shift=1 - N)


@dataclass
class ProductCheck:
    N: int
    truncation: int
    mismatch: object  # first differing exponent, or None
    compared_up_to: Fraction
    leading_exponent: Fraction

    @property
    def holds(self) -> bool:
        return self.mismatch is None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "truncation": self.truncation,
            "holds": self.holds,
            "first_mismatch": None if self.mismatch is None else str(self.mismatch),
            "compared_below": str(self.compared_up_to),
            "leading_exponent": str(self.leading_exponent),
        }


def siegel_product_expansion(N: int, truncation=DEFAULT_TRUNCATION) -> QSeries:
    """N^12 * prod_{k=1}^{N-1} g_(0, k/N)^-12."""
    factors = [siegel_expansion(SiegelIndex(0, Fraction(k, N), N), truncation) for k in range(1, N)]
    level = 1
    for f in factors:
        level = lcm(level, f.level)
    prod = factors[0].lift(level)
    for f in factors[1:]:
        prod = prod * f.lift(level)
    return (prod ** -12) * (N ** 12)


def verify_delta_siegel_product(N: int, truncation=DEFAULT_TRUNCATION) -> ProductCheck:
    """Compare Delta(tau)/Delta(N tau) with N^12 prod_{k=1}^{N-1} g_(0,k/N)^-12 coefficient by coefficient."""
    lhs = delta_ratio_expansion(N, truncation)
    rhs = siegel_product_expansion(N, truncation)
    prec = min(lhs.prec, rhs.prec)
    return ProductCheck(N, int(truncation), lhs.first_mismatch(rhs), prec, rhs.q_order())


def valuation_exponent_sum(N: int, t: int) -> Fraction:
    """6N * sum_{k=1}^{N-1} (B2(<kt/N>) - B2(0)); |x^gamma/x|^N = exp of this."""
    if N < 2 or not 1 <= t <= N - 1:
        raise DomainError(f"need N >= 2 and 1 <= t <= N-1, got N={N}, t={t}")
    b0 = bernoulli2(0)
    return 6 * N * sum(bernoulli2(frac(Fraction(k * t, N))) - b0 for k in range(1, N))


def conjugate_q_order(N: int, t: int) -> Fraction:
    """q-order of the conjugate of Delta(tau)/Delta(N tau) under (1 0 / t 1), from Bernoulli sums."""
    return sum(-12 * siegel_leading_exponent(SiegelIndex(Fraction(k * t, N), Fraction(k, N), N))
               for k in range(1, N))


def _expansion_q_order(N: int, t: int) -> Fraction:
    """The same q-order, read off the product-formula expansions of the conjugate factors."""
    alpha = IntegerMatrix2x2.lower_unipotent(t)
    total = Fraction(0)
    for k in range(1, N):
        idx = transform_index(SiegelIndex(0, Fraction(k, N), N), alpha)
        total += -12 * siegel_expansion(idx, truncation=1).q_order()
    return total


def verify_delta_quotient_complete_normality(N: int, expansions: bool = True) -> NormalityCertificate:
    """Certificate that every positive power of Delta(tau)/Delta(N tau) is completely normal.

    The Galois group is cyclic of order N, generated by (1 0 / 1 1). For each
    subgroup H the valuation exp(-ord_q) must be strictly dominated by the
    identity term: ord_q(x^gamma) > ord_q(x) for all gamma in H, gamma != Id.
    Orders come from Bernoulli sums and, independently, from the product
    expansions of the transformed Siegel functions; the two must agree.
    """
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    base_order = conjugate_q_order(N, 0)
    if base_order != 1 - N:
        raise VerificationError(f"ord_q of the quotient is {base_order}, expected {1 - N}")

    sums, orders, expansion_orders = {}, {}, {}
    for t in range(1, N):
        s = valuation_exponent_sum(N, t)
        if s >= 0:
            raise VerificationError(f"S({N},{t}) = {s} is not negative")
        sums[t] = s
        orders[t] = conjugate_q_order(N, t)
        if orders[t] - base_order != -s / N:
            raise VerificationError(f"valuation gap at t={t} does not match S({N},{t})/N")
        if expansions:
            expansion_orders[t] = _expansion_q_order(N, t)

    G = CyclicShiftGroup(N)
    verdicts = []
    for H in all_subgroups(G):
        others = [t for t in H.elements if t != 0]
        by_sum = all(orders[t] > base_order for t in others)
        checks = {"bernoulli_valuation": by_sum}
        evidence = {"orders": {str(t): str(orders[t]) for t in others}}
        if expansions:
            by_expansion = all(expansion_orders[t] > base_order for t in others)
            if by_expansion != by_sum or any(expansion_orders[t] != orders[t] for t in others):
                raise VerificationError(f"expansion and Bernoulli valuations disagree at N={N}")
            checks["expansion_valuation"] = by_expansion
        verdicts.append(SubgroupVerdict(H.elements, checks, evidence))

    cert = NormalityCertificate(
        N,
        G.mode,
        {
            "description": "Delta(tau)/Delta(N*tau)",
            "q_order": str(base_order),
            "exponent_sums": {str(t): str(s) for t, s in sums.items()},
        },
        "any positive",
        verdicts,
    )
    return cert
