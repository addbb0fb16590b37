"""Truncated formal series in rational powers of q with cyclotomic coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import CyclotomicElement
from .errors import IndeterminateError, LevelMismatchError

__all__ = ["QSeries"]


def _coerce_coeff(level, c):
    if isinstance(c, CyclotomicElement):
        if c.level == level:
            return c
        if level % c.level == 0:
            return c.lift(level)
        raise LevelMismatchError(f"coefficient level {c.level} does not divide {level}")
    return CyclotomicElement.from_rational(level, Fraction(c))


class QSeries:
    """sum c_e q^e over exponents e < prec; coefficients in Q(zeta_level).

    Terms at or beyond ``prec`` are unknown, and arithmetic propagates that
    accordingly. Zero coefficients are never stored.
    """

    __slots__ = ("level", "terms", "prec")

    def __init__(self, level: int, terms, prec):
        self.level = level
        self.prec = Fraction(prec)
        clean = {}
        for e, c in dict(terms).items():
            e = Fraction(e)
            if e >= self.prec:
                continue
            c = _coerce_coeff(level, c)
            if not c.is_zero():
                clean[e] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def constant(cls, level: int, value, prec) -> QSeries:
        return cls(level, {0: value}, prec)

    @classmethod
    def from_integer_list(cls, coeffs, shift=0, prec=None) -> QSeries:
        """Level-1 series sum coeffs[k] q^(shift + k), known up to shift + len(coeffs)."""
        shift = Fraction(shift)
        if prec is None:
            prec = shift + len(coeffs)
        return cls(1, {shift + k: c for k, c in enumerate(coeffs) if c}, prec)

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def q_order(self) -> Fraction:
        if not self.terms:
            raise IndeterminateError(f"series vanishes up to q^{self.prec}")
        return next(iter(self.terms))

    valuation = q_order

    def leading_coefficient(self) -> CyclotomicElement:
        return self.terms[self.q_order()]

    def coefficient(self, e) -> CyclotomicElement:
        e = Fraction(e)
        if e >= self.prec:
            raise IndeterminateError(f"exponent {e} is beyond the truncation {self.prec}")
        return self.terms.get(e, CyclotomicElement.zero(self.level))

    def _val_or_prec(self):
        return next(iter(self.terms)) if self.terms else self.prec

    def lift(self, level: int) -> QSeries:
        if level == self.level:
            return self
        return QSeries(level, {e: c.lift(level) for e, c in self.terms.items()}, self.prec)

    def truncate(self, prec) -> QSeries:
        return QSeries(self.level, self.terms, min(self.prec, Fraction(prec)))

    def first_mismatch(self, other: QSeries):
        """Smallest exponent below the common precision where the series differ, else None."""
        level = lcm(self.level, other.level)
        a, b = self.lift(level), other.lift(level)
        prec = min(a.prec, b.prec)
        for e in sorted(set(a.terms) | set(b.terms)):
            if e >= prec:
                break
            if a.terms.get(e) != b.terms.get(e):
                return e
        return None

    def to_dict(self) -> list:
        return [
            {"exponent": str(e), "level": c.level, "coords": [str(v) for v in c.coords]}
            for e, c in self.terms.items()
        ]

    def __repr__(self):
        shown = ", ".join(f"q^{e}: {c!r}" for e, c in list(self.terms.items())[:4])
        return f"QSeries(level={self.level}, [{shown}{', ...' if len(self.terms) > 4 else ''}] + O(q^{self.prec}))"

    # -- arithmetic --------------------------------------------------------------

    def _common(self, other):
        if isinstance(other, QSeries):
            level = lcm(self.level, other.level)
            return self.lift(level), other.lift(level)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.constant(self.level, other, self.prec)
        a, b = self._common(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return QSeries(a.level, terms, min(a.prec, b.prec))

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.level, {e: -c for e, c in self.terms.items()}, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> QSeries:
        level = self.level
        if isinstance(c, CyclotomicElement):
            level = lcm(level, c.level)
            c = c.lift(level)
        base = self.lift(level)
        return QSeries(level, {e: v * c for e, v in base.terms.items()}, base.prec)

    def shift(self, e) -> QSeries:
        """Multiply by q^e."""
        e = Fraction(e)
        return QSeries(self.level, {k + e: c for k, c in self.terms.items()}, self.prec + e)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        a, b = self._common(other)
        prec = min(a._val_or_prec() + b.prec, b._val_or_prec() + a.prec)
        out = {}
        bt = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bt:
                e = ea + eb
                if e >= prec:
                    break
                p = ca * cb
                out[e] = out[e] + p if e in out else p
        return QSeries(a.level, out, prec)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> QSeries:
        v = self.q_order()
        lead_inv = self.leading_coefficient().inverse()
        rel = self.prec - v
        denom = 1
        for e in self.terms:
            denom = lcm(denom, (e - v).denominator)
        n = int(rel * denom) + (0 if (rel * denom).denominator == 1 else 1)
        # a_k: normalized coefficients of q^(v + k/denom) / leading
        a = {}
        for e, c in self.terms.items():
            k = (e - v) * denom
            if k < n:
                a[int(k)] = c * lead_inv
        nonzero = sorted(k for k in a if k > 0)
        zero = CyclotomicElement.zero(self.level)
        b = [CyclotomicElement.one(self.level)]
        for k in range(1, n):
            acc = zero
            for j in nonzero:
                if j > k:
                    break
                acc = acc + a[j] * b[k - j]
            b.append(-acc)
        terms = {-v + Fraction(k, denom): c * lead_inv for k, c in enumerate(b)}
        return QSeries(self.level, terms, -v + rel)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        return self.scale(1 / other if not isinstance(other, CyclotomicElement) else other.inverse())

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        if exponent == 0:
            return QSeries.constant(self.level, 1, self.prec - self._val_or_prec())
        result = None
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result
