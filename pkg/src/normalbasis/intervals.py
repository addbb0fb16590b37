"""Rigorous complex enclosures of cyclotomic elements under an embedding.

The cosines and sines of 2*pi*s*j/l come from mpmath's interval context
(outward rounded). Everything after that is exact rational arithmetic, and the
final bounds are rounded outward to the dyadic grid 2**-precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .cyclotomic import CyclotomicElement

__all__ = ["ComplexInterval", "numeric_eval"]

_GUARD_BITS = 16


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    value = Fraction(int(man)) * (Fraction(2) ** exp)
    return -value if sign else value


def _interval_bounds(iv) -> tuple:
    lo, hi = iv._mpi_
    return _mpf_tuple_to_fraction(lo), _mpf_tuple_to_fraction(hi)


@lru_cache(maxsize=256)
def _root_enclosures(level: int, embedding: int, bits: int) -> tuple:
    """Rational enclosures of cos and sin of 2*pi*embedding*j/level for j < phi(level)."""
    ctx = type(mpmath.iv)()
    ctx.prec = bits
    deg = len(CyclotomicElement.one(level).coords)
    out = []
    for j in range(deg):
        k = (embedding * j) % level
        if k == 0:
            out.append(((Fraction(1), Fraction(1)), (Fraction(0), Fraction(0))))
            continue
        angle = 2 * ctx.pi * k / level
        out.append((_interval_bounds(ctx.cos(angle)), _interval_bounds(ctx.sin(angle))))
    return tuple(out)


def _floor_dyadic(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction((x.numerator * scale) // x.denominator, scale)


def _ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def _scaled(c: Fraction, lo: Fraction, hi: Fraction):
    a, b = c * lo, c * hi
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class ComplexInterval:
    """Axis-aligned box [re_lo, re_hi] x [im_lo, im_hi] with dyadic bounds."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction
    precision: int

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    def contains(self, value) -> bool:
        """Membership test for an exact value (int, Fraction, or a (re, im) pair)."""
        if isinstance(value, tuple):
            re, im = (Fraction(v) for v in value)
        else:
            re, im = Fraction(value), Fraction(0)
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def imag_contains_zero(self) -> bool:
        return self.im_lo <= 0 <= self.im_hi

    def real_abs_bounds(self) -> tuple:
        """Bounds on |re| over the box."""
        lo, hi = self.re_lo, self.re_hi
        if lo >= 0:
            return lo, hi
        if hi <= 0:
            return -hi, -lo
        return Fraction(0), max(-lo, hi)

    def abs_squared_bounds(self) -> tuple:
        def sq(lo, hi):
            if lo >= 0:
                return lo * lo, hi * hi
            if hi <= 0:
                return hi * hi, lo * lo
            return Fraction(0), max(lo * lo, hi * hi)

        r = sq(self.re_lo, self.re_hi)
        i = sq(self.im_lo, self.im_hi)
        return r[0] + i[0], r[1] + i[1]


def numeric_eval(x: CyclotomicElement, precision: int = 64, embedding: int = 1) -> ComplexInterval:
    """Enclose the image of ``x`` under zeta -> exp(2*pi*i*embedding/level)."""
    level = x.level
    if gcd(embedding, level) != 1:
        raise ValueError(f"embedding {embedding} is not a unit modulo {level}")
    roots = _root_enclosures(level, embedding % level, precision + _GUARD_BITS)
    re_lo = re_hi = im_lo = im_hi = Fraction(0)
    for c, ((clo, chi), (slo, shi)) in zip(x.coords, roots):
        if not c:
            continue
        a, b = _scaled(c, clo, chi)
        re_lo += a
        re_hi += b
        a, b = _scaled(c, slo, shi)
        im_lo += a
        im_hi += b
    return ComplexInterval(
        _floor_dyadic(re_lo, precision),
        _ceil_dyadic(re_hi, precision),
        _floor_dyadic(im_lo, precision),
        _ceil_dyadic(im_hi, precision),
        precision,
    )
