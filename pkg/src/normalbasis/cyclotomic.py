"""Exact arithmetic in cyclotomic fields Q(zeta_l).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(l)-1) as an
integer numerator vector over a single positive common denominator, always
reduced modulo the l-th cyclotomic polynomial and kept in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .errors import DomainError, LevelMismatchError

__all__ = [
    "CyclotomicElement",
    "cyclotomic_polynomial",
    "euler_phi",
    "galois_apply",
    "lift_level",
    "zeta",
    "cos_plus_one_element",
    "cos_half_element",
    "sqrt_minus_t",
    "is_prime",
]


def _factorize(n):
    factors = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs a positive integer, got {n}")
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factorize(n) == {n: 1}


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first); den monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Built recursively as (X^n - 1) divided by every Phi_d with d a proper
    divisor of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(vec, level):
    """Reduce an integer coefficient list modulo Phi_level, in place; return length-phi list."""
    phi_poly = cyclotomic_polynomial(level)
    deg = len(phi_poly) - 1
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                pj = phi_poly[j]
                if pj:
                    vec[base + j] -= c * pj
            vec[i] = 0
    if len(vec) < deg:
        vec.extend([0] * (deg - len(vec)))
    return vec[:deg]


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class CyclotomicElement:
    """An element of Q(zeta_level), immutable."""

    __slots__ = ("level", "_num", "_den", "_hash")

    def __init__(self, level: int, coords=None):
        if level < 1:
            raise ValueError(f"level must be positive, got {level}")
        deg = euler_phi(level)
        if coords is None:
            coords = [0] * deg
        coords = [_as_fraction(c) for c in coords]
        if len(coords) != deg:
            raise ValueError(f"level {level} needs {deg} coordinates, got {len(coords)}")
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coords]
        self._set(level, nums, den)

    def _set(self, level, nums, den):
        g = den
        for v in nums:
            if v:
                g = gcd(g, v)
                if g == 1:
                    break
        if den < 0:
            g = -g
        if g != 1:
            nums = [v // g for v in nums]
            den //= g
        self.level = level
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, level, nums, den=1):
        obj = cls.__new__(cls)
        obj._set(level, nums, den)
        return obj

    @classmethod
    def _from_long(cls, level, vec, den=1):
        return cls._raw(level, _reduce(list(vec), level), den)

    @classmethod
    def from_rational(cls, level: int, value) -> CyclotomicElement:
        value = _as_fraction(value)
        nums = [0] * euler_phi(level)
        nums[0] = value.numerator
        return cls._raw(level, nums, value.denominator)

    @classmethod
    def zero(cls, level: int) -> CyclotomicElement:
        return cls.from_rational(level, 0)

    @classmethod
    def one(cls, level: int) -> CyclotomicElement:
        return cls.from_rational(level, 1)

    @classmethod
    def zeta_power(cls, level: int, k: int = 1) -> CyclotomicElement:
        vec = [0] * level
        vec[k % level] = 1
        return cls._from_long(level, vec)

    @classmethod
    def from_dict(cls, data) -> CyclotomicElement:
        return cls(int(data["level"]), [Fraction(c) for c in data["coords"]])

    # -- inspection --------------------------------------------------------

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(v, self._den) for v in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        """True iff fixed by complex conjugation zeta -> zeta^-1."""
        return self.galois(-1) == self

    def to_dict(self) -> dict:
        return {"level": self.level, "coords": [str(c) for c in self.coords]}

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"<Q(zeta_{self.level}): {body}>"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.level != self.level:
                raise LevelMismatchError(f"levels {self.level} and {other.level} differ")
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicElement.from_rational(self.level, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = self._den * other._den // gcd(self._den, other._den)
        a, b = den // self._den, den // other._den
        return CyclotomicElement._raw(
            self.level, [x * a + y * b for x, y in zip(self._num, other._num)], den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.level, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicElement):
            f = _as_fraction(other)
            return CyclotomicElement._raw(
                self.level, [x * f.numerator for x in self._num], self._den * f.denominator
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, other._num
        deg = len(a)
        if deg == 1:
            return CyclotomicElement._raw(self.level, [a[0] * b[0]], self._den * other._den)
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicElement._raw(
            self.level, _reduce(prod, self.level), self._den * other._den
        )

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> CyclotomicElement:
        """Multiply by zeta^k (a shift in the power basis before reduction)."""
        k %= self.level
        if k == 0:
            return self
        vec = [0] * (len(self._num) + k)
        vec[k:] = self._num
        return CyclotomicElement._raw(self.level, _reduce(vec, self.level), self._den)

    def norm(self) -> Fraction:
        """Absolute norm to Q: product of all conjugates."""
        prod = self
        for t in range(2, self.level):
            if gcd(t, self.level) == 1:
                prod = prod * self.galois(t)
        return prod.rational_value()

    def inverse(self) -> CyclotomicElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicElement.from_rational(self.level, 1 / self.rational_value())
        # x^-1 = (product of the other conjugates) / N(x)
        cofactor = CyclotomicElement.one(self.level)
        for t in range(2, self.level):
            if gcd(t, self.level) == 1:
                cofactor = cofactor * self.galois(t)
        norm = (cofactor * self).rational_value()
        return cofactor * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicElement):
            f = _as_fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / f)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = CyclotomicElement.one(self.level)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicElement):
            return (
                self.level == other.level
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self._num, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- field maps ----------------------------------------------------------

    def galois(self, t: int) -> CyclotomicElement:
        """Image under the automorphism zeta -> zeta^t."""
        level = self.level
        if gcd(t, level) != 1:
            raise ValueError(f"{t} is not a unit modulo {level}")
        t %= level
        if t == 1 or level <= 2:
            return self
        vec = [0] * level
        for j, c in enumerate(self._num):
            if c:
                vec[(j * t) % level] += c
        return CyclotomicElement._raw(level, _reduce(vec, level), self._den)

    def lift(self, level: int) -> CyclotomicElement:
        """Image under Q(zeta_n) -> Q(zeta_level), zeta_n -> zeta_level^(level/n)."""
        if level % self.level:
            raise ValueError(f"level {self.level} does not divide {level}")
        if level == self.level:
            return self
        step = level // self.level
        vec = [0] * (step * len(self._num))
        for j, c in enumerate(self._num):
            vec[j * step] = c
        return CyclotomicElement._raw(level, _reduce(vec, level), self._den)


def zeta(level: int, k: int = 1) -> CyclotomicElement:
    return CyclotomicElement.zeta_power(level, k)


def galois_apply(x: CyclotomicElement, t: int) -> CyclotomicElement:
    return x.galois(t)


def lift_level(x: CyclotomicElement, level: int) -> CyclotomicElement:
    return x.lift(level)


DEGENERATE_LEVELS = frozenset({1, 2, 3, 4, 6})


def cos_plus_one_element(level: int) -> CyclotomicElement:
    """(zeta + zeta^-1)/2 + 1, i.e. cos(2 pi/level) + 1."""
    if level < 1 or level in DEGENERATE_LEVELS:
        raise DomainError(
            f"level {level} gives a real subfield of degree 1; need level not in {{1,2,3,4,6}}"
        )
    return (zeta(level, 1) + zeta(level, -1)) / 2 + 1


def cos_half_element(level: int) -> CyclotomicElement:
    """-(zeta^k + zeta^-k)/2 with k = (level-1)/2, i.e. cos(pi/level)."""
    if level < 5 or level % 2 == 0:
        raise DomainError(f"cos(pi/l) construction needs odd l >= 5, got {level}")
    k = (level - 1) // 2
    return -(zeta(level, k) + zeta(level, -k)) / 2


def sqrt_minus_t(t: int) -> CyclotomicElement:
    """A square root of -t in Q(zeta_t) for t = 4 or a prime t = 3 mod 4.

    For odd primes this is the quadratic Gauss sum; no sign convention is
    assumed beyond the square being -t.
    """
    if t == 4:
        return zeta(4, 1) * 2
    if t > 2 and t % 4 == 3 and is_prime(t):
        vec = [0] * t
        for a in range(1, t):
            vec[a] = 1 if pow(a, (t - 1) // 2, t) == 1 else -1
        return CyclotomicElement._from_long(t, vec)
    raise DomainError(f"sqrt(-t) construction needs t = 4 or a prime t = 3 (mod 4), got {t}")
