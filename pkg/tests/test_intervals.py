from fractions import Fraction
from math import gcd

import mpmath
import pytest

from normalbasis.cyclotomic import CyclotomicElement, zeta
from normalbasis.intervals import numeric_eval

from conftest import random_element


def reference(x, embedding, dps=120):
    with mpmath.workdps(dps):
        total = mpmath.mpc(0)
        for j, c in enumerate(x.coords):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(
                    mpmath.mpf(2 * embedding * j) / x.level
                )
        return Fraction(mpmath.nstr(total.real, dps - 10)), Fraction(mpmath.nstr(total.imag, dps - 10))


def test_one_is_exact():
    box = numeric_eval(CyclotomicElement.one(9), 32)
    assert box.re_lo == box.re_hi == 1
    assert box.im_lo == box.im_hi == 0


def test_two_cos():
    box = numeric_eval(zeta(5) + zeta(5, 4), 64, embedding=1)
    with mpmath.workdps(60):
        ref = Fraction(mpmath.nstr(2 * mpmath.cos(2 * mpmath.pi / 5), 50))
    assert box.contains(ref)
    assert abs(float(ref) - 0.618034) < 1e-6


@pytest.mark.parametrize("level", [5, 7, 8, 12, 15, 24])
@pytest.mark.parametrize("bits", [16, 32, 64, 200])
def test_enclosure_contains_reference(rng, level, bits):
    for _ in range(3):
        x = random_element(rng, level)
        for s in range(1, level):
            if gcd(s, level) == 1:
                assert numeric_eval(x, bits, s).contains(reference(x, s))


def test_roots_of_unity_enclosed():
    for level in (7, 9, 20):
        for k in range(level):
            box = numeric_eval(zeta(level, k), 48)
            assert box.contains(reference(zeta(level, k), 1))


def test_width_monotone(rng):
    for level in (5, 12, 15):
        x = random_element(rng, level)
        for p in (16, 40, 100):
            assert numeric_eval(x, p + 8).width <= numeric_eval(x, p).width


def test_rejects_nonunit_embedding():
    with pytest.raises(ValueError):
        numeric_eval(zeta(6), 32, embedding=3)
