from fractions import Fraction
from math import comb

import pytest

from normalbasis.cyclotomic import CyclotomicElement, zeta
from normalbasis.errors import IndeterminateError, LevelMismatchError
from normalbasis.qseries import QSeries

from conftest import random_element


def random_series(rng, level, start, step, count, prec):
    terms = {start + k * step: random_element(rng, level, span=3) for k in range(count)}
    return QSeries(level, terms, prec)


def geometric(prec):
    return QSeries.from_integer_list([1] * prec)


def test_construction_drops_zeros_and_tail():
    s = QSeries(1, {0: 1, 1: 0, 2: 3, 5: 7}, 4)
    assert list(s.terms) == [0, 2]
    assert s.q_order() == 0
    assert s.coefficient(1) == 0
    with pytest.raises(IndeterminateError):
        s.coefficient(4)


def test_zero_series_has_no_order():
    with pytest.raises(IndeterminateError):
        QSeries(1, {}, 5).q_order()


def test_geometric_inverse():
    inv = geometric(10).inverse()
    assert inv.terms == {Fraction(0): CyclotomicElement.one(1), Fraction(1): -CyclotomicElement.one(1)}
    assert inv.prec == 10


def test_fractional_exponents():
    s = QSeries(1, {Fraction(1, 3): 2, Fraction(4, 3): 1}, Fraction(7, 3))
    t = s * s
    assert t.q_order() == Fraction(2, 3)
    assert t.coefficient(Fraction(2, 3)) == 4
    assert t.coefficient(Fraction(5, 3)) == 4
    assert t.prec == Fraction(1, 3) + Fraction(7, 3)
    u = s.inverse()
    assert u.q_order() == Fraction(-1, 3)
    assert (s * u).first_mismatch(QSeries.constant(1, 1, 100)) is None


def test_mixed_levels_lift():
    a = QSeries(3, {0: zeta(3)}, 5)
    b = QSeries(4, {1: zeta(4)}, 5)
    c = a * b
    assert c.level == 12
    assert c.coefficient(1) == zeta(12, 7)
    with pytest.raises(LevelMismatchError):
        QSeries(4, {0: zeta(3)}, 2)


@pytest.mark.parametrize("level", [1, 4, 5, 12])
def test_order_is_additive(rng, level):
    for _ in range(4):
        a = random_series(rng, level, Fraction(rng.randint(-6, 6), 4), Fraction(1, 4), 6, 3)
        b = random_series(rng, level, Fraction(rng.randint(-6, 6), 3), Fraction(1, 3), 6, 4)
        if a.is_zero() or b.is_zero():
            continue
        assert (a * b).q_order() == a.q_order() + b.q_order()
        assert a.inverse().q_order() == -a.q_order()


@pytest.mark.parametrize("level", [1, 5, 8])
def test_divide_then_multiply_roundtrip(rng, level):
    for _ in range(4):
        s = random_series(rng, level, Fraction(-1, 2), Fraction(1, 2), 10, 5)
        u = random_series(rng, level, Fraction(1, 6), Fraction(1, 6), 12, 2)
        if u.is_zero() or s.is_zero():
            continue
        back = (s * u) * u.inverse()
        assert back.first_mismatch(s) is None
        assert back.prec <= s.prec


def test_pow_matches_repeated_product(rng):
    s = random_series(rng, 7, Fraction(1, 2), Fraction(1, 2), 8, 5)
    cube = s * s * s
    assert (s ** 3).first_mismatch(cube) is None
    assert (s ** -2).first_mismatch((s * s).inverse()) is None
    assert (s ** 5 * s ** -5).first_mismatch(QSeries.constant(7, 1, 10)) is None
    assert (s ** 0).first_mismatch(QSeries.constant(7, 1, 10)) is None


def test_binomial_coefficients():
    # (1 + q)^7 against integer binomials
    s = QSeries.from_integer_list([1, 1] + [0] * 18)
    p = s ** 7
    for k in range(20):
        assert p.coefficient(k) == comb(7, k)


def test_shift_scale_truncate():
    s = QSeries.from_integer_list([1, 2, 3], shift=Fraction(1, 2))
    t = s.shift(Fraction(-1, 2))
    assert t.q_order() == 0 and t.prec == 3
    assert s.scale(zeta(4)).coefficient(Fraction(3, 2)) == zeta(4) * 2
    assert s.truncate(Fraction(3, 2)).terms == {Fraction(1, 2): CyclotomicElement.one(1)}


def test_first_mismatch():
    a = QSeries.from_integer_list([1, 2, 3, 4])
    b = QSeries.from_integer_list([1, 2, 5, 4])
    assert a.first_mismatch(b) == 2
    assert a.first_mismatch(a.truncate(2)) is None


def test_to_dict():
    s = QSeries(4, {Fraction(1, 2): zeta(4)}, 3)
    assert s.to_dict() == [{"exponent": "1/2", "level": 4, "coords": ["0", "1"]}]
