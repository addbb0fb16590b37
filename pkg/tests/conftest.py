import random
from fractions import Fraction

import pytest

from normalbasis.cyclotomic import CyclotomicElement, euler_phi


def random_element(rng, level, span=5, density=1.0, denominators=(1, 2, 3)):
    coords = []
    for _ in range(euler_phi(level)):
        if rng.random() < density:
            coords.append(Fraction(rng.randint(-span, span), rng.choice(denominators)))
        else:
            coords.append(Fraction(0))
    return CyclotomicElement(level, coords)


@pytest.fixture
def rng():
    return random.Random(20111)
