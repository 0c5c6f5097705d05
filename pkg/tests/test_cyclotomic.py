import random
from fractions import Fraction

import pytest

from hurwitztrace.cyclotomic import (
    CyclotomicRational,
    cyclotomic_polynomial,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is euler phi
    assert len(cyclotomic_polynomial(105)) - 1 == 48


def test_roots_of_unity_rational_cases():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(6, 3) == -1
    assert root_of_unity(5, 0) == 1
    assert isinstance(root_of_unity(4, 2), Fraction)


def test_power_relations():
    z5 = root_of_unity(5)
    assert z5**5 == 1
    assert z5**6 == z5
    total = sum(root_of_unity(5, k) for k in range(5))
    assert total == 0
    z12 = root_of_unity(12)
    assert z12**6 == -1
    assert z12**4 == root_of_unity(3)


def test_cross_order_equality():
    assert root_of_unity(6) ** 2 == root_of_unity(3)
    assert root_of_unity(8, 2) == root_of_unity(4)
    assert root_of_unity(3) + root_of_unity(3, 2) == -1


def test_as_fraction():
    z = root_of_unity(5)
    s = z + z**2 + z**3 + z**4
    assert isinstance(s, CyclotomicRational)
    assert s.as_fraction() == Fraction(-1)
    assert z.as_fraction() is None


def test_complex_embedding():
    z = root_of_unity(7)
    w = complex(z)
    assert abs(w**7 - 1) < 1e-12
    assert abs(abs(z) - 1) < 1e-12


def test_mixed_arithmetic_with_fractions():
    z = root_of_unity(3)
    v = Fraction(1, 2) * z + 1
    assert v - 1 == z / 2
    assert 2 * v == 2 + z
    assert (1 - z) * (1 - z**2) == 3  # norm of 1 - zeta_3


def test_ring_laws_fuzz():
    rng = random.Random(9)

    def rand_value():
        e = rng.choice([1, 3, 4, 5, 6])
        deg = len(cyclotomic_polynomial(e)) - 1
        return CyclotomicRational(
            e, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(deg)]
        )

    for _ in range(60):
        a, b, c = rand_value(), rand_value(), rand_value()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == 0


def test_invalid_order():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)
    with pytest.raises(ValueError):
        root_of_unity(0)
