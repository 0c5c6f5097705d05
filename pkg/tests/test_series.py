import random
from fractions import Fraction

import pytest

from hurwitztrace.cyclotomic import root_of_unity
from hurwitztrace.series import TruncatedSeries


def test_geometric_expansion():
    g = TruncatedSeries.geometric(Fraction(1), 1, 3)
    assert g.coeffs == [1, 1, 1, 1]
    a = Fraction(5)
    g = TruncatedSeries.geometric(a, 2, 5)
    assert g.coeffs == [1, 0, 5, 0, 25, 0]


def test_telescoping():
    # (1 - z) * sum z^n == 1 after truncation-aware multiply
    one_minus = TruncatedSeries(3, [1, -1])
    geo = TruncatedSeries.geometric(Fraction(1), 1, 3)
    assert (one_minus * geo).coeffs == [1, 0, 0, 0]


def test_shift_and_scale():
    s = TruncatedSeries(4, [1, 2, 3])
    assert s.shift(2).coeffs == [0, 0, 1, 2, 3]
    assert (s * Fraction(1, 2)).coeffs == [Fraction(1, 2), 1, Fraction(3, 2), 0, 0]


def test_cyclotomic_coefficients():
    z = root_of_unity(5)
    g = TruncatedSeries.geometric(z, 1, 6)
    assert g.coeffs[5] == 1  # zeta_5^5
    assert g.coeffs[3] == z**3


def test_order_mismatch():
    with pytest.raises(ValueError):
        TruncatedSeries(3) + TruncatedSeries(4)


def test_ring_laws_fuzz():
    rng = random.Random(17)

    def rand_series():
        return TruncatedSeries(
            6, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(7)]
        )

    for _ in range(50):
        a, b, c = rand_series(), rand_series(), rand_series()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert (a - a).coeffs == [0] * 7
