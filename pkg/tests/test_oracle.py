import pytest

from hurwitztrace.oracle import (
    CURVE_11A,
    CURVE_15A,
    delta_expansion,
    dim_Sk_level1,
    ec_ap,
    hecke_eigenvalues_prime_power,
    hurwitz_mass_rhs,
    sigma_and_min_sum,
)


def test_tau_values():
    tau = delta_expansion(12)
    assert tau[1:7] == [1, -24, 252, -1472, 4830, -6048]
    # Hecke recurrence at 4: both sides computed independently
    assert tau[4] == tau[2] ** 2 - 2**11
    assert tau[9] == tau[3] ** 2 - 3**11


def test_tau_multiplicativity():
    tau = delta_expansion(100)
    from math import gcd

    for m in range(2, 10):
        for n in range(2, 10):
            if gcd(m, n) == 1 and m * n <= 100:
                assert tau[m * n] == tau[m] * tau[n]


def test_dims():
    assert dim_Sk_level1(12) == 1
    assert dim_Sk_level1(2) == 0
    assert dim_Sk_level1(24) == 2
    assert dim_Sk_level1(26) == 1
    assert dim_Sk_level1(4) == 0
    assert dim_Sk_level1(11) == 0
    assert dim_Sk_level1(0) == 0


def test_ec_ap_11a():
    assert ec_ap(CURVE_11A, 2) == -2
    assert ec_ap(CURVE_11A, 3) == -1
    assert ec_ap(CURVE_11A, 5) == 1
    assert ec_ap(CURVE_11A, 7) == -2
    with pytest.raises(ValueError):
        ec_ap(CURVE_11A, 11)


def test_hasse_bound():
    for curve, bad in ((CURVE_11A, 11), (CURVE_15A, 15)):
        for p in (2, 3, 5, 7, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            if bad % p == 0:
                continue
            ap = ec_ap(curve, p)
            assert ap * ap <= 4 * p


def test_eigen_recurrence():
    vals = hecke_eigenvalues_prime_power(-2, 2, 2, 4)
    assert vals == [1, -2, 2, 0, -4]


def test_sigma_and_min_sum():
    assert sigma_and_min_sum(6) == (12, 6)
    assert sigma_and_min_sum(1) == (1, 1)
    for q in (2, 3, 5, 7, 11, 13):
        assert sigma_and_min_sum(q) == (q + 1, 2)


def test_mass_rhs_square_adjustment():
    from fractions import Fraction

    assert hurwitz_mass_rhs(1) == Fraction(7, 6)
    assert hurwitz_mass_rhs(2) == 4
    assert hurwitz_mass_rhs(4) == Fraction(61, 6)
