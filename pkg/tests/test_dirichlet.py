import random

import pytest

from hurwitztrace.cyclotomic import root_of_unity
from hurwitztrace.dirichlet import (
    DirichletCharacter,
    divisors,
    enumerate_characters,
    euler_phi,
    mult_order,
    split_at,
    unit_group,
)


def test_divisors_and_phi():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert euler_phi(1) == 1
    assert euler_phi(8) == 4
    assert euler_phi(60) == 16


def test_unit_group_structure():
    gens, orders = unit_group(8)
    assert orders == (2, 2)
    gens, orders = unit_group(5)
    assert orders == (4,)
    assert unit_group(1) == ((), ())
    # generators actually generate
    for N in (5, 8, 12, 16, 15, 45, 60):
        gens, orders = unit_group(N)
        seen = set()
        import itertools

        for vec in itertools.product(*[range(s) for s in orders]):
            x = 1
            for g, l in zip(gens, vec):
                x = x * pow(g, l, N) % N
            seen.add(x)
        assert len(seen) == euler_phi(N)


def test_enumerate_counts_and_orders():
    assert len(enumerate_characters(1)) == 1
    chars5 = enumerate_characters(5)
    assert sorted(c.order for c in chars5) == [1, 2, 4, 4]
    chars8 = enumerate_characters(8)
    assert len(chars8) == 4
    assert all(c.order <= 2 for c in chars8)


def test_character_values_and_multiplicativity():
    rng = random.Random(5)
    for N in (1, 4, 5, 8, 11, 12, 15, 16, 24, 45, 60):
        for chi in enumerate_characters(N):
            assert chi(1) == 1
            for _ in range(2000 if N > 1 else 5):
                x, y = rng.randrange(1, N + 1), rng.randrange(1, N + 1)
                assert chi(x * y) == chi(x) * chi(y)
            from math import gcd

            if N > 1:
                bad = next(x for x in range(2, N + 2) if gcd(x, N) > 1)
                assert chi(bad) == 0


def test_orthogonality():
    for N in (4, 5, 8, 12, 15, 40):
        for chi in enumerate_characters(N):
            total = sum(chi(x) for x in range(N))
            if chi.is_principal:
                assert total == euler_phi(N)
            else:
                assert total == 0


def test_conductors():
    assert DirichletCharacter.principal(12).conductor == 1
    # the nontrivial character mod 4
    chi4 = next(c for c in enumerate_characters(4) if not c.is_principal)
    assert chi4.conductor == 4
    # the quadratic (Legendre) character mod 5
    legendre = next(c for c in enumerate_characters(5) if c.order == 2)
    assert legendre.conductor == 5
    squares = {x * x % 5 for x in range(1, 5)}
    for x in range(1, 5):
        assert legendre(x) == (1 if x in squares else -1)


def test_parity():
    chi4 = next(c for c in enumerate_characters(4) if not c.is_principal)
    assert not chi4.is_even
    assert DirichletCharacter.principal(1).is_even
    for chi in enumerate_characters(11):
        assert chi.is_even == (chi.order in (1, 5))


def test_mult_order():
    assert mult_order(2, 1) == 1
    assert mult_order(2, 5) == 4
    assert mult_order(3, 7) == 6
    assert mult_order(2, 11) == 10
    with pytest.raises(ValueError):
        mult_order(2, 4)
    for q, l in ((2, 9), (7, 10), (3, 16)):
        assert euler_phi(l) % mult_order(q, l) == 0


def test_split_examples():
    # trivial character: both components trivial
    triv = DirichletCharacter.principal(12)
    s = split_at(triv, 4)
    assert s.c1 == 1 and s.chi_c.modulus == 1 and s.chi_c_prime.modulus == 1
    # N = 12, f_chi = 4, c = 4 -> c1 = 4, chi_c' trivial
    chi = next(c for c in enumerate_characters(12) if c.conductor == 4)
    s = split_at(chi, 4)
    assert s.c1 == 4
    assert s.chi_c.conductor == 4
    assert s.chi_c_prime.conductor == 1
    # N = 15, f_chi = 15, c = 3 -> c1 = 3, conductor of chi_c' = 5
    chi = next(c for c in enumerate_characters(15) if c.conductor == 15)
    s = split_at(chi, 3)
    assert s.c1 == 3
    assert s.chi_c_prime.conductor == 5
    with pytest.raises(ValueError):
        split_at(chi, 2)


def test_split_reconstruction():
    """chi_c(x) * chi_c'(x) == chi(x) on units, across N <= 60."""
    from math import gcd

    for N in range(1, 61):
        for chi in enumerate_characters(N):
            f = chi.conductor
            for c in divisors(N):
                c1 = gcd(c, f)
                if gcd(c1, f // c1) != 1:
                    with pytest.raises(ValueError):
                        split_at(chi, c)
                    continue
                s = split_at(chi, c)
                assert s.chi_c.conductor == s.c1
                assert s.chi_c_prime.conductor == f // s.c1
                for x in range(1, N + 1):
                    if gcd(x, N) == 1:
                        assert s.chi_c(x) * s.chi_c_prime(x) == chi(x), (N, chi, c, x)


def test_character_product():
    chars = enumerate_characters(15)
    a, b = chars[1], chars[2]
    ab = a * b
    for x in range(15):
        assert ab(x) == a(x) * b(x) or ab(x) == 0


def test_exponent_table_consistency():
    chi = enumerate_characters(11)[1]
    for x in range(1, 11):
        k = chi.value_exponent(x)
        assert chi(x) == root_of_unity(chi.order, k)
