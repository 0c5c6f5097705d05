from fractions import Fraction

import pytest

from hurwitztrace.dirichlet import enumerate_characters
from hurwitztrace.oracle import (
    CURVE_11A,
    delta_expansion,
    ec_ap,
    hecke_eigenvalues_prime_power,
)
from hurwitztrace.resolvent import (
    A1_series,
    A1_series_direct,
    A3_series_closed,
    A3_series_direct,
    A4_series,
    A4_series_direct,
    lhs_series,
    moment_A,
    radius_probe,
    verify_rtf,
    verify_two_prime,
)
from hurwitztrace.trace import TraceContext


def test_A1_series_closed_form():
    ctx = TraceContext(12, 1)
    s = A1_series(2, ctx, 5)
    q10 = Fraction(11, 12)
    assert s.coeffs == [0, q10, 0, q10 * 2**10, 0, q10 * 2**20]
    assert s == A1_series_direct(2, ctx, 5)
    ctx2 = TraceContext(2, 1)
    s2 = A1_series(2, ctx2, 5)
    assert s2.coeffs == [0, Fraction(1, 12), 0, Fraction(1, 12), 0, Fraction(1, 12)]


def test_A4_series_closed_form():
    ctx = TraceContext(2, 1)
    s = A4_series(2, ctx, 4)
    assert s.coeffs == [0, 1, 3, 7, 15]  # sigma(2^nu) = 2^(nu+1) - 1
    assert s == A4_series_direct(2, ctx, 4)
    assert A4_series(2, TraceContext(4, 1), 4).coeffs == [0] * 5


def test_A3_series_level1():
    # closed form -1/((1 - q^(k-1) z^2)(1 - z)) + (1/2)/(1 - q^(k-1) z^2)
    ctx = TraceContext(2, 1)
    s = A3_series_closed(2, ctx, 4)
    assert s.coeffs[0] == Fraction(-1, 2)  # A3(1), primed convention at d = 1
    assert s.coeffs[1] == -1  # A3(q): only d = 1
    assert s.coeffs[2] == -2  # A3(4) = -(1 + (1/2) 2)
    assert s == A3_series_direct(2, ctx, 4)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [2, 4, 12])
@pytest.mark.parametrize("N", [1, 11, 15])
def test_A3_closed_vs_direct(q, k, N):
    if N % q == 0:
        pytest.skip("need gcd(q, N) = 1")
    for chi in enumerate_characters(N):
        ctx = TraceContext(k, N, chi)
        assert A3_series_closed(q, ctx, 8) == A3_series_direct(q, ctx, 8), (q, k, N, chi)


def test_lhs_series_oracle_weight12():
    tau = delta_expansion(2**11)
    ctx = TraceContext(12, 1)
    s = lhs_series(2, ctx, 12)
    assert s.coeffs[0] == 0
    for nu in range(12):
        assert s.coeffs[nu + 1] == tau[2**nu], nu
    # spec-level landmarks, recomputed: tau(2) = -24, tau(4) = -1472
    assert s.coeffs[2] == -24
    assert s.coeffs[3] == -1472


def test_lhs_series_weight2_vanishes():
    assert lhs_series(3, TraceContext(2, 1), 8).coeffs == [0] * 9
    assert lhs_series(3, TraceContext(4, 1), 8).coeffs == [0] * 9


def test_lhs_series_level11_oracle():
    ctx = TraceContext(2, 11)
    for q in (2, 3):
        eig = hecke_eigenvalues_prime_power(ec_ap(CURVE_11A, q), q, 2, 9)
        s = lhs_series(q, ctx, 10)
        assert [int(c) for c in s.coeffs[1:]] == eig


def test_lhs_rejects_dividing_prime():
    with pytest.raises(ValueError):
        lhs_series(11, TraceContext(2, 11), 4)


def test_verify_rtf_small_matrix():
    for q in (2, 3):
        for k in (2, 4, 12):
            for N in (1, 11):
                for chi in enumerate_characters(N):
                    if not chi.is_even:
                        continue
                    r = verify_rtf(q, TraceContext(k, N, chi), 6)
                    assert r["first_fail"] is None, (q, k, N, chi)


def test_verify_rtf_rejects_degenerate():
    chi4 = next(c for c in enumerate_characters(4) if not c.is_principal)
    with pytest.raises(ValueError):
        verify_rtf(3, TraceContext(2, 4, chi4), 4)


def test_moment_A_values():
    # k = 2: A_{2,q}(nu) is the full Hurwitz mass
    from hurwitztrace.oracle import hurwitz_mass_rhs

    for q in (2, 3):
        for nu in range(6):
            assert moment_A(2, q, nu) == hurwitz_mass_rhs(q**nu)
    assert moment_A(2, 2, 1) == 4  # prime relation at q = 2
    # k = 12, nu = 0: H(4) U_10(0) + 2 H(3) U_10(1/2) with U values -1, -1
    assert moment_A(12, 2, 0) == Fraction(-7, 6)


def test_moment_A_matches_equidist_moment_U():
    from hurwitztrace.equidist import moment_U

    for k in (2, 4, 12):
        for q in (2, 3):
            for nu in range(7):
                assert moment_A(k, q, nu) == moment_U(q**nu, k - 2), (k, q, nu)


def test_radius_probe():
    rows = radius_probe(2, 4, 16)
    norms = [r["normalized"] for r in rows]
    # bounded, no geometric blow-up or decay: the damped running max is
    # attained strictly before the end, and the values do not vanish
    damped = [v * 2 ** (-0.1 * i) for i, v in enumerate(norms)]
    assert damped.index(max(damped)) < 16
    assert max(norms[8:]) > 1e-3
    with pytest.raises(ValueError):
        radius_probe(2, 2, 4)


def test_two_prime_identity():
    r = verify_two_prime(12, 2, 3, 5, 3)
    assert r["pass"]
    r = verify_two_prime(4, 2, 3, 4, 4)
    assert r["pass"]
    r = verify_two_prime(6, 3, 5, 4, 3)
    assert r["pass"]
