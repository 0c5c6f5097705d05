"""Deliberately naive reference computations used by tests and selftest.

Everything here is independent of the trace-formula pipeline: q-expansions by
truncated polynomial multiplication, dimensions by the classical level-1
formula, a_p by exhaustive point counts over F_p.
"""

from __future__ import annotations

from math import isqrt


def delta_expansion(M: int) -> list[int]:
    """tau(1..M) from q * prod (1-q^n)^24; index n holds tau(n), index 0 is 0.

    Uses Jacobi's eta^3 = sum (-1)^j (2j+1) q^(j(j+1)/2) and three truncated
    squarings for the 8th power.
    """
    if M < 1:
        raise ValueError("M must be positive")
    L = M
    eta3 = [0] * L
    j = 0
    while j * (j + 1) // 2 < L:
        eta3[j * (j + 1) // 2] = (-1) ** j * (2 * j + 1)
        j += 1

    def truncated_square(p: list[int]) -> list[int]:
        out = [0] * L
        for i, pi in enumerate(p):
            if pi:
                for k, pk in enumerate(p[: L - i]):
                    if pk:
                        out[i + k] += pi * pk
        return out

    e6 = truncated_square(eta3)
    e12 = truncated_square(e6)
    e24 = truncated_square(e12)
    return [0] + e24[:M]


def dim_Sk_level1(k: int) -> int:
    """dim S_k(SL2(Z)) by the classical weight formula."""
    if k % 2 or k < 4:
        return 0
    d = k // 12
    if k % 12 == 2:
        d -= 1
    return max(d, 0)


# minimal Weierstrass coefficients (a1, a2, a3, a4, a6)
CURVE_11A = (0, -1, 1, -10, -20)
CURVE_15A = (1, 1, 1, -10, -10)


def _curve_discriminant(curve: tuple[int, int, int, int, int]) -> int:
    a1, a2, a3, a4, a6 = curve
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def ec_ap(curve: tuple[int, int, int, int, int], p: int) -> int:
    """a_p = p + 1 - #E(F_p) by exhaustive point count (good reduction only)."""
    if p < 2:
        raise ValueError("p must be a prime")
    if _curve_discriminant(curve) % p == 0:
        raise ValueError(f"bad reduction at {p}")
    a1, a2, a3, a4, a6 = (c % p for c in curve)
    count = 1  # point at infinity
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        for y in range(p):
            if (y * y + lin * y - rhs) % p == 0:
                count += 1
    return p + 1 - count


def hecke_eigenvalues_prime_power(ap: int, p: int, k: int, nu_max: int) -> list[int]:
    """a(p^nu) for nu = 0..nu_max via a(p^(v+1)) = a_p a(p^v) - p^(k-1) a(p^(v-1))."""
    vals = [1, ap]
    for _ in range(nu_max - 1):
        vals.append(ap * vals[-1] - p ** (k - 1) * vals[-2])
    return vals[: nu_max + 1]


def sigma_and_min_sum(m: int) -> tuple[int, int]:
    """(sigma(m), sum over d|m of min(d, m/d)) by divisor enumeration."""
    if m < 1:
        raise ValueError("m must be positive")
    sigma = 0
    min_sum = 0
    for d in range(1, isqrt(m) + 1):
        if m % d:
            continue
        e = m // d
        sigma += d
        min_sum += d
        if e != d:
            sigma += e
            min_sum += d
    return sigma, min_sum


def sigma(m: int) -> int:
    return sigma_and_min_sum(m)[0]


def hurwitz_mass_rhs(m: int):
    """Divisor side of Hurwitz's relation for sum_{t^2 < 4m} H(4m - t^2).

    2 sigma(m) - sum min(d, m/d), plus 1/6 when m is a square: the classical
    identity carries boundary terms at t^2 = 4m with weight H(0) = -1/12,
    which the strict sum omits (equivalently, A1 = 1/12 in the weight-2
    trace formula at square m).
    """
    from fractions import Fraction

    s, mn = sigma_and_min_sum(m)
    rhs = Fraction(2 * s - mn)
    if isqrt(m) ** 2 == m:
        rhs += Fraction(1, 6)
    return rhs
