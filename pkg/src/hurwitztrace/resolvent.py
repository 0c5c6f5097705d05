"""Resolvent trace formula verification in the zeta variable.

With X = chi(q)^(1/2) q^((k-1)/2) zeta, every side of the resolvent identity
becomes a power series in zeta whose coefficients are polynomial in chi
values and integer powers of q, so the whole verification is exact and free
of square-root branch choices.  The checked identity is

    sum_nu tr T(q^nu) zeta^(nu+1)
        = A1series + A2series + zeta * F(zeta) + A4series,

with A1, A4 and F given by closed rational forms and A2 by the Hurwitz-
weighted Dickson sums.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .dirichlet import divisors, euler_phi, mult_order, split_at
from .series import TruncatedSeries
from .trace import TraceContext, a_hat, psi_level, trace_T
from . import trace as _trace


def _require_coprime(q: int, ctx: TraceContext) -> None:
    if gcd(q, ctx.N) != 1:
        raise ValueError("need gcd(q, N) = 1")


def lhs_series(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """sum_nu tr T(q^nu) zeta^(nu+1) to order M."""
    _require_coprime(q, ctx)
    coeffs = [Fraction(0)]
    for nu in range(M):
        coeffs.append(trace_T(q**nu, ctx).total)
    return TruncatedSeries(M, coeffs)


def A1_series(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """Closed form (k-1) psi(N)/12 * zeta / (1 - chi(q) q^(k-2) zeta^2)."""
    _require_coprime(q, ctx)
    a = ctx.chi(q) * q ** (ctx.k - 2)
    geo = TruncatedSeries.geometric(a, 2, M)
    return (geo * Fraction(ctx.k - 1, 12) * psi_level(ctx.N)).shift(1)


def A1_series_direct(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    coeffs = [Fraction(0)] + [_trace.A1(q**nu, ctx) for nu in range(M)]
    return TruncatedSeries(M, coeffs)


def A2_series(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """-(1/2) sum_nu Ahat(nu) zeta^(nu+1), Ahat the Dickson-weighted H sums."""
    _require_coprime(q, ctx)
    coeffs = [Fraction(0)]
    for nu in range(M):
        coeffs.append(Fraction(-1, 2) * a_hat(q**nu, ctx))
    return TruncatedSeries(M, coeffs)


def A3_series_direct(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """F(zeta) = sum_nu A3(q^nu) zeta^nu (no shift)."""
    _require_coprime(q, ctx)
    return TruncatedSeries(M, [_trace.A3(q**nu, ctx) for nu in range(M + 1)])


def A3_series_closed(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """Closed rational form of F(zeta), in the zeta variable.

    F(zeta) = -sum_{l | N/f} phi(l) sum_{c | N, gcd(c, N/c) = l}
                  1 / ((1 - chi(q) q^(k-1) zeta^2) (1 - (chi_c'(q) zeta)^m_{q,l}))
              + (1/2) (1 - chi(q) q^(k-1) zeta^2)^(-1)
                  sum_{c | N, gcd(c, N/c) | N/f} phi(gcd(c, N/c)).
    """
    _require_coprime(q, ctx)
    N, chi = ctx.N, ctx.chi
    n_over_f = N // chi.conductor
    x2 = TruncatedSeries.geometric(chi(q) * q ** (ctx.k - 1), 2, M)
    total = TruncatedSeries.zero(M)
    half_weight = 0
    for c in divisors(N):
        l = gcd(c, N // c)
        if n_over_f % l:
            continue
        half_weight += euler_phi(l)
        m_ql = mult_order(q, l)
        chi_cp = split_at(chi, c).chi_c_prime
        u = chi_cp(q) ** m_ql
        term = x2 * TruncatedSeries.geometric(u, m_ql, M)
        total = total - euler_phi(l) * term
    return total + x2 * Fraction(half_weight, 2)


def A4_series(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    """Closed form delta_{k,2} delta_{chi,1} zeta / ((1 - q zeta)(1 - zeta))."""
    if ctx.k != 2 or not ctx.chi.is_principal:
        return TruncatedSeries.zero(M)
    geo = TruncatedSeries.geometric(Fraction(q), 1, M) * TruncatedSeries.geometric(
        Fraction(1), 1, M
    )
    return geo.shift(1)


def A4_series_direct(q: int, ctx: TraceContext, M: int) -> TruncatedSeries:
    coeffs = [Fraction(0)] + [_trace.A4(q**nu, ctx) for nu in range(M)]
    return TruncatedSeries(M, coeffs)


def moment_A(k: int, q: int, nu: int, N: int = 1, chi=None):
    """A_{k,q}(nu) = sum_t H_{N,chi}(4 q^nu - t^2) U_{k-2}(t / (2 q^(nu/2))).

    Exact: the value is Ahat(nu) / q^(nu (k-2) / 2) with integer exponent for
    even k.
    """
    if k % 2:
        raise ValueError("k must be even")
    ctx = TraceContext(k, N, chi)
    return a_hat(q**nu, ctx) / Fraction(q ** (nu * (k - 2) // 2))


def verify_rtf(q: int, ctx: TraceContext, M: int) -> dict:
    """Coefficient-by-coefficient check of the resolvent trace identity."""
    _require_coprime(q, ctx)
    if ctx.degenerate:
        raise ValueError("chi(-1) != (-1)^k: the space is zero, nothing to verify")
    lhs = lhs_series(q, ctx, M)
    rhs = (
        A1_series(q, ctx, M)
        + A2_series(q, ctx, M)
        + A3_series_closed(q, ctx, M).shift(1)
        + A4_series(q, ctx, M)
    )
    passes = []
    first_fail = None
    diffs = []
    for i in range(M + 1):
        d = lhs.coeffs[i] - rhs.coeffs[i]
        ok = _is_zero(d)
        passes.append(ok)
        diffs.append(d)
        if not ok and first_fail is None:
            first_fail = i
    return {
        "q": q,
        "k": ctx.k,
        "N": ctx.N,
        "chi": list(ctx.chi.exps),
        "order": M,
        "pass": passes,
        "first_fail": first_fail,
        "lhs": lhs.coeffs,
        "rhs": rhs.coeffs,
        "diff": diffs,
        "a3_convention": "unshifted F, multiplied by zeta in assembly",
    }


def _is_zero(v) -> bool:
    from .cyclotomic import value_is_zero

    return value_is_zero(v)


def radius_probe(q: int, k: int, M: int) -> list[dict]:
    """|A_{k,q}(nu)| q^(-nu/2) for nu <= M (level 1, k >= 4 even).

    The normalized magnitudes stay bounded (Cauchy estimate at radius 1) but
    do not decay geometrically.
    """
    if k % 2 or k < 4:
        raise ValueError("radius probe needs even k >= 4")
    rows = []
    for nu in range(M + 1):
        value = moment_A(k, q, nu)
        rows.append(
            {
                "nu": nu,
                "value": value,
                "normalized": abs(float(value)) * q ** (-nu / 2),
            }
        )
    return rows


def verify_two_prime(k: int, q1: int, q2: int, M1: int, M2: int) -> dict:
    """Direct multi-index check of the two-prime resolvent identity at N = 1.

    Both sides are expanded as polynomials in (z1, z2) up to (M1, M2); the
    eigenform side comes from the level-1 eta oracle (dimension <= 1 weights
    only).
    """
    from .oracle import delta_expansion, dim_Sk_level1

    if k % 2 or k < 4:
        raise ValueError("needs even k >= 4")
    dim = dim_Sk_level1(k)
    if dim > 1:
        raise ValueError("oracle side only covers dim <= 1")
    ctx = TraceContext(k, 1)

    lhs: dict[tuple[int, int], Fraction] = {}
    if dim == 1 and k == 12:
        tau = delta_expansion(max(q1**M1, q2**M2))
        for i in range(M1):
            for j in range(M2):
                lhs[(i + 1, j + 1)] = Fraction(tau[q1**i] * tau[q2**j])
    elif dim == 1:
        raise ValueError("only k = 12 has the eta oracle")

    rhs: dict[tuple[int, int], Fraction] = {}

    def add(key, val):
        rhs[key] = rhs.get(key, Fraction(0)) + val

    # A1 block: (k-1)/12 * prod_j z_j / (1 - q_j^(k-2) z_j^2)
    for i in range(0, M1, 2):
        for j in range(0, M2, 2):
            add(
                (i + 1, j + 1),
                Fraction(k - 1, 12) * q1 ** (i * (k - 2) // 2) * q2 ** (j * (k - 2) // 2),
            )
    for i in range(M1):
        for j in range(M2):
            m = q1**i * q2**j
            add((i + 1, j + 1), _trace.A3(m, ctx))
            add((i + 1, j + 1), Fraction(-1, 2) * a_hat(m, ctx))

    keys = sorted(set(lhs) | set(rhs))
    diffs = {
        key: lhs.get(key, Fraction(0)) - rhs.get(key, Fraction(0)) for key in keys
    }
    bad = [key for key, d in diffs.items() if d != 0]
    return {"k": k, "primes": (q1, q2), "pass": not bad, "first_fail": bad[:1]}
