"""Hurwitz-weighted point measures on [-1, 1] and their semicircle limit.

mu_m puts mass H(4m - t^2) at t / (2 sqrt m); the twisted variants carry
H_{N,chi} weights and the 1/(2 q^nu) normalization.  Atom bookkeeping is
exact: interval membership compares t^2 against 4 m alpha^2 with sign
handling, and only the semicircle integral itself is evaluated in (high
precision) floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import mpmath

from . import quadforms
from .cyclotomic import value_as_complex, value_is_zero
from .dirichlet import DirichletCharacter
from .oracle import hurwitz_mass_rhs
from .trace import dickson_e, hecke_H_values

mpmath.mp.dps = 40


@dataclass(frozen=True)
class DiscreteMeasure:
    """Weighted atoms at t / (2 sqrt m), t^2 < 4m; weights exact."""

    m: int
    atoms: tuple  # ((t, weight), ...) for all t, negative and positive
    scale: Fraction = Fraction(1)

    def mass(self):
        total = sum(w for _, w in self.atoms)
        return self.scale * total

    def moment_x(self, n: int):
        """<mu, x^n> exactly; zero for odd n by t <-> -t symmetry."""
        total = sum(w * t**n for t, w in self.atoms)
        if n % 2:
            if not value_is_zero(total):
                raise ValueError("odd moment of an asymmetric measure is irrational")
            return Fraction(0)
        return self.scale * total / Fraction(4 * self.m) ** (n // 2)

    def moment_u(self, l: int):
        """<mu, U_l> via the Dickson form E_l(t, m) / m^(l/2)."""
        total = sum(w * dickson_e(l, t, self.m) for t, w in self.atoms)
        if l % 2:
            if not value_is_zero(total):
                raise ValueError("odd moment of an asymmetric measure is irrational")
            return Fraction(0)
        return self.scale * total / Fraction(self.m ** (l // 2))

    def interval_mass(self, alpha, beta):
        """Mass of alpha <= t/(2 sqrt m) <= beta, endpoints exact."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        if alpha >= beta:
            raise ValueError("need alpha < beta")
        total = Fraction(0)
        for t, w in self.atoms:
            if (
                _cmp_position(t, self.m, alpha) >= 0
                and _cmp_position(t, self.m, beta) <= 0
            ):
                total += w
        return self.scale * total


def _cmp_position(t: int, m: int, r: Fraction) -> int:
    """Sign of t/(2 sqrt m) - r, computed exactly."""
    if r == 0:
        return (t > 0) - (t < 0)
    if r > 0:
        if t <= 0:
            return -1
        lhs, rhs = t * t * r.denominator**2, 4 * m * r.numerator**2
        return (lhs > rhs) - (lhs < rhs)
    if t >= 0:
        return 1
    lhs, rhs = t * t * r.denominator**2, 4 * m * r.numerator**2
    return (rhs > lhs) - (rhs < lhs)


def build_measure(m: int) -> DiscreteMeasure:
    """mu_m = sum_{t^2 < 4m} H(4m - t^2) delta_{t/(2 sqrt m)}."""
    row = quadforms.hurwitz_row(m)
    atoms = [(t, w) for t, w in row.items()]
    atoms += [(-t, w) for t, w in row.items() if t > 0]
    atoms.sort()
    return DiscreteMeasure(m, tuple(atoms))


def build_twisted_measure(
    N: int, chi: DirichletCharacter, q: int, nu: int
) -> DiscreteMeasure:
    """mu_nu^{N,chi,q}: H_{N,chi} weights with normalization 1/(2 q^nu).

    H_{N,chi}(4m - t^2) depends on the sign of t through chi(-1).
    """
    m = q**nu
    row = hecke_H_values(N, chi, m)
    sign = 1 if chi.is_even else -1
    atoms = [(t, w) for t, w in row.items()]
    atoms += [(-t, sign * w) for t, w in row.items() if t > 0]
    atoms.sort(key=lambda a: a[0])
    return DiscreteMeasure(m, tuple(atoms), scale=Fraction(1, 2 * m))


def moment_x(m: int, n: int):
    return build_measure(m).moment_x(n)


def moment_U(m: int, l: int):
    return build_measure(m).moment_u(l)


def interval_mass(m: int, alpha, beta):
    return build_measure(m).interval_mass(alpha, beta)


def twisted_mass(N: int, chi: DirichletCharacter, q: int, nu: int):
    """<mu_nu^{N,chi,q}, 1>; tends to 1/(1 - 1/q) for principal chi."""
    return build_twisted_measure(N, chi, q, nu).mass()


def twisted_u_moment(N: int, chi: DirichletCharacter, q: int, nu: int, l: int):
    return build_twisted_measure(N, chi, q, nu).moment_u(l)


def semicircle_mass(alpha, beta) -> mpmath.mpf:
    """(2/pi) integral_alpha^beta sqrt(1 - x^2) dx, 40-digit precision."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (-1 <= alpha < beta <= 1):
        raise ValueError("need -1 <= alpha < beta <= 1")

    def anti(x: Fraction) -> mpmath.mpf:
        xf = mpmath.mpf(x.numerator) / x.denominator
        return xf * mpmath.sqrt(1 - xf * xf) + mpmath.asin(xf)

    return (anti(beta) - anti(alpha)) / mpmath.pi


def semicircle_cdf(x) -> mpmath.mpf:
    x = Fraction(x)
    if x <= -1:
        return mpmath.mpf(0)
    if x >= 1:
        return mpmath.mpf(1)
    return semicircle_mass(Fraction(-1), x)


def equidist_report(q: int, nu_list, grid_size: int) -> dict:
    """Cell-by-cell comparison of mu_{q^nu} with the semicircle law.

    For each nu: interval masses on `grid_size` equal cells of [-1, 1]
    (exact), their ratios to the total mass, the semicircle cell masses, the
    sup discrepancy, and the Lemma-type normalized mass
    (1 - 1/q)/(2 q^nu) * total.
    """
    edges = [Fraction(-1) + Fraction(2 * i, grid_size) for i in range(grid_size + 1)]
    semis = [
        float(semicircle_mass(edges[i], edges[i + 1])) for i in range(grid_size)
    ]
    out = {"q": q, "grid": grid_size, "rows": [], "summaries": []}
    for nu in nu_list:
        mu = build_measure(q**nu)
        total = mu.mass()
        cells = _partition_masses(mu, edges)
        discrepancies = []
        rows = []
        for i in range(grid_size):
            ratio = cells[i] / total
            err = abs(float(ratio) - semis[i])
            discrepancies.append(err)
            rows.append(
                {
                    "nu": nu,
                    "alpha": edges[i],
                    "beta": edges[i + 1],
                    "mass": cells[i],
                    "ratio": float(ratio),
                    "semicircle": semis[i],
                    "abs_err": err,
                }
            )
        normalized = Fraction(q - 1, q) * Fraction(1, 2 * q**nu) * total
        out["rows"].extend(rows)
        out["summaries"].append(
            {
                "nu": nu,
                "total_mass": total,
                "discrepancy": max(discrepancies),
                "normalized_mass": normalized,
                "normalized_err": abs(float(normalized - 1)),
            }
        )
    return out


def _partition_masses(mu: DiscreteMeasure, edges) -> list:
    """Exact masses per half-open cell [e_i, e_{i+1}) (last cell closed)."""
    grid = len(edges) - 1
    cells = [Fraction(0)] * grid
    m = mu.m
    two_sqrt = 2 * sqrt(m)
    for t, w in mu.atoms:
        i = int((t / two_sqrt + 1) * grid / 2)
        i = min(max(i, 0), grid - 1)
        # fix float rounding with exact comparisons
        while i > 0 and _cmp_position(t, m, edges[i]) < 0:
            i -= 1
        while i < grid - 1 and _cmp_position(t, m, edges[i + 1]) >= 0:
            i += 1
        cells[i] += w
    return [mu.scale * c for c in cells]


def bound_sweep(q: int, n_max: int, nu_max: int) -> dict:
    """Moment-growth tables for the half-power bound.

    For even n in [2, n_max] and nu <= nu_max: the monomial moments
    |<mu_{q^nu}, x^n>| q^(-nu/2) and the Chebyshev moments
    |<mu_{q^nu}, U_n>| q^(-nu/2), with a boundedness flag per n (running max
    of r_nu q^(-0.1 nu) attained before the final nu).
    """
    rows = []
    flags = {}
    measures = [build_measure(q**nu) for nu in range(nu_max + 1)]
    for n in range(2, n_max + 1, 2):
        damped = []
        for nu, mu in enumerate(measures):
            mono = mu.moment_x(n)
            cheb = mu.moment_u(n)
            r_mono = abs(float(mono)) * q ** (-nu / 2)
            r_cheb = abs(float(cheb)) * q ** (-nu / 2)
            damped.append(r_cheb * q ** (-0.1 * nu))
            rows.append(
                {
                    "n": n,
                    "nu": nu,
                    "moment_x": mono,
                    "moment_U": cheb,
                    "r_monomial": r_mono,
                    "r_chebyshev": r_cheb,
                }
            )
        flags[n] = damped.index(max(damped)) < nu_max
    return {"q": q, "rows": rows, "bounded_flags": flags}


def multiprime_moment(primes, exponents, l: int):
    """<mu_m, U_l> for m = prod q_j^(nu_j) (the N(S) family)."""
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    m = 1
    for p, e in zip(primes, exponents):
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        m *= p**e
    return moment_U(m, l)


def multiprime_sweep(primes, max_exp: int, ls) -> list[dict]:
    """|<mu_m, U_l>| with m^(-1/2) and m^(-0.6) normalizations on a grid."""
    rows = []
    import itertools

    for exps in itertools.product(range(max_exp + 1), repeat=len(primes)):
        m = 1
        for p, e in zip(primes, exps):
            m *= p**e
        for l in ls:
            val = moment_U(m, l)
            a = abs(float(val))
            rows.append(
                {
                    "exponents": exps,
                    "m": m,
                    "l": l,
                    "value": val,
                    "norm_half": a * m**-0.5,
                    "norm_06": a * m**-0.6,
                }
            )
    return rows


def mass_check(m_max: int) -> tuple[bool, int | None, list[dict]]:
    """<mu_m, 1> against the Hurwitz divisor expression, exactly.

    The divisor side 2 sigma(m) - sum min(d, m/d) picks up the classical
    +1/6 boundary adjustment at square m (see oracle.hurwitz_mass_rhs).
    """
    # warm the Hurwitz cache in one vectorised pass
    quadforms.hurwitz_values(
        [d for d in range(3, 4 * m_max + 1) if d % 4 in (0, 3)]
    )
    rows = []
    first_bad = None
    for m in range(1, m_max + 1):
        lhs = build_measure(m).mass()
        rhs = hurwitz_mass_rhs(m)
        ok = lhs == rhs
        if not ok and first_bad is None:
            first_bad = m
        rows.append({"m": m, "mass": lhs, "divisor_side": rhs, "ok": ok})
    return first_bad is None, first_bad, rows


def twisted_mass_abs(N: int, chi: DirichletCharacter, q: int, nu: int) -> float:
    """|<mu_nu^{N,chi,q}, 1>| through the complex embedding."""
    return abs(value_as_complex(twisted_mass(N, chi, q, nu)))
