"""Dirichlet characters mod N with exact cyclotomic values.

A character is stored by its exponents on a fixed generating set of
(Z/NZ)^* (CRT over prime powers, two generators at 2^k for k >= 3), which
gives O(1) evaluation through a precomputed table and exact conductors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import root_of_unity


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _primitive_root(p: int, e: int) -> int:
    """A generator of (Z/p^e)^* for odd prime p."""
    phi = p - 1
    prime_parts = []
    m = phi
    q = 2
    while q * q <= m:
        if m % q == 0:
            prime_parts.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        prime_parts.append(m)
    g = 2
    while any(pow(g, phi // q, p) == 1 for q in prime_parts):
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(r: int, q: int, n: int) -> int:
    """x mod n with x = r mod q and x = 1 mod n/q (q, n/q coprime)."""
    m = n // q
    if m == 1:
        return r % n
    inv = pow(m, -1, q)
    return (1 + m * ((r - 1) * inv % q)) % n


@lru_cache(maxsize=None)
def unit_group(N: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Generators (lifted mod N) and their orders for (Z/NZ)^*."""
    if N == 1:
        return (), ()
    gens: list[int] = []
    orders: list[int] = []
    for p, e in factorize(N):
        q = p**e
        if p == 2:
            if e == 2:
                gens.append(_crt_lift(3, q, N))
                orders.append(2)
            elif e >= 3:
                gens.append(_crt_lift(q - 1, q, N))
                orders.append(2)
                gens.append(_crt_lift(5, q, N))
                orders.append(q // 4)
        else:
            gens.append(_crt_lift(_primitive_root(p, e), q, N))
            orders.append(q - q // p)
    return tuple(gens), tuple(orders)


class DirichletCharacter:
    """chi mod N given by exponents a_i with chi(g_i) = exp(2*pi*i*a_i/s_i)."""

    def __init__(self, modulus: int, exps: tuple[int, ...] = ()) -> None:
        if modulus < 1:
            raise ValueError("modulus must be positive")
        gens, orders = unit_group(modulus)
        exps = tuple(exps) if exps else (0,) * len(gens)
        if len(exps) != len(gens):
            raise ValueError(
                f"need {len(gens)} exponents for modulus {modulus}, got {len(exps)}"
            )
        self.modulus = modulus
        self.exps = tuple(a % s for a, s in zip(exps, orders))
        self.order = lcm(1, *(s // gcd(s, a) for a, s in zip(self.exps, orders)))
        self._table = self._build_table(gens, orders)
        self._conductor: int | None = None

    def _build_table(self, gens, orders) -> dict[int, int]:
        N, e = self.modulus, self.order
        table: dict[int, int] = {}
        for vec in itertools.product(*[range(s) for s in orders]):
            x = 1
            r = Fraction(0)
            for g, s, a, l in zip(gens, orders, self.exps, vec):
                x = x * pow(g, l, N) % N
                r += Fraction(a * l, s)
            k = r * e
            assert k.denominator == 1
            table[x % N] = int(k) % e
        if N == 1:
            table[0] = 0
        return table

    @classmethod
    def principal(cls, modulus: int) -> "DirichletCharacter":
        return cls(modulus)

    # -- evaluation ---------------------------------------------------------

    def value_exponent(self, x: int) -> int | None:
        """k with chi(x) = zeta_order^k, or None when gcd(x, N) > 1."""
        return self._table.get(x % self.modulus)

    def __call__(self, x: int):
        k = self.value_exponent(x)
        if k is None:
            return Fraction(0)
        return root_of_unity(self.order, k)

    # -- invariants ----------------------------------------------------------

    @property
    def is_principal(self) -> bool:
        return all(a == 0 for a in self.exps)

    @property
    def is_even(self) -> bool:
        return self.value_exponent(-1) == 0

    @property
    def conductor(self) -> int:
        if self._conductor is None:
            N = self.modulus
            units = sorted(self._table)
            for f in divisors(N):
                if all(self._table[x] == 0 for x in units if (x - 1) % f == 0):
                    self._conductor = f
                    break
        return self._conductor

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if self.modulus != other.modulus:
            raise ValueError("character product needs equal moduli")
        return DirichletCharacter(
            self.modulus, tuple(a + b for a, b in zip(self.exps, other.exps))
        )

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.exps == other.exps

    def __hash__(self):
        return hash((self.modulus, self.exps))

    def __repr__(self):
        return f"DirichletCharacter(modulus={self.modulus}, exps={self.exps})"


def enumerate_characters(N: int) -> list[DirichletCharacter]:
    """All phi(N) characters mod N, in generator-exponent order."""
    _, orders = unit_group(N)
    return [
        DirichletCharacter(N, vec)
        for vec in itertools.product(*[range(s) for s in orders])
    ]


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def mult_order(q: int, l: int) -> int:
    """Multiplicative order of q mod l (order 1 for l = 1)."""
    if l < 1:
        raise ValueError("modulus must be positive")
    if gcd(q, l) != 1:
        raise ValueError(f"gcd({q}, {l}) > 1")
    m = 1
    x = q % l
    while x % l != 1 % l:
        x = x * q % l
        m += 1
    return m


@dataclass(frozen=True)
class CharacterSplit:
    """chi = chi_c x chi_c' with coprime conductors c1 and f_chi/c1."""

    c: int
    c1: int
    c2: int
    chi_c: DirichletCharacter
    chi_c_prime: DirichletCharacter


def _component(chi: DirichletCharacter, u: int, v: int) -> DirichletCharacter:
    """The modulus-u factor of the primitive character of chi, f_chi = u*v."""
    N = chi.modulus
    f = u * v
    gens, orders = unit_group(u)
    exps = []
    for g, s in zip(gens, orders):
        w = _crt_pair(g % u, u, 1, v)
        y = next(
            w + j * f for j in range(max(N // f, 1) + 1) if gcd(w + j * f, N) == 1
        )
        k = chi.value_exponent(y)
        a = Fraction(k, chi.order) * s
        if a.denominator != 1:
            raise ArithmeticError("component value is not an s-th root of unity")
        exps.append(int(a))
    return DirichletCharacter(u, tuple(exps))


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """x mod m1*m2 with x = r1 mod m1, x = r2 mod m2 (coprime moduli)."""
    if m1 == 1:
        return r2 % m2
    if m2 == 1:
        return r1 % m1
    inv = pow(m1, -1, m2)
    return (r1 + m1 * ((r2 - r1) * inv % m2)) % (m1 * m2)


def split_at(chi: DirichletCharacter, c: int) -> CharacterSplit:
    """Factor chi through conductors gcd(c, f_chi) and f_chi/gcd(c, f_chi)."""
    N = chi.modulus
    if c < 1 or N % c:
        raise ValueError(f"{c} does not divide the modulus {N}")
    f = chi.conductor
    c1 = gcd(c, f)
    c2 = c // c1
    if gcd(c1, f // c1) != 1:
        raise ValueError(
            f"no splitting at c={c}: gcd(c1, f/c1) = {gcd(c1, f // c1)} > 1"
        )
    chi_c = _component(chi, c1, f // c1)
    chi_cp = _component(chi, f // c1, c1)
    return CharacterSplit(c=c, c1=c1, c2=c2, chi_c=chi_c, chi_c_prime=chi_cp)
