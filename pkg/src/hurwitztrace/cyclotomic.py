"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are polynomials in zeta_e with Fraction coefficients, kept reduced
modulo the e-th cyclotomic polynomial Phi_e, so equality is coefficient-wise.
Mixed-order arithmetic lifts both operands into Q(zeta_lcm).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e (lowest degree first)."""
    if e < 1:
        raise ValueError("order must be positive")
    if e == 1:
        return (-1, 1)
    # X^e - 1 divided by the Phi_d of all proper divisors d | e.
    num = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            num = _div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _div_exact(num, den):
    """Exact division of integer polynomials, den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q = num[i]
        if q:
            out[i - dn] = q
            for j in range(dn + 1):
                num[i - dn + j] -= q * den[j]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


def phi_degree(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


def _reduce(coeffs: list[Fraction], e: int) -> list[Fraction]:
    """Remainder of a coefficient list modulo Phi_e."""
    phi = cyclotomic_polynomial(e)
    dn = len(phi) - 1
    cs = list(coeffs)
    for i in range(len(cs) - 1, dn - 1, -1):
        q = cs[i]
        if q:
            cs[i] = _ZERO
            for j in range(dn):
                cs[i - dn + j] -= q * phi[j]
    return cs[:dn]


class CyclotomicRational:
    """An element of Q(zeta_e), reduced mod Phi_e.

    Supports +, -, *, ** and equality against ints, Fractions and other
    cyclotomic values of any order.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # cross-order equality would break the hash contract

    def __init__(self, order: int, coeffs) -> None:
        deg = phi_degree(order)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce(cs, order)
        cs.extend([_ZERO] * (deg - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rational(cls, value) -> "CyclotomicRational":
        return cls(1, [Fraction(value)])

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_fraction(self):
        """The value as a Fraction, or None if it is irrational."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        c0 = self.coeffs[0]
        # zeta_1 = 1 and the basis reduction make coeff 0 the rational part
        return c0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        z = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                z += float(c) * cmath.exp(2j * cmath.pi * j / self.order)
        return z

    def __abs__(self) -> float:
        return abs(complex(self))

    # -- arithmetic --------------------------------------------------------

    def _lifted(self, e: int) -> list[Fraction]:
        """Coefficients of this value viewed inside Q(zeta_e)."""
        if e == self.order:
            return list(self.coeffs)
        step = e // self.order
        out = [_ZERO] * (len(self.coeffs) * step)
        for j, c in enumerate(self.coeffs):
            if c:
                out[j * step] = c
        return _reduce(out, e)

    def _pair(self, other):
        if isinstance(other, CyclotomicRational):
            e = lcm(self.order, other.order)
            return self._lifted(e), other._lifted(e), e
        if isinstance(other, (int, Fraction)):
            a = list(self.coeffs)
            b = [Fraction(other)] + [_ZERO] * (len(a) - 1)
            return a, b, self.order
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b, e = p
        return CyclotomicRational(e, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b, e = p
        return CyclotomicRational(e, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b, e = p
        return CyclotomicRational(e, [y - x for x, y in zip(a, b)])

    def __neg__(self):
        return CyclotomicRational(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicRational(self.order, [c * f for c in self.coeffs])
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b, e = p
        prod = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicRational(e, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicRational(self.order, [c / f for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicRational(1, [Fraction(1)])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        a, b, _ = p
        return a == b

    def __repr__(self):
        return f"CyclotomicRational(order={self.order}, coeffs={list(self.coeffs)})"

    def __str__(self):
        if self.as_fraction() is not None:
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z{self.order}^{j}" if j > 1 else f"{c}*z{self.order}")
        return " + ".join(terms) if terms else "0"


def root_of_unity(e: int, k: int = 1):
    """zeta_e^k as a Fraction when rational, else a CyclotomicRational.

    The result is stored at the reduced order e/gcd(e,k), so quadratic
    character values come back as plain +-1.
    """
    if e < 1:
        raise ValueError("order must be positive")
    k %= e
    g = gcd(k, e) if k else e
    e2, k2 = e // g, k // g
    if e2 == 1:
        return Fraction(1)
    if e2 == 2:
        return Fraction(-1)
    return CyclotomicRational(e2, [_ZERO] * k2 + [Fraction(1)])


def value_as_complex(v) -> complex:
    """Complex embedding of a Fraction / int / CyclotomicRational."""
    if isinstance(v, CyclotomicRational):
        return complex(v)
    return complex(float(v))


def value_is_zero(v) -> bool:
    if isinstance(v, CyclotomicRational):
        return v.is_zero()
    return v == 0
