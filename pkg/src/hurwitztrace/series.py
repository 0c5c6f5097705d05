"""Truncated formal power series over exact coefficients.

Coefficients may be ints, Fractions or CyclotomicRational values; all ring
operations truncate consistently at a fixed order M.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import value_is_zero

_ZERO = Fraction(0)


class TruncatedSeries:
    """c_0 + c_1 z + ... + c_M z^M, exact coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()) -> None:
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [Fraction(1)])

    @classmethod
    def geometric(cls, a, d: int, order: int) -> "TruncatedSeries":
        """Expansion of 1 / (1 - a z^d): coefficient a^j at z^(j d)."""
        if d < 1:
            raise ValueError("d must be positive")
        cs = [_ZERO] * (order + 1)
        power = Fraction(1)
        j = 0
        while j * d <= order:
            cs[j * d] = power
            power = power * a
            j += 1
        return cls(order, cs)

    def _match(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._match(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._match(other)
        return TruncatedSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._match(other)
            out = [_ZERO] * (self.order + 1)
            for i, a in enumerate(self.coeffs):
                if value_is_zero(a):
                    continue
                for j in range(self.order + 1 - i):
                    b = other.coeffs[j]
                    if not value_is_zero(b):
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(self.order, out)
        # scalar
        return TruncatedSeries(self.order, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, d: int) -> "TruncatedSeries":
        """Multiply by z^d, truncating at the same order."""
        if d < 0:
            raise ValueError("d must be nonnegative")
        return TruncatedSeries(self.order, [_ZERO] * d + self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs})"
