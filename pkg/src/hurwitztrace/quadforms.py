"""Positive definite binary quadratic forms and Hurwitz class numbers.

Two routes are kept for every class-number quantity:

* a literal enumeration of reduced forms (pure Python, obviously correct),
* a vectorised counting engine used for large parameter sweeps.

Both are exact integer/rational arithmetic; the engine only counts lattice
points with int64 vectors and the tests pin the two routes against each other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, NamedTuple

import numpy as np


class BinaryQuadraticForm(NamedTuple):
    """Integral form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        if b < 0 and (abs(b) == a or a == c):
            return False
        return True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1


def _check_form_discriminant(D: int) -> None:
    if D >= 0:
        raise ValueError(f"discriminant must be negative, got {D}")
    if D % 4 not in (0, 1):
        raise ValueError(f"discriminant must be 0 or 1 mod 4, got {D}")


def reduced_forms(D: int) -> list[BinaryQuadraticForm]:
    """All primitive reduced forms of discriminant D < 0, one per class.

    Reduction convention: |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    _check_form_discriminant(D)
    forms = []
    n = -D
    for a in range(1, isqrt(n // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b + n
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(BinaryQuadraticForm(a, b, c))
    forms.sort()
    return forms


@lru_cache(maxsize=None)
def class_number(D: int) -> int:
    """h_D: number of classes of primitive forms of discriminant D < 0."""
    return len(reduced_forms(D))


def unit_count(D: int) -> int:
    """#units of the imaginary quadratic order of discriminant D."""
    _check_form_discriminant(D)
    if D == -3:
        return 6
    if D == -4:
        return 4
    return 2


def unit_weighted_h(D: int) -> Fraction:
    """h_w(D) = 2 h_D / #units."""
    return Fraction(2 * class_number(D), unit_count(D))


def is_fundamental_discriminant(D: int) -> bool:
    if D >= 0 or D % 4 not in (0, 1):
        return False
    if D % 4 == 1:
        return _is_squarefree(-D)
    # D = -4n fundamental iff -n = 2, 3 mod 4 and n squarefree
    n = -D // 4
    return n % 4 in (1, 2) and _is_squarefree(n)


def _is_squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2
    return True


@dataclass(frozen=True)
class OrderDiscriminant:
    """D = D0 * f^2 with D0 the fundamental discriminant."""

    D: int
    D0: int
    f: int

    def __post_init__(self):
        _check_form_discriminant(self.D)
        if not is_fundamental_discriminant(self.D0):
            raise ValueError(f"{self.D0} is not a fundamental discriminant")
        if self.D != self.D0 * self.f * self.f:
            raise ValueError("D != D0 * f^2")


def fundamental_decomposition(D: int) -> OrderDiscriminant:
    """Split a negative discriminant as D0 * f^2."""
    _check_form_discriminant(D)
    n = -D
    square = 1
    core = 1
    for p, e in _factorize(n):
        square *= p ** (e // 2)
        if e % 2:
            core *= p
    if (-core) % 4 == 1:
        return OrderDiscriminant(D, -core, square)
    # core = 1,2 mod 4: the fundamental part picks up the factor 4
    if square % 2:
        raise ValueError(f"{D} is not 0 or 1 mod 4")  # unreachable after check
    return OrderDiscriminant(D, -4 * core, square // 2)


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n) with the full rules at 2, -1 and 0."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # strip factors of 2 from n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol on the odd part by quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def hw_from_fundamental(D0: int, f: int) -> Fraction:
    """h_w(D0 f^2) via h_w(D0) * f * prod_{p | f} (1 - (D0|p)/p)."""
    if not is_fundamental_discriminant(D0):
        raise ValueError(f"{D0} is not a fundamental discriminant")
    if f < 1:
        raise ValueError("conductor must be positive")
    value = unit_weighted_h(D0) * f
    for p, _ in _factorize(f):
        value *= 1 - Fraction(kronecker_symbol(D0, p), p)
    return value


# ---------------------------------------------------------------------------
# Hurwitz class numbers H(D), D > 0, D = 0 or 3 mod 4
# ---------------------------------------------------------------------------

_H_CACHE: dict[int, Fraction] = {}
_H_LOCK = threading.Lock()

# pure-Python counting below this, vectorised engine above
_PY_COUNT_CUTOFF = 40_000


def _check_hurwitz_arg(D: int) -> None:
    if D <= 0:
        raise ValueError(f"H(D) needs D > 0, got {D}")
    if D % 4 not in (0, 3):
        raise ValueError(f"H(D) needs D = 0 or 3 mod 4, got {D}")


def _reduced_count_py(D: int) -> int:
    """Number of reduced forms (primitive or not) of discriminant -D."""
    count = 0
    for a in range(1, isqrt(D // 3) + 1):
        fa = 4 * a
        for b in range(-a, a + 1):
            num = b * b + D
            if num % fa:
                continue
            c = num // fa
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            count += 1
    return count


def _weight_correction(D: int) -> Fraction:
    """Stabilizer correction: 1/2 for the class of s(x^2+y^2), 2/3 for s(x^2+xy+y^2)."""
    corr = Fraction(0)
    if D % 4 == 0:
        s = isqrt(D // 4)
        if 4 * s * s == D:
            corr += Fraction(1, 2)
    if D % 3 == 0:
        s = isqrt(D // 3)
        if 3 * s * s == D:
            corr += Fraction(2, 3)
    return corr


# -- vectorised counting engine ---------------------------------------------
#
# For each leading coefficient a, the b with 4a | b^2 + D, 0 <= b <= a are
# found by binary search in a precomputed table of (b^2 mod 4a, b) pairs
# packed into a single integer key; the c >= a constraint becomes a lower
# bound on b.  Everything stays in exact integer arithmetic.

_PACKED: list[np.ndarray | None] = [None]
_PACKED_LOCK = threading.Lock()


def _packed_table(a: int) -> np.ndarray:
    while len(_PACKED) <= a:
        _PACKED.append(None)
    tab = _PACKED[a]
    if tab is None:
        b = np.arange(a + 1, dtype=np.int64)
        key = (b * b) % (4 * a) * (a + 2) + b
        dtype = np.int32 if 4 * a * (a + 2) < 2**31 else np.int64
        tab = np.sort(key).astype(dtype)
        _PACKED[a] = tab
    return tab


def _ceil_sqrt(x: np.ndarray) -> np.ndarray:
    """Smallest integers r with r*r >= x, for x >= 0 (exact)."""
    r = np.sqrt(x.astype(np.float64)).astype(np.int64)
    r = np.where(r * r < x, r + 1, r)
    r = np.where((r - 1) * (r - 1) >= x, r - 1, r)
    return r


def _reduced_counts_bulk(ds: np.ndarray) -> np.ndarray:
    """Reduced-form counts for an ascending int64 array of discriminants -d."""
    n = len(ds)
    counts = np.zeros(n, dtype=np.int64)
    if n == 0:
        return counts
    amax = isqrt(int(ds[-1]) // 3)
    with _PACKED_LOCK:
        for a in range(1, amax + 1):
            _packed_table(a)
    for a in range(1, amax + 1):
        lo_i = int(np.searchsorted(ds, 3 * a * a))
        if lo_i >= n:
            break
        d = ds[lo_i:]
        fa = 4 * a
        k = (-d) % fa
        x = np.maximum(4 * a * a - d, 0)
        b_lo = _ceil_sqrt(x)
        tab = _packed_table(a)
        key_lo = (k * (a + 2) + b_lo).astype(tab.dtype)
        key_hi = (k * (a + 2) + a).astype(tab.dtype)
        u = np.searchsorted(tab, key_hi, side="right") - np.searchsorted(
            tab, key_lo, side="left"
        )
        z = (k == 0) & (d >= 4 * a * a)
        ea = (k == (a * a) % fa) & (d >= 3 * a * a)
        ec = (x > 0) & (x < a * a) & (b_lo * b_lo == x)
        counts[lo_i:] += 2 * u - z - ea - ec
    return counts


def hurwitz_H(D: int) -> Fraction:
    """Hurwitz class number H(D): classes of discriminant -D weighted by 1/#stab."""
    _check_hurwitz_arg(D)
    with _H_LOCK:
        cached = _H_CACHE.get(D)
    if cached is not None:
        return cached
    if D <= _PY_COUNT_CUTOFF:
        count = _reduced_count_py(D)
    else:
        count = int(_reduced_counts_bulk(np.array([D], dtype=np.int64))[0])
    value = count - _weight_correction(D)
    with _H_LOCK:
        _H_CACHE[D] = value
    return value


def hurwitz_values(discs: Iterable[int]) -> list[Fraction]:
    """Bulk-exact H over many discriminants (memoised)."""
    ds = list(discs)
    for D in ds:
        _check_hurwitz_arg(D)
    with _H_LOCK:
        missing = sorted({D for D in ds if D not in _H_CACHE})
    if missing:
        arr = np.array(missing, dtype=np.int64)
        counts = _reduced_counts_bulk(arr)
        with _H_LOCK:
            for D, cnt in zip(missing, counts):
                _H_CACHE[D] = int(cnt) - _weight_correction(D)
    with _H_LOCK:
        return [_H_CACHE[D] for D in ds]


def hurwitz_row(m: int) -> dict[int, Fraction]:
    """H(4m - t^2) for all 0 <= t with t^2 < 4m, keyed by t."""
    if m < 1:
        raise ValueError("m must be positive")
    ts = range(isqrt(4 * m - 1) + 1)
    vals = hurwitz_values([4 * m - t * t for t in ts])
    return dict(zip(ts, vals))


def hurwitz_H_fsum(D: int) -> Fraction:
    """H(D) through the conductor sum of unit-weighted class numbers.

    Slow reference route: sum of h_w(-D/f^2) over f^2 | D with -D/f^2 a
    valid discriminant.
    """
    _check_hurwitz_arg(D)
    total = Fraction(0)
    for f in range(1, isqrt(D) + 1):
        if D % (f * f):
            continue
        d = -(D // (f * f))
        if d % 4 in (0, 1):
            total += unit_weighted_h(d)
    return total


def generalized_H(N: int, chi, t: int, m: int):
    """H_{N,chi}(4m - t^2): the conductor sum weighted by local factors.

    For N = 1 this is exactly hurwitz_H(4m - t^2).
    """
    from .trace import mu_local  # local import; trace depends on this module

    if m < 1:
        raise ValueError("m must be positive")
    if t * t >= 4 * m:
        raise ValueError("need t^2 < 4m")
    if gcd(m, N) != 1:
        raise ValueError("need gcd(m, N) = 1")
    D = 4 * m - t * t
    total = Fraction(0)
    for f in range(1, isqrt(D) + 1):
        if D % (f * f):
            continue
        d = -(D // (f * f))
        if d % 4 not in (0, 1):
            continue
        total = total + unit_weighted_h(d) * mu_local(t, f, m, N, chi)
    return total


def write_hurwitz_table(fp, d_max: int) -> int:
    """Emit `D,H_numerator,H_denominator` rows for all valid D <= d_max."""
    ds = [D for D in range(3, d_max + 1) if D % 4 in (0, 3)]
    vals = hurwitz_values(ds)
    fp.write("D,H_numerator,H_denominator\n")
    for D, h in zip(ds, vals):
        fp.write(f"{D},{h.numerator},{h.denominator}\n")
    return len(ds)


def clear_caches() -> None:
    """Drop memoised class numbers and engine tables (mainly for tests)."""
    global _PACKED
    with _H_LOCK:
        _H_CACHE.clear()
    with _PACKED_LOCK:
        _PACKED = [None]
    class_number.cache_clear()
