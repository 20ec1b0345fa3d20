"""
Continued fractions, nearest-integer distances and modular arithmetic.

Everything here works on Python integers, so convergent recursions never
wrap around. Real inputs for the Diophantine diagnostics may be given as
decimal strings, :class:`decimal.Decimal`, :class:`fractions.Fraction` or
floats; strings and decimals are reduced modulo one at high precision
before anything is rounded to binary floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "CFExpansion",
    "Convergent",
    "ApproximationProfile",
    "cf_expand_rational",
    "convergents",
    "max_partial_quotient",
    "nearest_int_dist",
    "vector_nearest_int_dist",
    "frac_multiples",
    "badly_approximable_profile",
    "mod_inverse",
    "is_prime",
]

_DECIMAL_PREC = 80


@dataclass(frozen=True)
class CFExpansion:
    """Normalized finite continued fraction ``[a_0; a_1, ..., a_l]``.

    For ``l >= 1`` the last partial quotient is always 1.
    """

    partial_quotients: tuple[int, ...]
    numerator: int
    denominator: int

    @property
    def length(self) -> int:
        """Index ``l`` of the last partial quotient."""
        return len(self.partial_quotients) - 1

    def value(self) -> Fraction:
        """Evaluate the expansion from the back."""
        quotients = self.partial_quotients
        acc = Fraction(quotients[-1])
        for a in reversed(quotients[:-1]):
            acc = a + 1 / acc
        return acc


@dataclass(frozen=True)
class Convergent:
    index: int
    p: int
    q: int

    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class ApproximationProfile:
    """Minimum of ``n**(1/d) * <n alpha>`` over ``1 <= n <= n_max``."""

    argmin: int
    minimum: float
    n_max: int
    dim: int


def cf_expand_rational(num: int, den: int) -> CFExpansion:
    """Continued fraction of ``num/den`` in the normalized form.

    The fraction is reduced first. A trailing partial quotient ``t >= 2``
    is rewritten as ``(t - 1, 1)`` so that the last quotient is 1.

    >>> cf_expand_rational(7, 10).partial_quotients
    (0, 1, 2, 2, 1)
    """
    num, den = int(num), int(den)
    if den == 0:
        raise DomainError("denominator must be nonzero")
    if num < 0 or den < 0:
        raise DomainError("expected a non-negative numerator and positive denominator")
    g = math.gcd(num, den)
    num, den = num // g, den // g
    quotients = []
    a, b = num, den
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    if len(quotients) > 1 and quotients[-1] >= 2:
        quotients[-1] -= 1
        quotients.append(1)
    return CFExpansion(tuple(quotients), num, den)


def convergents(cf: CFExpansion) -> list[Convergent]:
    """All convergents ``p_n/q_n`` of ``cf``, for ``n = 0..l``."""
    p_prev2, p_prev = 0, 1
    q_prev2, q_prev = 1, 0
    out = []
    for n, a in enumerate(cf.partial_quotients):
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        out.append(Convergent(n, p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return out


def max_partial_quotient(cf: CFExpansion) -> int:
    """``K = max(a_1, ..., a_l)``; undefined for integers (``l = 0``)."""
    if cf.length < 1:
        raise DomainError("expansion of an integer has no partial quotients a_1..a_l")
    return max(cf.partial_quotients[1:])


def nearest_int_dist(x):
    """Distance from ``x`` to the nearest integer, in ``[0, 1/2]``.

    Works for floats, fractions and decimals and returns the same type.
    """
    frac = x - math.floor(x)
    return min(frac, 1 - frac)


def vector_nearest_int_dist(x) -> float:
    """Maximum over coordinates of the nearest-integer distance."""
    arr = np.asarray(x, dtype=float)
    if arr.size == 0:
        raise DomainError("empty vector")
    frac = arr - np.floor(arr)
    return float(np.max(np.minimum(frac, 1.0 - frac)))


def _to_decimal(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    if isinstance(x, Fraction):
        with localcontext() as ctx:
            ctx.prec = _DECIMAL_PREC
            return Decimal(x.numerator) / Decimal(x.denominator)
    if isinstance(x, str):
        return Decimal(x.strip())
    value = float(x)
    return Decimal(value)


def _split_fractional(x, hi_bits: int) -> tuple[float, float]:
    """Split ``{x}`` into ``hi + lo`` with ``hi`` a multiple of ``2**-hi_bits``."""
    dec = _to_decimal(x)
    if not dec.is_finite():
        raise DomainError(f"non-finite value {x!r}")
    with localcontext() as ctx:
        ctx.prec = _DECIMAL_PREC
        frac = dec - math.floor(dec)
        scaled = frac * (1 << hi_bits)
        hi_int = int(scaled.to_integral_value(rounding="ROUND_FLOOR"))
        hi = hi_int / (1 << hi_bits)
        lo = float(frac - Decimal(hi_int) / Decimal(1 << hi_bits))
    return hi, lo


def frac_multiples(alpha: Sequence, n: np.ndarray, max_n: int | None = None) -> np.ndarray:
    """Fractional parts ``{n * alpha}`` for an integer array ``n``.

    ``alpha`` is split as ``hi + lo`` where ``hi`` has few enough mantissa
    bits that ``n * hi`` is exact in binary64 for every ``n`` supplied. The
    only rounding left is in the tiny ``n * lo`` term, so results carry an
    absolute error of a few ulp of 1 rather than ``n`` ulp. Passing the same
    ``max_n`` makes results independent of which ``n`` are requested.
    """
    n = np.asarray(n, dtype=np.int64)
    if n.size and n.min() < 0:
        raise DomainError("multiples must be non-negative")
    top = int(n.max()) if n.size else 1
    if max_n is not None:
        top = max(top, int(max_n))
    n_bits = top.bit_length()
    hi_bits = max(53 - n_bits, 1)
    out = np.empty((n.shape[0], len(alpha)), dtype=float)
    nf = n.astype(float)
    for j, a in enumerate(alpha):
        hi, lo = _split_fractional(a, hi_bits)
        prod = nf * hi
        head = prod - np.floor(prod)
        val = head + nf * lo
        val -= np.floor(val)
        out[:, j] = val
    # x - floor(x) rounds up to 1.0 for tiny negative x
    np.minimum(out, np.nextafter(1.0, 0.0), out=out)
    return out


def badly_approximable_profile(alpha: Sequence, n_max: int) -> ApproximationProfile:
    """Empirical constant in ``<n alpha> >= c / n**(1/d)``.

    Scans ``n = 1..n_max`` exhaustively and returns the smallest value of
    ``n**(1/d) * <n alpha>`` together with the ``n`` attaining it (the
    smallest such ``n`` on ties).
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    alpha = list(alpha)
    if not alpha:
        raise DomainError("alpha must have at least one coordinate")
    d = len(alpha)
    best_val, best_n = math.inf, 0
    chunk = 1 << 18
    for start in range(1, n_max + 1, chunk):
        n = np.arange(start, min(start + chunk, n_max + 1), dtype=np.int64)
        frac = frac_multiples(alpha, n)
        dist = np.minimum(frac, 1.0 - frac).max(axis=1)
        stat = dist * n.astype(float) ** (1.0 / d)
        i = int(np.argmin(stat))
        if stat[i] < best_val:
            best_val, best_n = float(stat[i]), int(n[i])
    return ApproximationProfile(best_n, best_val, n_max, d)


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``, in ``{1, ..., n-1}``."""
    if n < 2:
        raise DomainError("modulus must be at least 2")
    try:
        return pow(int(a), -1, int(n))
    except ValueError:
        raise DomainError(f"{a} is not invertible modulo {n} (gcd = {math.gcd(a, n)})") from None


# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all ``n < 2**64``."""
    n = int(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
