"""Constructors for the point-set families: rank-1, Fibonacci, hexagonal,
Kronecker, Frolov and regular grids."""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from .errors import DomainError, ResourceError
from .lattice import DEFAULT_BUDGET, enumerate_in_cube, frolov_matrix
from .numtheory import frac_multiples
from .pointset import PointSet

__all__ = [
    "fibonacci",
    "gen_rank1",
    "gen_fibonacci",
    "hexagonal_quotients",
    "hexagonal_fraction",
    "gen_hexagonal_cf",
    "gen_kronecker",
    "alpha_power2",
    "golden_alpha",
    "liouville_alpha",
    "named_alpha",
    "gen_frolov_points",
    "gen_grid_regular",
    "gen_grid_aniso",
]

_MAX_N = 1 << 62
_ALPHA_DIGITS = 60
_KRONECKER_SPLIT = 1 << 26


def fibonacci(m: int) -> int:
    """``F_m`` with ``F_1 = F_2 = 1``."""
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def gen_rank1(g, N: int) -> PointSet:
    """Rank-1 lattice point set ``{ {k g / N} : k = 0..N-1 }``."""
    g = [int(v) for v in g]
    N = int(N)
    if N < 1 or not g:
        raise DomainError("need N >= 1 and a non-empty generating vector")
    for gi in g:
        if math.gcd(gi, N) != 1:
            raise DomainError(f"gcd({gi}, {N}) != 1")
    if N > DEFAULT_BUDGET * 16:
        raise ResourceError(f"N = {N} exceeds the point budget")
    k = np.arange(N, dtype=np.int64)[:, None]
    gv = np.array([gi % N for gi in g], dtype=np.int64)[None, :]
    num = (k * gv) % N
    return PointSet.from_rational(num, N, "rank1", {"g": [gi % N for gi in g], "N": N})


def gen_fibonacci(m: int) -> PointSet:
    """Fibonacci lattice ``P((1, F_{m-1}), F_m)``."""
    if m < 3:
        raise DomainError("Fibonacci lattices need m >= 3")
    N, g = fibonacci(m), fibonacci(m - 1)
    ps = gen_rank1((1, g), N)
    return PointSet.from_rational(ps.numerators, ps.denominator, "fibonacci",
                                  {"m": m, "g": [1, g], "N": N})


def hexagonal_quotients(k: int) -> list[int]:
    """Partial quotients ``[0; 2, 1, 2, ..., 1, 2]`` of length ``2k + 2``."""
    if k < 1:
        raise DomainError("k must be at least 1")
    return [0] + [2 if i % 2 else 1 for i in range(1, 2 * k + 2)]


def hexagonal_fraction(k: int) -> Fraction:
    """``g_k / N_k`` via the convergent recursion."""
    p2, p1, q2, q1 = 0, 1, 1, 0
    for a in hexagonal_quotients(k):
        p2, p1 = p1, a * p1 + p2
        q2, q1 = q1, a * q1 + q2
        if q1 >= _MAX_N:
            raise ResourceError(f"convergent denominator overflows 62 bits at k={k}")
    return Fraction(p1, q1)


def gen_hexagonal_cf(k: int) -> PointSet:
    """Rank-1 lattice ``P((1, g_k), N_k)`` whose shape tends to the hexagonal lattice."""
    frac = hexagonal_fraction(k)
    g, N = frac.numerator, frac.denominator
    ps = gen_rank1((1, g), N)
    return PointSet.from_rational(ps.numerators, ps.denominator, "hexcf",
                                  {"k": k, "g": [1, g], "N": N})


def alpha_power2(d: int) -> tuple[Decimal, ...]:
    """``(2**(1/(d+1)), 2**(2/(d+1)), ..., 2**(d/(d+1)))`` to 60 digits."""
    if d < 1:
        raise DomainError("dimension must be at least 1")
    with localcontext() as ctx:
        ctx.prec = _ALPHA_DIGITS
        return tuple(Decimal(2) ** (Decimal(j) / Decimal(d + 1)) for j in range(1, d + 1))


def golden_alpha() -> tuple[Decimal]:
    """``((sqrt(5) - 1) / 2,)``."""
    with localcontext() as ctx:
        ctx.prec = _ALPHA_DIGITS
        return ((Decimal(5).sqrt() - 1) / 2,)


def liouville_alpha(dim: int = 1, terms: int = 6) -> tuple[Decimal, ...]:
    """Liouville's constant ``sum_k 10**(-k!)``, repeated ``dim`` times.

    Far from badly approximable: ``<10**(k!) alpha>`` collapses
    super-exponentially.
    """
    digits = math.factorial(terms) + 10
    with localcontext() as ctx:
        ctx.prec = digits
        value = sum(Decimal(10) ** -math.factorial(k) for k in range(1, terms + 1))
    return (value,) * dim


def named_alpha(name: str, dim: int = 1) -> tuple:
    """Look up ``pow2``, ``golden`` or ``liouville`` by name."""
    if name == "pow2":
        return alpha_power2(dim)
    if name == "golden":
        if dim != 1:
            raise DomainError("the golden-ratio direction is one-dimensional")
        return golden_alpha()
    if name == "liouville":
        return liouville_alpha(dim)
    raise DomainError(f"unknown alpha family {name!r}")


def gen_kronecker(alpha, N: int, include_zero: bool = False) -> PointSet:
    """First ``N`` points of the Kronecker sequence ``({n alpha})``.

    The sequence starts at ``n = 1`` unless ``include_zero`` is set, in
    which case it starts at the origin. Prefixes are stable: the first
    ``M`` points of ``gen_kronecker(alpha, N)`` equal ``gen_kronecker(alpha, M)``.
    """
    if N < 1:
        raise DomainError("N must be at least 1")
    alpha = tuple(alpha)
    start = 0 if include_zero else 1
    n = np.arange(start, start + N, dtype=np.int64)
    # fixed split point so every prefix computes bit-identical values
    x = frac_multiples(alpha, n, max_n=_KRONECKER_SPLIT)
    return PointSet.from_float(x, "kronecker",
                               {"alpha": [str(a) for a in alpha], "include_zero": include_zero})


def gen_frolov_points(d: int, a, delta=None, budget: int = DEFAULT_BUDGET) -> PointSet:
    """Shrunk, shifted Frolov lattice ``{(T k - delta) / a} ∩ [0, 1)^d``."""
    return enumerate_in_cube(frolov_matrix(d), a, delta, budget)


def gen_grid_regular(m: int, d: int, budget: int = DEFAULT_BUDGET) -> PointSet:
    """Regular grid ``{k / m : 0 <= k_j < m}^d`` with ``m**d`` points."""
    if m < 1 or d < 1:
        raise DomainError("need m >= 1 and d >= 1")
    if m ** d > budget:
        raise ResourceError(f"grid with {m ** d} points exceeds budget {budget}")
    axes = [np.arange(m, dtype=np.int64)] * d
    num = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
    return PointSet.from_rational(num, m, "grid", {"m": m, "d": d})


def gen_grid_aniso(m: int, d: int, budget: int = DEFAULT_BUDGET) -> PointSet:
    """Anisotropic grid with ``m`` points per axis except ``m**2`` on the last."""
    if m < 2 or d < 2:
        raise DomainError("need m >= 2 and d >= 2")
    if m ** (d + 1) > budget:
        raise ResourceError(f"grid with {m ** (d + 1)} points exceeds budget {budget}")
    den = m * m
    axes = [np.arange(m, dtype=np.int64) * m] * (d - 1) + [np.arange(den, dtype=np.int64)]
    num = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
    sizes = [m] * (d - 1) + [den]
    return PointSet.from_rational(num, den, "grid-aniso", {"m": m, "d": d, "sizes": sizes})
