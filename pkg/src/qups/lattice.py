"""
Euclidean lattices ``X = T(Z^d)``: construction, enumeration, minima.

Lattices whose generator matrix is rational (rank-1 lattices, integer
grids) keep an exact integer copy ``T = M / den`` and all norm comparisons
on them are done in integer arithmetic. Frolov lattices have irrational
entries and are handled in binary64 with explicit tolerances.

Short vectors are found by exhaustive enumeration over coefficient boxes
with a doubling radius. That is only sensible in small dimension, which is
all this module is meant for (``d <= 4``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ResourceError
from .numtheory import cf_expand_rational, convergents, mod_inverse
from .pointset import PointSet

__all__ = [
    "LatticeSpec",
    "ShortVector",
    "SuccessiveMinima",
    "DualVector",
    "Admissibility",
    "parse_norm",
    "generic_lattice",
    "integer_lattice",
    "rank1_lattice",
    "frolov_polynomial",
    "frolov_roots",
    "frolov_matrix",
    "enumerate_in_cube",
    "lattice_vectors",
    "shortest_vector",
    "shortest_vector_2d_cf",
    "successive_minima",
    "lattice_covering_upper",
    "lattice_mesh_ratio_upper",
    "dual_shortest",
    "admissibility_min_normform",
]

DEFAULT_BUDGET = 4_000_000
FLOAT_DET_TOL = 1e-12
FLOAT_CUBE_TOL = 1e-12
_CHUNK = 1 << 20


def parse_norm(p) -> float:
    """Normalize a norm selector to ``1.0``, ``2.0`` or ``inf``."""
    if isinstance(p, str):
        key = p.strip().lower()
        if key in ("inf", "infinity", "max", "linf"):
            return math.inf
        p = float(key)
    p = float(p)
    if p not in (1.0, 2.0, math.inf):
        raise DomainError(f"unsupported norm p={p}; use 1, 2 or inf")
    return p


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """A full-rank lattice ``T(Z^d)``.

    Attributes
    ----------
    matrix : ndarray
        Generator matrix ``T`` as floats; lattice vectors are ``T @ k``.
    int_matrix, denominator
        Exact representation ``T = int_matrix / denominator`` when available.
    kind : str
        ``"generic"``, ``"rank1"``, ``"frolov"`` or ``"integer"``.
    params : dict
        Construction parameters (``g`` and ``N`` for rank-1, roots for Frolov).
    """

    matrix: np.ndarray
    int_matrix: np.ndarray | None = None
    denominator: int = 1
    kind: str = "generic"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        t = self.matrix
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise DomainError("generator matrix must be square")
        if self.is_exact:
            if _exact_det(self.int_matrix) == 0:
                raise DomainError("generator matrix is singular")
        elif abs(np.linalg.det(t)) <= FLOAT_DET_TOL:
            raise DomainError("generator matrix is (numerically) singular")

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_exact(self) -> bool:
        return self.int_matrix is not None

    @property
    def det_abs(self):
        """``|det T|``, a :class:`Fraction` for exact lattices."""
        if self.is_exact:
            return Fraction(abs(_exact_det(self.int_matrix)), self.denominator ** self.d)
        return float(abs(np.linalg.det(self.matrix)))

    @property
    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    def scaled(self, factor) -> "LatticeSpec":
        """The lattice ``factor * X``; stays exact for rational factors."""
        if isinstance(factor, (int, Fraction)) and self.is_exact:
            f = Fraction(factor)
            if f <= 0:
                raise DomainError("scale factor must be positive")
            m = self.int_matrix.astype(object) * f.numerator
            return _exact_lattice(m, self.denominator * f.denominator, self.kind,
                                  dict(self.params, scale=str(f)))
        f = float(factor)
        if f <= 0:
            raise DomainError("scale factor must be positive")
        return LatticeSpec(self.matrix * f, None, 1, self.kind, dict(self.params, scale=f))

    def vectors(self, coeffs) -> np.ndarray:
        """Lattice vectors ``T k`` (float) for coefficient rows ``k``."""
        return np.asarray(coeffs) @ self.matrix.T


def _exact_lattice(int_matrix, denominator: int, kind: str, params: dict) -> LatticeSpec:
    m = np.array(int_matrix, dtype=object)
    g = math.gcd(denominator, *[int(v) for v in m.ravel()])
    if g > 1:
        m = m // g
        denominator //= g
    m64 = np.array(m.tolist(), dtype=np.int64)
    return LatticeSpec(m64 / denominator, m64, int(denominator), kind, params)


def _exact_det(m) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [[int(v) for v in row] for row in np.asarray(m).tolist()]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rank(rows) -> int:
    """Exact rank of a list of integer vectors."""
    mat = [[Fraction(int(v)) for v in r] for r in rows]
    rank = 0
    if not mat:
        return 0
    ncols = len(mat[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col] / mat[rank][col]
            if f:
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def generic_lattice(matrix) -> LatticeSpec:
    """Lattice from an arbitrary generator matrix.

    Integer or :class:`Fraction` entries give an exact lattice, anything
    else a float one.
    """
    rows = [list(r) for r in matrix]
    if all(isinstance(v, (int, np.integer, Fraction)) for r in rows for v in r):
        fr = [[Fraction(int(v)) if isinstance(v, np.integer) else Fraction(v) for v in r]
              for r in rows]
        den = math.lcm(*[v.denominator for r in fr for v in r])
        m = [[v.numerator * (den // v.denominator) for v in r] for r in fr]
        return _exact_lattice(m, den, "generic", {})
    return LatticeSpec(np.array(rows, dtype=float), kind="generic")


def integer_lattice(d: int, scale=1) -> LatticeSpec:
    """``scale * Z^d``."""
    if d < 1:
        raise DomainError("dimension must be at least 1")
    base = _exact_lattice(np.eye(d, dtype=np.int64), 1, "integer", {"d": d})
    return base if scale == 1 else base.scaled(scale)


def rank1_lattice(g, N: int) -> LatticeSpec:
    """Rank-1 lattice ``X(g, N) = {k g / N : k in Z} + Z^d``.

    With ``g_1 != 0`` the basis is lower triangular with first column
    ``(1, g_1^{-1} g_2, ..., g_1^{-1} g_d) / N`` (inverse taken mod ``N``)
    and unit vectors elsewhere, so ``|det T| = 1/N``. The ``g_1 = 0`` case,
    which the coprimality condition only allows for ``N = 1``, uses first
    column ``(1, g_2/N, ..., g_d/N)``.
    """
    g = [int(v) for v in g]
    N = int(N)
    if N < 1 or not g:
        raise DomainError("need N >= 1 and a non-empty generating vector")
    for gi in g:
        if math.gcd(gi, N) != 1:
            raise DomainError(f"gcd({gi}, {N}) != 1")
    g = [gi % N for gi in g]
    d = len(g)
    m = np.zeros((d, d), dtype=object)
    if g[0] != 0:
        inv = mod_inverse(g[0], N) if N > 1 else 0
        m[0, 0] = 1
        for j in range(1, d):
            m[j, 0] = (inv * g[j]) % N
            m[j, j] = N
    else:
        m[0, 0] = N
        for j in range(1, d):
            m[j, 0] = g[j]
            m[j, j] = N
    return _exact_lattice(m, N, "rank1", {"g": g, "N": N})


def frolov_polynomial(d: int):
    """Integer coefficients (highest degree first) of ``prod_{j=1}^d (x-2j+1) - 1``."""
    coeffs = [1]
    for j in range(1, d + 1):
        root = 2 * j - 1
        coeffs = [a - root * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    coeffs[-1] -= 1
    return coeffs


def _poly_sign(coeffs, x: float) -> int:
    xf = Fraction(x)
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * xf + c
    return (acc > 0) - (acc < 0)


def frolov_roots(d: int, tol: float = 1e-14) -> np.ndarray:
    """The ``d`` real roots of the Frolov polynomial, by bisection.

    Signs are evaluated exactly (floats are rationals), so each returned
    root is certified to lie within ``tol`` of a true root, up to the
    resolution of binary64 near that root.
    """
    coeffs = frolov_polynomial(d)
    # every root lies within distance 1 of an odd integer in [1, 2d-1]
    grid = np.arange(-0.5, 2 * d + 0.5 + 1e-9, 1.0 / 16.0)
    signs = [_poly_sign(coeffs, float(x)) for x in grid]
    brackets = []
    for i in range(len(grid) - 1):
        if signs[i] == 0:
            brackets.append((float(grid[i]), float(grid[i])))
        elif signs[i] * signs[i + 1] < 0:
            brackets.append((float(grid[i]), float(grid[i + 1])))
    if len(brackets) != d:
        raise ResourceError(f"found {len(brackets)} sign changes, expected {d}")
    roots = []
    for lo, hi in brackets:
        s_lo = _poly_sign(coeffs, lo)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            s_mid = _poly_sign(coeffs, mid)
            if s_mid == 0:
                lo = hi = mid
                break
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return np.array(roots)


def frolov_matrix(d: int) -> LatticeSpec:
    """Vandermonde generator matrix over the roots of the Frolov polynomial.

    Row ``i`` is ``(1, xi_i, xi_i**2, ..., xi_i**(d-1))``. The polynomial is
    irreducible with ``d`` real roots, which makes the lattice admissible.
    """
    if not 2 <= d <= 4:
        raise DomainError("Frolov lattices are supported for 2 <= d <= 4")
    roots = frolov_roots(d)
    t = np.vander(roots, d, increasing=True)
    return LatticeSpec(t, kind="frolov", params={"d": d, "roots": roots.tolist()})


# ---------------------------------------------------------------------------
# enumeration


def _box_count(lo, hi) -> int:
    return int(np.prod([max(int(h) - int(l) + 1, 0) for l, h in zip(lo, hi)], dtype=object))


def _iter_box(lo, hi, budget: int):
    """Yield coefficient rows of the integer box ``lo <= k <= hi`` in chunks."""
    lo = [int(v) for v in lo]
    hi = [int(v) for v in hi]
    total = _box_count(lo, hi)
    if total == 0:
        return
    if total > budget:
        raise ResourceError(f"enumeration box has {total} points, budget is {budget}")
    d = len(lo)
    rest = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo[1:], hi[1:])]
    if rest:
        tail = np.stack(np.meshgrid(*rest, indexing="ij"), axis=-1).reshape(-1, d - 1)
    else:
        tail = np.zeros((1, 0), dtype=np.int64)
    per_chunk = max(1, _CHUNK // max(len(tail), 1))
    for start in range(lo[0], hi[0] + 1, per_chunk):
        heads = np.arange(start, min(start + per_chunk, hi[0] + 1), dtype=np.int64)
        k = np.empty((len(heads) * len(tail), d), dtype=np.int64)
        k[:, 0] = np.repeat(heads, len(tail))
        k[:, 1:] = np.tile(tail, (len(heads), 1))
        yield k


def _norm_units(v: np.ndarray, p: float) -> np.ndarray:
    """Norm in internal units; squared for p = 2 so integers stay integers."""
    if p == math.inf:
        return np.abs(v).max(axis=1)
    if p == 1.0:
        return np.abs(v).sum(axis=1)
    return (v * v).sum(axis=1)


def _radius_units(L: LatticeSpec, r: float, p: float) -> float:
    scale = L.denominator if L.is_exact else 1.0
    r = r * scale
    return r * r if p == 2.0 else r


def _length(L: LatticeSpec, units, p: float):
    """Convert an internal norm value to a length (exact when possible)."""
    if L.is_exact:
        units = int(units)
        if p == 2.0:
            root = math.isqrt(units)
            if root * root == units:
                return Fraction(root, L.denominator)
            return math.sqrt(units) / L.denominator
        return Fraction(units, L.denominator)
    units = float(units)
    return math.sqrt(units) if p == 2.0 else units


def lattice_vectors(L: LatticeSpec, p, radius: float, budget: int = DEFAULT_BUDGET):
    """All nonzero lattice vectors with ``||T k||_p <= radius``.

    Returns ``(coeffs, units)`` where ``units`` is the norm in internal
    units (scaled by the denominator; squared for ``p = 2``).
    """
    p = parse_norm(p)
    # |x_j| <= ||x||_p <= r, so |k_i| <= r * ||row_i(T^-1)||_1
    bound = np.floor(radius * np.abs(L.inverse).sum(axis=1) * (1 + 1e-9) + 1e-9)
    bound = bound.astype(np.int64)
    limit = _radius_units(L, radius, p)
    ks, vals = [], []
    for k in _iter_box(-bound, bound, budget):
        v = k @ L.int_matrix.T if L.is_exact else k @ L.matrix.T
        u = _norm_units(v, p)
        mask = (u <= limit) & np.any(k != 0, axis=1)
        ks.append(k[mask])
        vals.append(u[mask])
    if not ks:
        return np.zeros((0, L.d), dtype=np.int64), np.zeros(0)
    return np.concatenate(ks), np.concatenate(vals)


def _canonical_sign(k: np.ndarray) -> np.ndarray:
    """Flip rows so that their first nonzero entry is positive."""
    first = np.argmax(k != 0, axis=1)
    sign = np.sign(k[np.arange(len(k)), first])
    sign[sign == 0] = 1
    return k * sign[:, None]


def _lex_order(k: np.ndarray) -> np.ndarray:
    return np.lexsort(k.T[::-1])


class ShortVector(NamedTuple):
    coeffs: tuple
    vector: np.ndarray
    length: object


class SuccessiveMinima(NamedTuple):
    p: float
    values: tuple
    witnesses: tuple
    vectors: np.ndarray


def _ties(units: np.ndarray, best, exact: bool) -> np.ndarray:
    if exact:
        return units == best
    return units <= best * (1 + 1e-12) + 1e-300


def shortest_vector(L: LatticeSpec, p="inf", budget: int = DEFAULT_BUDGET) -> ShortVector:
    """A nonzero lattice vector of minimal ``p``-norm.

    The search radius starts at ``|det T|**(1/d)`` and doubles until a
    vector is found. Among minimal vectors the returned one has the
    lexicographically smallest coefficient vector ``k`` whose first nonzero
    entry is positive.
    """
    p = parse_norm(p)
    r = float(L.det_abs) ** (1.0 / L.d)
    for _ in range(64):
        k, units = lattice_vectors(L, p, r, budget)
        if len(k):
            best = units.min()
            cand = _canonical_sign(k[_ties(units, best, L.is_exact)])
            pick = cand[_lex_order(cand)[0]]
            return ShortVector(tuple(int(v) for v in pick), L.vectors(pick), _length(L, best, p))
        r *= 2.0
    raise ResourceError("no lattice vector found while doubling the radius")


def successive_minima(L: LatticeSpec, p="inf", budget: int = DEFAULT_BUDGET) -> SuccessiveMinima:
    """Successive minima ``lambda_1 <= ... <= lambda_d`` with witnesses.

    Enumerates every vector up to a doubling radius and greedily keeps the
    shortest linearly independent ones; by the exchange property of linear
    independence this attains every minimum.
    """
    p = parse_norm(p)
    d = L.d
    if d > 4:
        raise DomainError("successive minima are only enumerated for d <= 4")
    r = float(L.det_abs) ** (1.0 / d)
    for _ in range(64):
        k, units = lattice_vectors(L, p, r, budget)
        if len(k):
            k = _canonical_sign(k)
            k, idx = np.unique(k, axis=0, return_index=True)
            units = units[idx]
            order = np.lexsort(tuple(k.T[::-1]) + (units,))
            chosen, values = [], []
            for i in order:
                if _rank(chosen + [k[i].tolist()]) > len(chosen):
                    chosen.append(k[i].tolist())
                    values.append(units[i])
                    if len(chosen) == d:
                        break
            if len(chosen) == d:
                coeffs = np.array(chosen, dtype=np.int64)
                return SuccessiveMinima(
                    p,
                    tuple(_length(L, v, p) for v in values),
                    tuple(tuple(c) for c in chosen),
                    L.vectors(coeffs),
                )
        r *= 2.0
    raise ResourceError("could not find d independent vectors while doubling the radius")


def lattice_covering_upper(L: LatticeSpec, p="inf", budget: int = DEFAULT_BUDGET):
    """Upper bound ``(1/2) * sum_j lambda_j`` for the covering radius of the lattice."""
    mins = successive_minima(L, p, budget)
    return sum(mins.values) / 2


def lattice_mesh_ratio_upper(L: LatticeSpec, p="inf", budget: int = DEFAULT_BUDGET):
    """Upper bound ``sum_j lambda_j / lambda_1`` for the mesh ratio of the lattice."""
    mins = successive_minima(L, p, budget)
    return sum(mins.values) / mins.values[0]


def shortest_vector_2d_cf(g: int, N: int):
    """Shortest sup-norm vector of ``X((1, g), N)`` from the convergents of ``g/N``.

    For ``q_j <= t < q_{j+1}`` no vector ``(t/N, t g/N - u)`` is shorter than
    the one built from the ``j``-th convergent, so the candidates are the
    convergent vectors plus the integer vectors of length one.

    Returns ``(vector, length)`` with exact :class:`Fraction` entries.
    """
    g, N = int(g), int(N)
    if N < 1 or math.gcd(g, N) != 1:
        raise DomainError(f"need gcd(g, N) = 1, got g={g}, N={N}")
    best_vec, best = (Fraction(0), Fraction(1)), Fraction(1)
    g %= N
    if N == 1:
        return best_vec, best
    for conv in convergents(cf_expand_rational(g, N)):
        if not 1 <= conv.q < N:
            continue
        vec = (Fraction(conv.q, N), Fraction(conv.q * g - conv.p * N, N))
        length = max(abs(vec[0]), abs(vec[1]))
        if length < best:
            best_vec, best = vec, length
    return best_vec, best


# ---------------------------------------------------------------------------
# dual lattice of rank-1 lattices


@lru_cache(maxsize=256)
def _l1_sphere(d: int, s: int) -> np.ndarray:
    """All integer vectors of dimension ``d`` with l1 norm exactly ``s``."""
    if s == 0:
        return np.zeros((1, d), dtype=np.int64)
    parts = []
    for bars in itertools.combinations(range(s + d - 1), d - 1):
        edges = (-1,) + bars + (s + d - 1,)
        parts.append([edges[i + 1] - edges[i] - 1 for i in range(d)])
    parts = np.array(parts, dtype=np.int64)
    signs = np.array(list(itertools.product((1, -1), repeat=d)), dtype=np.int64)
    out = (parts[:, None, :] * signs[None, :, :]).reshape(-1, d)
    out = np.unique(out, axis=0)
    out.setflags(write=False)
    return out


class DualVector(NamedTuple):
    h: tuple
    value: object
    squared: int


def dual_shortest(g, N: int, norm="1", budget: int = DEFAULT_BUDGET) -> DualVector:
    """Shortest nonzero ``h`` with ``g . h = 0 (mod N)``, in l1 or l2.

    Shells ``||h||_1 = s`` are scanned in increasing ``s``. The l1 value is
    the enhanced trigonometric degree; the l2 value is the reciprocal of the
    spectral test. No coprimality is required, which lets the generator
    search score every ``g``.
    """
    p = parse_norm(norm)
    if p == math.inf:
        raise DomainError("dual search supports the l1 and l2 norms")
    g = np.array([int(v) for v in g], dtype=np.int64)
    N = int(N)
    if N < 1 or g.size == 0:
        raise DomainError("need N >= 1 and a non-empty generating vector")
    d = len(g)
    best, best_h, spent = None, None, 0
    s = 0
    while True:
        s += 1
        if p == 1.0 and best is not None:
            break
        if p == 2.0 and best is not None and s * s > d * best:
            break
        shell = _l1_sphere(d, s)
        spent += len(shell)
        if spent > budget:
            raise ResourceError(f"dual enumeration exceeded budget {budget}")
        hits = shell[(shell @ g) % N == 0]
        if not len(hits):
            continue
        score = np.abs(hits).sum(axis=1) if p == 1.0 else (hits * hits).sum(axis=1)
        top = score.min()
        if best is None or top < best:
            cand = _canonical_sign(hits[score == top])
            best, best_h = int(top), cand[_lex_order(cand)[0]]
        elif top == best:
            cand = _canonical_sign(np.vstack([hits[score == top], best_h[None, :]]))
            best_h = cand[_lex_order(cand)[0]]
    h = tuple(int(v) for v in best_h)
    sq = int(sum(v * v for v in h))
    value = best if p == 1.0 else math.sqrt(best)
    return DualVector(h, value, sq)


# ---------------------------------------------------------------------------
# point sets and admissibility


class Admissibility(NamedTuple):
    minimum: float
    coeffs: tuple
    vector: np.ndarray
    zero_coordinate_vectors: int


def admissibility_min_normform(L: LatticeSpec, R: float, budget: int = DEFAULT_BUDGET) -> Admissibility:
    """Smallest ``prod_j |x_j|`` over nonzero lattice vectors with ``||x||_inf <= R``.

    Vectors with a zero coordinate contribute 0 and are counted in
    ``zero_coordinate_vectors``. Ties are broken by the shorter vector, then
    by canonical coefficient order.
    """
    if R <= 0:
        raise DomainError("radius must be positive")
    k, _ = lattice_vectors(L, math.inf, R, budget)
    if not len(k):
        raise DomainError(f"no nonzero lattice vector within radius {R}")
    if L.is_exact:
        v_int = k @ L.int_matrix.T
        zero = np.any(v_int == 0, axis=1)
        prod = np.prod(np.abs(v_int / L.denominator), axis=1)
        prod[zero] = 0.0
    else:
        v = k @ L.matrix.T
        zero = np.any(v == 0.0, axis=1)
        prod = np.prod(np.abs(v), axis=1)
    best = prod.min()
    tie = prod <= best * (1 + 1e-9) if best > 0 else prod == 0
    cand = _canonical_sign(k[tie])
    cand = np.unique(cand, axis=0)
    lengths = np.abs(L.vectors(cand)).max(axis=1)
    order = np.lexsort(tuple(cand.T[::-1]) + (np.round(lengths, 12),))
    pick = cand[order[0]]
    return Admissibility(float(best), tuple(int(x) for x in pick), L.vectors(pick), int(zero.sum()))


def _rational(x):
    if isinstance(x, (int, np.integer, Fraction)):
        return Fraction(x)
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    return None


def enumerate_in_cube(L: LatticeSpec, a=1, delta=None, budget: int = DEFAULT_BUDGET) -> PointSet:
    """The shrunk, shifted lattice ``{(T k - delta) / a} ∩ [0, 1)^d``.

    Exact lattices with rational ``a`` and ``delta`` produce rational point
    sets with exact half-open membership; otherwise membership allows a
    tolerance of ``1e-12`` (coordinates within it of 0 are snapped to 0,
    those within it of 1 are excluded). Points are ordered by coefficient
    vector.
    """
    d = L.d
    delta = [0] * d if delta is None else list(delta)
    if len(delta) != d:
        raise DomainError("shift must have the lattice dimension")
    if float(a) <= 0:
        raise DomainError("scale a must be positive")
    tinv = L.inverse
    af = float(a)
    shift = tinv @ np.array([float(x) for x in delta])
    lo = np.floor(np.minimum(0, af * tinv).sum(axis=1) + shift - 1e-9).astype(np.int64)
    hi = np.ceil(np.maximum(0, af * tinv).sum(axis=1) + shift + 1e-9).astype(np.int64)
    params = {"a": a if isinstance(a, (int, float)) else str(a),
              "delta": [x if isinstance(x, (int, float)) else str(x) for x in delta]}
    params.update({k: v for k, v in L.params.items() if k != "roots"})

    ra = _rational(a)
    rd = [_rational(x) for x in delta]
    if L.is_exact and ra is not None and all(x is not None for x in rd):
        dd = math.lcm(*[x.denominator for x in rd]) if rd else 1
        dn = np.array([int(x * dd) for x in rd], dtype=np.int64)
        den = L.denominator * dd * ra.numerator
        if den >= 1 << 62:
            raise ResourceError("exact coordinates would overflow 64-bit integers")
        rows = []
        count = 0
        for k in _iter_box(lo, hi, budget):
            num = (k @ L.int_matrix.T * dd - dn * L.denominator) * ra.denominator
            keep = np.all((num >= 0) & (num < den), axis=1)
            rows.append(num[keep])
            count += int(keep.sum())
            if count > budget:
                raise ResourceError(f"point count exceeds budget {budget}")
        num = np.concatenate(rows) if rows else np.zeros((0, d), dtype=np.int64)
        if not len(num):
            raise DomainError("no lattice point falls inside the unit cube")
        return PointSet.from_rational(num, den, L.kind, params)

    dvec = np.array([float(x) for x in delta])
    rows = []
    count = 0
    for k in _iter_box(lo, hi, budget):
        x = (k @ L.matrix.T - dvec) / af
        keep = np.all((x > -FLOAT_CUBE_TOL) & (x < 1.0 - FLOAT_CUBE_TOL), axis=1)
        rows.append(x[keep])
        count += int(keep.sum())
        if count > budget:
            raise ResourceError(f"point count exceeds budget {budget}")
    x = np.concatenate(rows) if rows else np.zeros((0, d))
    if not len(x):
        raise DomainError("no lattice point falls inside the unit cube")
    np.maximum(x, 0.0, out=x)
    return PointSet.from_float(x, L.kind, params)
