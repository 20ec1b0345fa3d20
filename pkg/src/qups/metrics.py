"""
Quasi-uniformity and discrepancy measurements on point sets.

Separation radii are exact for rational point sets: the closest pair is
searched on the integer numerators, and the result is returned as a
:class:`~fractions.Fraction` (for the l2 norm only when the squared
distance is a perfect square; otherwise a float). Covering radii over the
closed cube are enclosed between a grid evaluation and that value plus the
half-diameter of a grid cell.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .errors import DomainError, ResourceError
from .lattice import dual_shortest, parse_norm
from .pointset import PointSet

__all__ = [
    "CoveringEnclosure",
    "QUReport",
    "PrefixProfile",
    "closest_pair_bruteforce",
    "separation_radius",
    "covering_radius_enclosure",
    "mesh_ratio_enclosure",
    "default_grid_resolution",
    "star_discrepancy_exact",
    "star_discrepancy_lb",
    "project",
    "qu_report",
    "profile_prefixes",
    "nestedness_check",
]

GRID_BUDGET = 20_000_000
STAR_BUDGET = 20_000_000
NEST_TOL = 1e-12
_BRUTE_MAX = 256
_PAIR_CHUNK = 1 << 21


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("QUPS_WORKERS", "1")))
    except ValueError:
        return 1


def _units(P: PointSet) -> np.ndarray:
    return P.numerators if P.is_rational else P.coords


def _pair_norms(a: np.ndarray, b: np.ndarray, p: float) -> np.ndarray:
    diff = a - b
    if p == math.inf:
        return np.abs(diff).max(axis=1)
    if p == 1.0:
        return np.abs(diff).sum(axis=1)
    return (diff * diff).sum(axis=1)


def closest_pair_bruteforce(X: np.ndarray, p: float):
    """Minimum pairwise distance (squared for ``p = 2``) by scanning all pairs."""
    best = None
    for i in range(len(X) - 1):
        top = _pair_norms(X[i + 1:], X[i][None, :], p).min()
        best = top if best is None else min(best, top)
    return best


def _closest_pair_grid(X: np.ndarray, p: float, span):
    """Closest-pair distance via a uniform cell grid.

    Points are bucketed into cubes of side ``c`` and only pairs in
    neighbouring cells are compared. Any pair at distance ``<= c`` differs by
    at most one cell per axis, so a minimum ``<= c`` found this way is the
    global one; otherwise ``c`` doubles and the grid is rebuilt.
    """
    n, d = X.shape
    exact = np.issubdtype(X.dtype, np.integer)
    cell = span / max(1.0, n ** (1.0 / d))
    if exact:
        cell = max(1, int(cell))
    offsets = np.array(np.meshgrid(*[[-1, 0, 1]] * d, indexing="ij")).reshape(d, -1).T
    # half of the neighbourhood suffices; the zero offset is handled separately
    positive = [o for o in offsets if tuple(o) > (0,) * d]
    while True:
        cells = X // cell if exact else np.floor(X / cell).astype(np.int64)
        cells = cells.astype(np.int64) + 1
        width = int(cells.max()) + 2
        weights = width ** np.arange(d, dtype=np.int64)
        ids = cells @ weights
        order = np.argsort(ids, kind="stable")
        sorted_ids = ids[order]
        best = None
        for off in [np.zeros(d, dtype=np.int64)] + positive:
            target = ids + int(off @ weights)
            lo = np.searchsorted(sorted_ids, target, side="left")
            hi = np.searchsorted(sorted_ids, target, side="right")
            counts = hi - lo
            total = int(counts.sum())
            if total == 0:
                continue
            if total > 50 * _PAIR_CHUNK:
                raise ResourceError("cell grid degenerated; too many candidate pairs")
            src = np.repeat(np.arange(n), counts)
            pos = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            dst = order[np.repeat(lo, counts) + pos]
            if not off.any():
                keep = src < dst
                src, dst = src[keep], dst[keep]
                if not len(src):
                    continue
            vals = _pair_norms(X[src], X[dst], p)
            top = vals.min()
            best = top if best is None else min(best, top)
        limit = cell * cell if p == 2.0 else cell
        if best is not None and best <= limit:
            return best
        if cell >= span:
            return best
        cell = cell * 2


def _half_length(value, scale, p: float, exact: bool):
    """Half of a distance given in internal units (squared for l2)."""
    if exact:
        value = int(value)
        if p == 2.0:
            root = math.isqrt(value)
            if root * root == value:
                return Fraction(root, 2 * scale)
            return math.sqrt(value) / (2 * scale)
        return Fraction(value, 2 * scale)
    value = float(value)
    return (math.sqrt(value) if p == 2.0 else value) / 2


def separation_radius(P: PointSet, p="inf", method: str = "auto"):
    """Half the minimum pairwise ``p``-distance within ``P``.

    ``method`` is ``"grid"``, ``"brute"`` or ``"auto"`` (brute force for
    small sets).
    """
    p = parse_norm(p)
    if P.n < 2:
        raise DomainError("separation radius needs at least two points")
    X = _units(P)
    if method == "brute" or (method == "auto" and P.n <= _BRUTE_MAX):
        best = closest_pair_bruteforce(X, p)
    else:
        span = P.denominator if P.is_rational else 1.0
        best = _closest_pair_grid(X, p, span)
    return _half_length(best, P.denominator if P.is_rational else 1, p, P.is_rational)


class CoveringEnclosure(NamedTuple):
    lower: float
    upper: float
    resolution: int


def default_grid_resolution(d: int, n: int | None = None) -> int:
    """256 per axis in 2D and 64 in 3D, refined for large point sets.

    In 1D the nodes are cheap, so the grid is made fine enough that the
    enclosure width stays small next to typical gaps.
    """
    base = {1: 4096, 2: 256, 3: 64}.get(d, 16)
    if n is not None and d == 1:
        base = max(base, min(64 * n, GRID_BUDGET - 1))
    elif n is not None and d <= 3:
        base = max(base, 4 * math.ceil(n ** (1.0 / d)))
    return base


def _grid_nodes(d: int, m: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    nodes = np.empty((len(idx), d))
    for j in range(d):
        nodes[:, j] = idx % (m + 1)
        idx //= m + 1
    return nodes / m


def covering_radius_enclosure(P: PointSet, p="inf", m_grid: int | None = None) -> CoveringEnclosure:
    """Enclosure ``lower <= h_p(P; [0,1]^d) <= upper``.

    ``lower`` is the largest distance from a node of the ``(m+1)^d`` grid on
    the closed cube (corners included) to its nearest point. Every point of
    the cube lies within ``d**(1/p) / (2m)`` of a node, which gives ``upper``.
    """
    p = parse_norm(p)
    d = P.d
    m = default_grid_resolution(d, P.n) if m_grid is None else int(m_grid)
    if m < 2:
        raise DomainError("grid resolution must be at least 2")
    total = (m + 1) ** d
    if total > GRID_BUDGET:
        raise ResourceError(f"covering grid has {total} nodes, budget is {GRID_BUDGET}")
    tree = cKDTree(P.coords)
    lower = 0.0
    step = 1 << 20
    for start in range(0, total, step):
        nodes = _grid_nodes(d, m, start, min(start + step, total))
        dist, _ = tree.query(nodes, k=1, p=p, workers=_workers())
        lower = max(lower, float(dist.max()))
    radius = 1.0 if p == math.inf else d ** (1.0 / p)
    return CoveringEnclosure(lower, lower + radius / (2 * m), m)


def mesh_ratio_enclosure(P: PointSet, p="inf", m_grid: int | None = None):
    """``(lower, upper)`` for the mesh ratio: covering enclosure over exact separation."""
    q = float(separation_radius(P, p))
    cov = covering_radius_enclosure(P, p, m_grid)
    return cov.lower / q, cov.upper / q


# ---------------------------------------------------------------------------
# star discrepancy


def _candidate_axes(P: PointSet):
    """Per-axis sorted candidate corners (point coordinates plus 1) and ranks."""
    X = _units(P)
    top = P.denominator if P.is_rational else 1.0
    axes, ranks = [], []
    for j in range(P.d):
        vals, inv = np.unique(X[:, j], return_inverse=True)
        axes.append(np.append(vals, top))
        ranks.append(inv.ravel())
    return axes, np.stack(ranks, axis=1)


def _local_discrepancy(vol_num, open_cnt, closed_cnt, n, scale, exact):
    """max(vol - open/N, closed/N - vol) with ``vol = vol_num / scale``."""
    if exact:
        a = vol_num * n - open_cnt * scale
        b = closed_cnt * scale - vol_num * n
        best = max(int(np.max(a)), int(np.max(b)))
        return Fraction(best, n * scale)
    a = vol_num - open_cnt / n
    b = closed_cnt / n - vol_num
    return float(max(np.max(a), np.max(b)))


def _volume_grid(axes, exact):
    if exact:
        vol = np.array(1, dtype=object)
        for ax in axes:
            vol = np.multiply.outer(vol, ax.astype(object))
        return vol
    vol = np.array(1.0)
    for ax in axes:
        vol = np.multiply.outer(vol, ax)
    return vol


def star_discrepancy_exact(P: PointSet, budget: int = STAR_BUDGET):
    """Exact star discrepancy by critical-box enumeration.

    Every corner ``q`` with ``q_j`` a point coordinate or 1 is visited. Counts
    of points in the open box ``[0, q)`` and the closed box ``[0, q]`` come
    from a cumulative histogram over coordinate ranks. Exact (a
    :class:`Fraction`) for rational point sets.
    """
    if P.d > 3:
        raise ResourceError("exact star discrepancy is limited to d <= 3; use star_discrepancy_lb")
    axes, ranks = _candidate_axes(P)
    shape = tuple(len(ax) for ax in axes)
    cells = int(np.prod(shape, dtype=object))
    if cells > budget:
        raise ResourceError(f"{cells} critical corners exceed budget {budget}")
    hist = np.zeros(shape, dtype=np.int64)
    np.add.at(hist, tuple(ranks.T), 1)
    closed = hist
    for j in range(P.d):
        closed = np.cumsum(closed, axis=j)
    padded = np.pad(closed, [(1, 0)] * P.d)
    open_ = padded[tuple(slice(0, s) for s in shape)]
    exact = P.is_rational
    scale = P.denominator ** P.d if exact else 1
    if exact and P.n * scale < (1 << 62) and max(int(a[-1]) for a in axes) ** P.d < (1 << 62):
        vol = np.ones(shape, dtype=np.int64)
        for j, ax in enumerate(axes):
            vol = vol * ax.reshape([-1 if i == j else 1 for i in range(P.d)])
        a = vol * P.n - open_ * scale
        b = closed * scale - vol * P.n
        return Fraction(int(max(a.max(), b.max())), P.n * scale)
    vol = _volume_grid(axes, exact)
    if exact:
        return _local_discrepancy(vol, open_.astype(object), closed.astype(object), P.n, scale, True)
    return _local_discrepancy(vol, open_, closed, P.n, 1, False)


def star_discrepancy_lb(P: PointSet, trials: int = 10_000, seed: int = 0):
    """Lower bound on the star discrepancy from sampled critical corners.

    When ``trials`` covers the whole corner grid, every corner is evaluated
    and the result is exact. Deterministic for a fixed ``seed``.
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    axes, _ = _candidate_axes(P)
    total = int(np.prod([len(ax) for ax in axes], dtype=object))
    X = _units(P)
    exact = P.is_rational
    if trials >= total:
        idx = np.arange(total, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        idx = None
    best = None
    step = max(1, _PAIR_CHUNK // max(P.n, 1))
    remaining = trials if idx is None else total
    pos = 0
    while remaining > 0:
        batch = min(step, remaining)
        if idx is None:
            corners = np.stack([ax[rng.integers(0, len(ax), batch)] for ax in axes], axis=1)
        else:
            flat = idx[pos:pos + batch]
            cols = []
            for ax in axes:
                cols.append(ax[flat % len(ax)])
                flat = flat // len(ax)
            corners = np.stack(cols, axis=1)
        pos += batch
        remaining -= batch
        below = X[None, :, :] < corners[:, None, :]
        at_most = X[None, :, :] <= corners[:, None, :]
        open_cnt = below.all(axis=2).sum(axis=1)
        closed_cnt = at_most.all(axis=2).sum(axis=1)
        if exact:
            vol = np.prod(corners.astype(object), axis=1)
            val = _local_discrepancy(vol, open_cnt.astype(object), closed_cnt.astype(object),
                                     P.n, P.denominator ** P.d, True)
        else:
            vol = np.prod(corners, axis=1)
            val = _local_discrepancy(vol, open_cnt, closed_cnt, P.n, 1, False)
        best = val if best is None else max(best, val)
    return best


def project(P: PointSet, u: Sequence[int], dedup: bool = False) -> PointSet:
    """Restrict ``P`` to the 0-based coordinates in ``u``.

    The projection keeps duplicate points (a multiset, as discrepancy needs);
    ``dedup=True`` returns the set of distinct points instead, which is what
    separation radii are defined on.
    """
    u = sorted(set(int(j) for j in u))
    if not u:
        raise DomainError("projection needs a non-empty coordinate set")
    if u[0] < 0 or u[-1] >= P.d:
        raise DomainError(f"coordinates {u} out of range for d={P.d}")
    return P.select(u, dedup=dedup)


# ---------------------------------------------------------------------------
# reports and profiles


def _jsonable(v):
    if isinstance(v, Fraction):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    return v


@dataclass
class QUReport:
    """Quasi-uniformity record for one point set."""

    n: int
    d: int
    p: float
    q: object
    h_lo: float
    h_hi: float
    rho_lo: float
    rho_hi: float
    grid: int
    family: str
    params: dict = field(default_factory=dict)
    dstar: object = None
    dstar_exact: bool | None = None
    kappa: int | None = None
    sigma: float | None = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "d": self.d,
            "p": "inf" if self.p == math.inf else int(self.p),
            "q": _jsonable(self.q),
            "h_lo": self.h_lo,
            "h_hi": self.h_hi,
            "rho_lo": self.rho_lo,
            "rho_hi": self.rho_hi,
            "dstar": _jsonable(self.dstar),
            "kappa": self.kappa,
            "sigma": self.sigma,
            "family": self.family,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "grid": self.grid,
        }
        if isinstance(self.q, Fraction):
            out["q_exact"] = str(self.q)
        if isinstance(self.dstar, Fraction):
            out["dstar_exact"] = str(self.dstar)
        if self.dstar is not None:
            out["dstar_is_lower_bound"] = not self.dstar_exact
        return out


def _rank1_params(P: PointSet):
    g, N = P.params.get("g"), P.params.get("N")
    if g is None or N is None or len(g) != P.d or "projection" in P.params or "prefix" in P.params:
        return None
    return g, N


def qu_report(P: PointSet, p="inf", m_grid: int | None = None, discrepancy: bool = False,
              dual: bool = True, lb_trials: int = 20_000) -> QUReport:
    """Separation, covering and mesh-ratio enclosure, plus optional extras.

    Star discrepancy is exact when within budget and otherwise a sampled
    lower bound (flagged in ``dstar_exact``). Dual figures (trigonometric
    degree and spectral test) are added for rank-1 point sets.
    """
    p = parse_norm(p)
    q = separation_radius(P, p)
    cov = covering_radius_enclosure(P, p, m_grid)
    qf = float(q)
    report = QUReport(P.n, P.d, p, q, cov.lower, cov.upper, cov.lower / qf, cov.upper / qf,
                      cov.resolution, P.family, dict(P.params))
    if discrepancy:
        try:
            report.dstar = star_discrepancy_exact(P)
            report.dstar_exact = True
        except ResourceError:
            report.dstar = star_discrepancy_lb(P, lb_trials)
            report.dstar_exact = False
    rank1 = _rank1_params(P) if dual else None
    if rank1 is not None:
        g, N = rank1
        report.kappa = int(dual_shortest(g, N, 1).value)
        report.sigma = 1.0 / dual_shortest(g, N, 2).value
    return report


@dataclass
class PrefixProfile:
    """Reports on a growing family of point sets."""

    indices: list
    reports: list
    growth_ratios: list

    @property
    def max_growth(self) -> float:
        return max(self.growth_ratios) if self.growth_ratios else 1.0

    def column(self, name: str) -> list:
        return [getattr(r, name) for r in self.reports]


def profile_prefixes(family, indices: Sequence[int], p="inf", m_grid: int | None = None,
                     discrepancy: bool = False) -> PrefixProfile:
    """Quasi-uniformity reports along an increasing index list.

    ``family`` is either a :class:`PointSet` in sequence order (profiled on
    its prefixes) or a callable mapping an index to a point set. The grid
    resolution is fixed across all indices (derived from the largest set
    when not given), so covering lower bounds are comparable.
    """
    indices = [int(i) for i in indices]
    if not indices:
        raise DomainError("need at least one index")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise DomainError("indices must be strictly increasing")
    if isinstance(family, PointSet):
        sets = [family.prefix(i) for i in indices]
    elif isinstance(family, Callable):
        sets = [family(i) for i in indices]
    else:
        raise DomainError("family must be a PointSet or a callable")
    if m_grid is None:
        m_grid = default_grid_resolution(sets[-1].d, sets[-1].n)
    reports = [qu_report(s, p, m_grid, discrepancy=discrepancy, dual=False) for s in sets]
    sizes = [s.n for s in sets]
    growth = [b / a for a, b in zip(sizes, sizes[1:])]
    return PrefixProfile(indices, reports, growth)


def nestedness_check(P_small: PointSet, P_big: PointSet, tol: float = NEST_TOL) -> bool:
    """True when every point of ``P_small`` is a point of ``P_big``.

    Rational sets are compared exactly; otherwise within ``tol`` in the
    sup-norm.
    """
    if P_small.d != P_big.d:
        raise DomainError("point sets have different dimensions")
    if P_small.is_rational and P_big.is_rational:
        lcm = math.lcm(P_small.denominator, P_big.denominator)
        small = P_small.numerators.astype(object) * (lcm // P_small.denominator)
        big = P_big.numerators.astype(object) * (lcm // P_big.denominator)
        big_rows = {tuple(r) for r in big.tolist()}
        return all(tuple(r) in big_rows for r in small.tolist())
    tree = cKDTree(P_big.coords)
    dist, _ = tree.query(P_small.coords, k=1, p=math.inf, workers=_workers())
    return bool(np.all(dist <= tol))
