"""
Scans of rank-1 generating vectors by their primal and dual figures of merit.

For a prime ``N`` a vector ``g`` passes when the enhanced trigonometric
degree of the dual lattice is large and the primal lattice has no short
vector in the l1 norm. Both conditions hold for a positive fraction of all
``g``; :func:`search_generators` reports which ones and that fraction.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources

import numpy as np

from .errors import DomainError, ResourceError
from .generators import gen_rank1
from .lattice import DEFAULT_BUDGET, dual_shortest
from .metrics import mesh_ratio_enclosure, star_discrepancy_exact
from .numtheory import is_prime

__all__ = [
    "SearchConfig",
    "GeneratorRecord",
    "SearchResult",
    "kappa_primal",
    "kappa_dual",
    "search_generators",
    "verify_mesh_bound_via_kappa",
    "counting_bound",
    "count_small_dual",
    "threshold_statistics",
    "auto_thresholds",
    "load_threshold_table",
]

_THRESHOLD_FILE = "search_thresholds.json"


def _primal_l1(g, N: int) -> int:
    """Minimum l1 norm over nonzero integer ``h`` with ``h/N`` in the lattice."""
    k = np.arange(1, N, dtype=np.int64)[:, None]
    r = (k * (np.asarray(g, dtype=np.int64) % N)[None, :]) % N
    best = N
    if len(r):
        best = min(best, int(np.minimum(r, N - r).sum(axis=1).min()))
    return best


def kappa_primal(g, N: int) -> Fraction:
    """``(1/N) * min ||h||_1`` over nonzero ``h`` with ``h/N`` in ``X(g, N)``.

    Lattice vectors are ``(k g + N z)/N``; the minimum runs over signed
    residues of ``k g mod N`` for ``k = 1..N-1`` together with the pure
    integer vectors (``k = 0``), which contribute ``N``.

    >>> kappa_primal((1, 5), 8)
    Fraction(1, 2)
    """
    N = int(N)
    if N < 1:
        raise DomainError("N must be positive")
    g = [int(v) for v in g]
    if not g:
        raise DomainError("empty generating vector")
    if N > DEFAULT_BUDGET:
        raise ResourceError(f"N = {N} exceeds the primal scan budget")
    return Fraction(_primal_l1(g, N), N)


def kappa_dual(g, N: int, budget: int = DEFAULT_BUDGET) -> int:
    """Enhanced trigonometric degree: minimum l1 norm of a nonzero dual vector."""
    return int(dual_shortest(g, N, 1, budget).value)


@dataclass
class SearchConfig:
    """Parameters of a generating-vector scan.

    ``kappa_dual_min`` and ``kappa_primal_min`` are absolute thresholds;
    :func:`auto_thresholds` converts the stored constants ``B'`` and
    ``B''`` into them for a given ``(N, d)``.
    """

    N: int
    d: int = 2
    mode: str = "exhaustive"
    sample_size: int = 1000
    seed: int = 0
    kappa_dual_min: float = 0.0
    kappa_primal_min: float = 0.0
    dstar_max: float | None = None
    include_zero: bool = False
    measure_mesh: bool = False
    budget: int = 1_000_000

    def validate(self) -> None:
        if not is_prime(self.N):
            raise DomainError(f"N = {self.N} must be prime")
        if self.d < 1:
            raise DomainError("d must be at least 1")
        if self.mode not in ("exhaustive", "random"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.mode == "random" and self.sample_size < 1:
            raise DomainError("sample size must be at least 1")
        if self.kappa_dual_min < 0 or self.kappa_primal_min < 0:
            raise DomainError("thresholds must be non-negative")
        if self.dstar_max is not None and self.dstar_max < 0:
            raise DomainError("dstar_max must be non-negative")
        if self.budget < 1:
            raise DomainError("budget must be at least 1")


@dataclass
class GeneratorRecord:
    g: tuple
    kappa_primal: Fraction
    kappa_dual: int
    passed: bool
    dstar: object = None
    rho_hi: float | None = None

    def row(self) -> dict:
        return {
            "g": list(self.g),
            "kappa_primal": float(self.kappa_primal),
            "kappa_dual": self.kappa_dual,
            "dstar": None if self.dstar is None else float(self.dstar),
            "rho_hi": self.rho_hi,
        }


@dataclass
class SearchResult:
    config: SearchConfig
    records: list = field(default_factory=list)
    truncated: bool = False

    @property
    def scanned(self) -> int:
        return len(self.records)

    @property
    def passing(self) -> list:
        return [r for r in self.records if r.passed]

    @property
    def passed(self) -> int:
        return len(self.passing)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.passed, self.scanned) if self.scanned else Fraction(0)

    def summary(self) -> dict:
        cfg = asdict(self.config)
        return {
            "N": self.config.N,
            "d": self.config.d,
            "mode": self.config.mode,
            "scanned": self.scanned,
            "passed": self.passed,
            "fraction": float(self.fraction),
            "fraction_exact": str(self.fraction),
            "truncated": self.truncated,
            "thresholds": {
                "kappa_dual_min": cfg["kappa_dual_min"],
                "kappa_primal_min": cfg["kappa_primal_min"],
                "dstar_max": cfg["dstar_max"],
            },
        }


def _candidates(cfg: SearchConfig):
    lo = 0 if cfg.include_zero else 1
    if cfg.mode == "exhaustive":
        return itertools.product(range(lo, cfg.N), repeat=cfg.d)
    rng = np.random.default_rng(cfg.seed)
    draws = rng.integers(lo, cfg.N, size=(cfg.sample_size, cfg.d))
    return (tuple(int(v) for v in row) for row in draws)


def search_generators(cfg: SearchConfig) -> SearchResult:
    """Score generating vectors in lexicographic order (or a seeded sample).

    Star discrepancy and mesh ratio are only computed for vectors that pass
    both kappa thresholds. When the scan would exceed ``cfg.budget``
    vectors, it stops there and the result is flagged ``truncated``.
    """
    cfg.validate()
    result = SearchResult(cfg)
    for count, g in enumerate(_candidates(cfg)):
        if count >= cfg.budget:
            result.truncated = True
            break
        kp = kappa_primal(g, cfg.N)
        kd = kappa_dual(g, cfg.N)
        ok = kd >= cfg.kappa_dual_min and kp >= cfg.kappa_primal_min
        rec = GeneratorRecord(tuple(g), kp, kd, ok)
        if ok and (cfg.dstar_max is not None or cfg.measure_mesh) and all(g):
            P = gen_rank1(g, cfg.N)
            if cfg.dstar_max is not None:
                rec.dstar = star_discrepancy_exact(P)
                rec.passed = rec.dstar <= cfg.dstar_max
            if cfg.measure_mesh:
                rec.rho_hi = mesh_ratio_enclosure(P, "inf")[1]
        elif ok and cfg.dstar_max is not None:
            # a zero coordinate collapses the set onto a face; never uniform
            rec.passed = False
        result.records.append(rec)
    return result


def verify_mesh_bound_via_kappa(g, N: int, p="inf", m_grid: int | None = None) -> dict:
    """Kappa figures next to the measured mesh ratio of ``P(g, N)``."""
    kp = kappa_primal(g, N)
    kd = kappa_dual(g, N)
    lo, hi = mesh_ratio_enclosure(gen_rank1(g, N), p, m_grid)
    return {
        "g": [int(v) for v in g],
        "N": int(N),
        "kappa_primal": kp,
        "kappa_dual": kd,
        "product_reciprocal": 1 / (kp * kd),
        "rho_lo": lo,
        "rho_hi": hi,
    }


def counting_bound(N: int, d: int, kappa: int) -> int:
    """``N**(d-1) * 2**d * binom(kappa + d, d)``: bound on ``#{g : kappa_dual(g) <= kappa}``."""
    return N ** (d - 1) * 2 ** d * math.comb(kappa + d, d)


def count_small_dual(N: int, d: int, kappa: int) -> int:
    """Number of ``g`` in ``{0..N-1}^d`` with ``kappa_dual(g) <= kappa``."""
    return sum(kappa_dual(g, N) <= kappa for g in itertools.product(range(N), repeat=d))


# ---------------------------------------------------------------------------
# thresholds


def threshold_statistics(N: int, d: int, quantile: float = 0.5) -> dict:
    """Quantiles of ``kappa_dual / N**(1/d)`` and ``kappa_primal * N**(1/d)``.

    Computed over the exhaustive scan of ``g`` in ``{1..N-1}^d``. These are
    the scale-free constants stored in the threshold table.
    """
    res = search_generators(SearchConfig(N=N, d=d, budget=(N - 1) ** d))
    scale = N ** (1.0 / d)
    dual = np.array([r.kappa_dual for r in res.records], dtype=float) / scale
    primal = np.array([float(r.kappa_primal) for r in res.records]) * scale
    return {
        "N": N,
        "d": d,
        "quantile": quantile,
        "B_dual": float(np.quantile(dual, quantile, method="lower")),
        "B_primal": float(np.quantile(primal, quantile, method="lower")),
    }


def load_threshold_table() -> dict:
    text = resources.files("qups").joinpath("data").joinpath(_THRESHOLD_FILE).read_text()
    return json.loads(text)


def auto_thresholds(N: int, d: int) -> tuple[float, float]:
    """``(kappa_dual_min, kappa_primal_min)`` from the stored constants.

    The stored values were taken at a reference ``N``; rescaling by
    ``N**(1/d)`` gives thresholds of the same relative strength at other
    ``N``. Thresholds are widened by a relative 1e-9 so that the reference
    scan reproduces its own quantiles despite rounding.
    """
    table = load_threshold_table()
    key = str(d)
    if key not in table["dims"]:
        raise DomainError(f"no stored thresholds for d={d}")
    entry = table["dims"][key]
    scale = N ** (1.0 / d)
    slack = 1 - 1e-9
    return entry["B_dual"] * scale * slack, entry["B_primal"] / scale * slack
