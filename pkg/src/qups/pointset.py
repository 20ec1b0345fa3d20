"""Point sets in the half-open unit cube, exact or binary64."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np

from .errors import DomainError

__all__ = ["PointSet"]

_MAX_DENOMINATOR = 1 << 62


@dataclass(frozen=True, eq=False)
class PointSet:
    """N points in ``[0, 1)^d``.

    Rational point sets store integer numerators over one common
    denominator (always reduced so that the numerators and the denominator
    share no factor). Float point sets store binary64 coordinates only.

    Parameters
    ----------
    coords : ndarray, shape (N, d)
        Float coordinates. For rational sets this is ``numerators / denominator``.
    numerators : ndarray of int64 or None
        Exact numerators, rational representation only.
    denominator : int or None
        Common denominator, rational representation only.
    family : str
        Name of the construction that produced the set.
    params : dict
        Construction parameters, echoed into reports.
    """

    coords: np.ndarray
    numerators: np.ndarray | None = None
    denominator: int | None = None
    family: str = "custom"
    params: dict = field(default_factory=dict)

    @classmethod
    def from_rational(cls, numerators, denominator: int, family: str = "custom",
                      params: dict | None = None) -> "PointSet":
        num = np.asarray(numerators, dtype=np.int64)
        if num.ndim == 1:
            num = num[:, None]
        den = int(denominator)
        if num.ndim != 2 or num.shape[0] < 1 or num.shape[1] < 1:
            raise DomainError("point set must contain at least one point of dimension >= 1")
        if den < 1 or den >= _MAX_DENOMINATOR:
            raise DomainError(f"denominator {den} out of range")
        if num.min() < 0 or num.max() >= den:
            raise DomainError("rational coordinates must lie in [0, 1)")
        g = reduce(math.gcd, np.unique(num).tolist(), den)
        if g > 1:
            num = num // g
            den //= g
        num.setflags(write=False)
        coords = num / den
        coords.setflags(write=False)
        return cls(coords, num, den, family, dict(params or {}))

    @classmethod
    def from_float(cls, coords, family: str = "custom", params: dict | None = None) -> "PointSet":
        x = np.array(coords, dtype=float)
        if x.ndim == 1:
            x = x[:, None]
        if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
            raise DomainError("point set must contain at least one point of dimension >= 1")
        if not np.all(np.isfinite(x)) or x.min() < 0.0 or x.max() >= 1.0:
            raise DomainError("float coordinates must lie in [0, 1)")
        x.setflags(write=False)
        return cls(x, None, None, family, dict(params or {}))

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def d(self) -> int:
        return self.coords.shape[1]

    @property
    def is_rational(self) -> bool:
        return self.numerators is not None

    @property
    def representation(self) -> str:
        return "rat" if self.is_rational else "f64"

    def __len__(self) -> int:
        return self.n

    def rows(self) -> list[tuple]:
        """Points as tuples of :class:`Fraction` (rational) or float."""
        if self.is_rational:
            den = self.denominator
            return [tuple(Fraction(int(v), den) for v in row) for row in self.numerators]
        return [tuple(float(v) for v in row) for row in self.coords]

    def prefix(self, count: int) -> "PointSet":
        """The first ``count`` points, keeping the construction order."""
        if not 1 <= count <= self.n:
            raise DomainError(f"prefix length {count} outside 1..{self.n}")
        params = dict(self.params, prefix=count)
        if self.is_rational:
            return PointSet.from_rational(self.numerators[:count], self.denominator,
                                          self.family, params)
        return PointSet.from_float(self.coords[:count], self.family, params)

    def select(self, columns, dedup: bool = False) -> "PointSet":
        """Restrict to the given (0-based) coordinate columns."""
        cols = [int(c) for c in columns]
        params = dict(self.params, projection=cols)
        if self.is_rational:
            num = self.numerators[:, cols]
            if dedup:
                num = np.unique(num, axis=0)
            return PointSet.from_rational(num, self.denominator, self.family, params)
        x = self.coords[:, cols]
        if dedup:
            x = np.unique(x, axis=0)
        return PointSet.from_float(x, self.family, params)

    def __repr__(self) -> str:
        return f"PointSet(family={self.family!r}, n={self.n}, d={self.d}, repr={self.representation})"
