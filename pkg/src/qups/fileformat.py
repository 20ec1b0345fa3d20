"""
Text format for point sets.

::

    # optional comment lines
    qups 1 <d> <N> <rat|f64>
    <d fields>          (N data lines)

``rat`` fields are ``numerator/denominator`` in lowest terms; ``f64``
fields are decimals with 17 significant digits, so parsing recovers the
exact binary64 values. Comment lines (``#``) may appear anywhere; the
writer emits ``# family <name>`` and ``# params <json>`` comments that the
reader uses to restore provenance.
"""

from __future__ import annotations

import io
import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import DomainError
from .pointset import PointSet

__all__ = ["FormatError", "dumps", "loads", "write_pointset", "read_pointset"]

MAGIC = "qups"
VERSION = 1


class FormatError(DomainError):
    """Malformed point-set file."""


def dumps(P: PointSet, comments: list[str] | None = None) -> str:
    """Serialize ``P``; identical inputs give identical text."""
    buf = io.StringIO()
    for line in comments or []:
        buf.write(f"# {line}\n")
    buf.write(f"# family {P.family}\n")
    buf.write(f"# params {json.dumps(P.params, sort_keys=True, default=str)}\n")
    buf.write(f"{MAGIC} {VERSION} {P.d} {P.n} {P.representation}\n")
    if P.is_rational:
        den = P.denominator
        for row in P.numerators.tolist():
            fields = []
            for v in row:
                g = math.gcd(v, den)
                fields.append(f"{v // g}/{den // g}")
            buf.write(" ".join(fields) + "\n")
    else:
        for row in P.coords.tolist():
            buf.write(" ".join(f"{v:.16e}" for v in row) + "\n")
    return buf.getvalue()


def _parse_header(line: str, lineno: int):
    parts = line.split()
    if len(parts) != 5 or parts[0] != MAGIC:
        raise FormatError(f"line {lineno}: expected header 'qups 1 <d> <N> <rat|f64>'")
    if parts[1] != str(VERSION):
        raise FormatError(f"line {lineno}: unsupported format version {parts[1]}")
    try:
        d, n = int(parts[2]), int(parts[3])
    except ValueError:
        raise FormatError(f"line {lineno}: d and N must be integers") from None
    if d < 1 or n < 1:
        raise FormatError(f"line {lineno}: d and N must be positive")
    if parts[4] not in ("rat", "f64"):
        raise FormatError(f"line {lineno}: representation must be rat or f64")
    return d, n, parts[4]


def loads(text: str, family: str = "file") -> PointSet:
    """Parse a point set written by :func:`dumps`."""
    header = None
    rows = []
    params = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("# family "):
            family = line[9:].strip() or family
        elif line.startswith("# params "):
            try:
                params = json.loads(line[9:])
            except json.JSONDecodeError:
                params = {}
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        fields = line.split()
        if len(fields) != header[0]:
            raise FormatError(f"line {lineno}: expected {header[0]} fields, got {len(fields)}")
        rows.append((lineno, fields))
    if header is None:
        raise FormatError("missing header line")
    d, n, rep = header
    if len(rows) != n:
        raise FormatError(f"header declares N={n} but {len(rows)} data lines follow")
    if rep == "rat":
        return _load_rational(rows, family, params)
    try:
        x = np.array([[float(v) for v in f] for _, f in rows], dtype=float)
    except ValueError as exc:
        raise FormatError(f"bad float field: {exc}") from None
    if not np.all(np.isfinite(x)) or x.min() < 0 or x.max() >= 1:
        raise FormatError("f64 coordinates must lie in [0, 1)")
    return PointSet.from_float(x, family, params)


def _load_rational(rows, family: str, params: dict) -> PointSet:
    values = []
    for lineno, fields in rows:
        row = []
        for f in fields:
            num, sep, den = f.partition("/")
            try:
                fr = Fraction(int(num), int(den)) if sep else Fraction(int(num))
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"line {lineno}: bad rational field {f!r}") from None
            if sep and math.gcd(int(num), int(den)) != 1 and int(num) != 0:
                raise FormatError(f"line {lineno}: {f} is not in lowest terms")
            if not 0 <= fr < 1:
                raise FormatError(f"line {lineno}: {f} outside [0, 1)")
            row.append(fr)
        values.append(row)
    den = math.lcm(*(v.denominator for row in values for v in row))
    num = [[v.numerator * (den // v.denominator) for v in row] for row in values]
    return PointSet.from_rational(num, den, family, params)


def write_pointset(P: PointSet, path, comments: list[str] | None = None) -> None:
    Path(path).write_text(dumps(P, comments))


def read_pointset(path, family: str = "file") -> PointSet:
    return loads(Path(path).read_text(), family)
