"""Slow, independent reference implementations used by the tests.

Nothing here imports the package's numerical kernels; everything is plain
Python over Fractions and integers.
"""

import itertools
import math
from fractions import Fraction


def trial_division_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def norm(v, p):
    if p == "inf":
        return max(abs(x) for x in v)
    if p == 1:
        return sum(abs(x) for x in v)
    return math.sqrt(sum(float(x) ** 2 for x in v))


def separation_pairs(points, p="inf"):
    """Half the minimum pairwise distance, by scanning every pair."""
    best = None
    for a, b in itertools.combinations(points, 2):
        dist = norm([x - y for x, y in zip(a, b)], p)
        best = dist if best is None or dist < best else best
    return best / 2


def rank1_points(g, N):
    return [tuple(Fraction(k * gi % N, N) for gi in g) for k in range(N)]


def star_discrepancy_boxes(points):
    """D* by testing every critical corner with explicit Fraction counting."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d = len(pts[0])
    n = len(pts)
    axes = [sorted({p[j] for p in pts} | {Fraction(1)}) for j in range(d)]
    best = Fraction(0)
    for q in itertools.product(*axes):
        vol = math.prod(q)
        open_cnt = sum(all(p[j] < q[j] for j in range(d)) for p in pts)
        closed_cnt = sum(all(p[j] <= q[j] for j in range(d)) for p in pts)
        best = max(best, vol - Fraction(open_cnt, n), Fraction(closed_cnt, n) - vol)
    return best


def star_discrepancy_1d(xs):
    """Closed form for d = 1: 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|."""
    xs = sorted(Fraction(x) for x in xs)
    n = len(xs)
    return Fraction(1, 2 * n) + max(abs(x - Fraction(2 * i - 1, 2 * n)) for i, x in enumerate(xs, 1))


def dual_min_box(g, N, p):
    """Minimal l1 (p=1) or squared l2 (p=2) norm of nonzero h with g.h = 0 mod N."""
    d = len(g)
    best = None
    for r in itertools.count(1):
        for h in itertools.product(range(-r, r + 1), repeat=d):
            if not any(h) or sum(a * b for a, b in zip(g, h)) % N:
                continue
            val = sum(abs(x) for x in h) if p == 1 else sum(x * x for x in h)
            best = val if best is None or val < best else best
        # any vector outside the box has l1 > r and l2^2 > r^2
        if best is not None and (best <= r if p == 1 else best <= r * r):
            return best


def primal_l1_box(g, N):
    """min ||h||_1 over nonzero integer h with h/N in X(g, N), by direct search."""
    d = len(g)
    best = N
    rng = range(-(N // 2), N // 2 + 1)
    for h in itertools.product(rng, repeat=d):
        if not any(h):
            continue
        # h/N is a lattice vector iff h = k g (mod N) for some k
        if any(all((k * gi - hi) % N == 0 for gi, hi in zip(g, h)) for k in range(N)):
            best = min(best, sum(abs(x) for x in h))
    return best


def shortest_sup_rank1_2d(g, N):
    """lambda_1 in the sup-norm of X((1, g), N) by scanning k = 1..N-1."""
    best = Fraction(1)
    for k in range(1, N):
        r = k * g % N
        r = min(r, N - r)
        best = min(best, Fraction(max(min(k, N - k), r), N))
    return best


def covering_dense(points, p, m):
    """Max over an (m+1)^d grid of the distance to the nearest point (floats)."""
    d = len(points[0])
    pts = [[float(x) for x in pt] for pt in points]
    best = 0.0
    for node in itertools.product(range(m + 1), repeat=d):
        y = [c / m for c in node]
        best = max(best, min(norm([a - b for a, b in zip(y, pt)], p) for pt in pts))
    return best
