import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qups.errors import DomainError, ResourceError
from qups.generators import (alpha_power2, gen_fibonacci, gen_frolov_points, gen_grid_aniso,
                             gen_grid_regular, gen_kronecker, gen_rank1)
from qups.lattice import frolov_matrix, lattice_covering_upper, rank1_lattice, successive_minima
from qups.metrics import (covering_radius_enclosure, mesh_ratio_enclosure, nestedness_check,
                          profile_prefixes, project, qu_report, separation_radius,
                          star_discrepancy_exact, star_discrepancy_lb)
from qups.pointset import PointSet

from oracles import covering_dense, separation_pairs, star_discrepancy_1d, star_discrepancy_boxes


def rational_sets(max_d=3, max_n=12, den=16):
    return st.integers(1, max_d).flatmap(lambda d: st.lists(
        st.tuples(*[st.integers(0, den - 1)] * d), min_size=2, max_size=max_n, unique=True))


# --- separation -----------------------------------------------------------


def test_separation_examples():
    assert separation_radius(gen_rank1((1, 5), 8), "inf") == Fraction(1, 8)
    for m in (2, 3, 5):
        assert separation_radius(gen_grid_regular(m, 2), "inf") == Fraction(1, 2 * m)
        for p in ("inf", 1, 2):
            assert separation_radius(gen_grid_aniso(m, 2), p) == Fraction(1, 2 * m * m)
    with pytest.raises(DomainError):
        separation_radius(PointSet.from_float([[0.5, 0.5]]))


@settings(max_examples=80, deadline=None)
@given(rational_sets(), st.sampled_from(["inf", 1, 2]))
def test_separation_matches_pairwise(rows, p):
    P = PointSet.from_rational(rows, 16)
    want = separation_pairs(P.rows(), p)
    got = separation_radius(P, p)
    assert float(got) == pytest.approx(float(want), abs=1e-15)
    if p != 2:
        assert got == want


@pytest.mark.parametrize("p", ["inf", 1, 2])
def test_separation_grid_matches_brute(p):
    sets = [gen_fibonacci(17), gen_kronecker(alpha_power2(2), 3000), gen_frolov_points(2, 40),
            gen_kronecker(alpha_power2(3), 2000), gen_grid_aniso(6, 2)]
    for P in sets:
        assert separation_radius(P, p, "grid") == separation_radius(P, p, "brute")


# --- covering -------------------------------------------------------------


def test_covering_examples():
    center = PointSet.from_rational([[1, 1]], 2)
    enc = covering_radius_enclosure(center, "inf", 64)
    assert enc.lower <= 0.5 <= enc.upper and enc.upper - enc.lower <= 1 / 128
    enc = covering_radius_enclosure(gen_grid_regular(2, 2), "inf")
    assert enc.lower <= 0.5 <= enc.upper
    enc = covering_radius_enclosure(gen_fibonacci(6), "inf", 256)
    assert enc.lower <= 0.375 <= enc.upper
    with pytest.raises(ResourceError):
        covering_radius_enclosure(gen_fibonacci(6), "inf", 10**4)


@pytest.mark.parametrize("p", ["inf", 1, 2])
def test_covering_matches_dense_oracle(p):
    P = gen_rank1((1, 3), 7)
    enc = covering_radius_enclosure(P, p, 24)
    assert enc.lower == pytest.approx(covering_dense(P.rows(), p if p == "inf" else int(p), 24), abs=1e-12)
    width = (1 if p == "inf" else 2 ** (1 / int(p))) / 48
    assert enc.upper - enc.lower == pytest.approx(width)


@settings(max_examples=25, deadline=None)
@given(rational_sets(max_d=2, max_n=8), st.sampled_from(["inf", 2]))
def test_covering_enclosures_nest(rows, p):
    P = PointSet.from_rational(rows, 16)
    coarse = covering_radius_enclosure(P, p, 16)
    fine = covering_radius_enclosure(P, p, 64)
    assert coarse.lower <= fine.upper + 1e-12
    assert fine.lower <= coarse.upper + 1e-12
    lo, hi = mesh_ratio_enclosure(P, p, 16)
    assert hi >= 1 - 1e-12


def test_restriction_bounds_on_lattices():
    fixtures = [((1, 5), 8), ((1, 21), 34), ((1, 3), 31), ((1, 12), 29)]
    for g, N in fixtures:
        L = rank1_lattice(g, N)
        P = gen_rank1(g, N)
        for p in ("inf", 1, 2):
            assert float(separation_radius(P, p)) >= float(successive_minima(L, p).values[0]) / 2 - 1e-15
        assert covering_radius_enclosure(P, "inf").lower <= 2 * float(lattice_covering_upper(L)) + 1e-12
    L = frolov_matrix(2)
    for a in (4, 8, 16):
        P = gen_frolov_points(2, a)
        lam = float(successive_minima(L.scaled(Fraction(1, a)), "inf").values[0])
        assert float(separation_radius(P, "inf")) >= lam / 2 - 1e-12
        h_lat = float(lattice_covering_upper(L.scaled(Fraction(1, a))))
        assert covering_radius_enclosure(P, "inf").lower <= 2 * h_lat + 1e-12


# --- star discrepancy -----------------------------------------------------


def test_star_discrepancy_examples():
    assert star_discrepancy_exact(PointSet.from_rational([0, 1, 2, 3], 4)) == Fraction(1, 4)
    assert star_discrepancy_exact(gen_grid_regular(2, 2)) == Fraction(3, 4)
    for m in (2, 3, 7, 20):
        assert star_discrepancy_exact(gen_grid_regular(m, 1)) == Fraction(1, m)
    with pytest.raises(ResourceError):
        star_discrepancy_exact(PointSet.from_float(np.full((3, 4), 0.5)))


@settings(max_examples=60, deadline=None)
@given(rational_sets(max_d=3, max_n=9, den=8))
def test_star_discrepancy_matches_box_oracle(rows):
    P = PointSet.from_rational(rows, 8)
    assert star_discrepancy_exact(P) == star_discrepancy_boxes(P.rows())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 99), min_size=1, max_size=30))
def test_star_discrepancy_1d_formula(xs):
    P = PointSet.from_rational([[x] for x in xs], 100)
    assert star_discrepancy_exact(P) == star_discrepancy_1d(Fraction(x, 100) for x in xs)


def test_star_discrepancy_float_mode():
    P = gen_kronecker(alpha_power2(2), 40)
    want = star_discrepancy_boxes([tuple(Fraction(float(v)) for v in r) for r in P.coords])
    assert star_discrepancy_exact(P) == pytest.approx(float(want), abs=1e-12)


def test_star_discrepancy_lower_bound():
    G = gen_grid_regular(2, 2)
    assert star_discrepancy_lb(G, 100) == Fraction(3, 4)
    P = gen_fibonacci(8)
    exact = star_discrepancy_exact(P)
    assert star_discrepancy_lb(P, 50, seed=3) <= exact
    assert star_discrepancy_lb(P, 50, seed=3) == star_discrepancy_lb(P, 50, seed=3)
    single = PointSet.from_rational([[0, 0]], 2)
    # the closed box [0, (0, 1)] holds the point but has volume 0
    assert star_discrepancy_lb(single, 10) == 1
    with pytest.raises(DomainError):
        star_discrepancy_lb(P, 0)


# --- projections, profiles, nesting --------------------------------------


def test_project():
    P = gen_rank1((1, 5), 8)
    Q = project(P, [0])
    assert [r[0] for r in Q.rows()] == [Fraction(k, 8) for k in range(8)]
    assert np.array_equal(project(P, [0, 1]).numerators, P.numerators)
    G = gen_grid_regular(2, 2)
    assert project(G, [1], dedup=True).n == 2
    assert project(G, [1]).n == 4
    with pytest.raises(DomainError):
        project(G, [])
    with pytest.raises(DomainError):
        project(G, [2])


def test_profile_monotone():
    K = gen_kronecker(alpha_power2(2), 1024)
    prof = profile_prefixes(K, [16, 32, 64, 128, 256, 512, 1024])
    qs = [float(r.q) for r in prof.reports]
    his = [r.h_lo for r in prof.reports]
    assert all(b <= a for a, b in zip(qs, qs[1:]))
    assert all(b <= a + 1e-12 for a, b in zip(his, his[1:]))
    assert prof.max_growth == 2
    with pytest.raises(DomainError):
        profile_prefixes(K, [32, 16])


def test_profile_callable_family():
    prof = profile_prefixes(lambda i: gen_frolov_points(2, 2 ** i), [2, 3, 4])
    assert [r.n for r in prof.reports] == [6, 24, 90]
    assert len({r.grid for r in prof.reports}) == 1


def test_nestedness_examples():
    assert nestedness_check(gen_grid_regular(2, 2), gen_grid_regular(4, 2))
    assert not nestedness_check(gen_grid_regular(2, 2), gen_grid_regular(3, 2))
    with pytest.raises(DomainError):
        nestedness_check(gen_grid_regular(2, 2), gen_grid_regular(2, 3))


def test_report_json_keys():
    rep = qu_report(gen_fibonacci(10), discrepancy=True).to_dict()
    for key in ("n", "d", "p", "q", "h_lo", "h_hi", "rho_lo", "rho_hi", "dstar", "kappa", "sigma",
                "family", "params"):
        assert key in rep
    assert rep["kappa"] == 10 and rep["q_exact"] == "1/22"
    assert rep["h_lo"] <= rep["h_hi"] and rep["rho_lo"] >= 1
    plain = qu_report(gen_kronecker(alpha_power2(2), 64)).to_dict()
    assert plain["kappa"] is None and plain["dstar"] is None
