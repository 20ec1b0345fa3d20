import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qups.errors import DomainError, ResourceError
from qups.lattice import (admissibility_min_normform, dual_shortest, enumerate_in_cube,
                          frolov_matrix, frolov_polynomial, frolov_roots, generic_lattice,
                          integer_lattice, lattice_covering_upper, lattice_mesh_ratio_upper,
                          lattice_vectors, parse_norm, rank1_lattice, shortest_vector,
                          shortest_vector_2d_cf, successive_minima)

from oracles import dual_min_box, shortest_sup_rank1_2d

coprime_pair = st.integers(2, 400).flatmap(
    lambda N: st.tuples(st.integers(1, N - 1).filter(lambda g: math.gcd(g, N) == 1), st.just(N)))


def test_parse_norm():
    assert parse_norm("inf") == math.inf
    assert parse_norm(2) == 2.0
    with pytest.raises(DomainError):
        parse_norm(3)


def test_rank1_basis_and_det():
    L = rank1_lattice((1, 5), 8)
    assert L.is_exact
    assert L.matrix.tolist() == [[1 / 8, 0.0], [5 / 8, 1.0]]
    assert L.det_abs == Fraction(1, 8)
    with pytest.raises(DomainError):
        rank1_lattice((2, 4), 8)


def test_rank1_basis_spans_generating_vector():
    L = rank1_lattice((3, 7, 2), 11)
    # k * g / 11 must be a lattice vector for every k
    for k in range(11):
        x = np.array([k * 3 % 11, k * 7 % 11, k * 2 % 11]) / 11
        coeffs = np.linalg.solve(L.matrix, x)
        assert np.allclose(coeffs, np.round(coeffs), atol=1e-9)
    assert L.det_abs == Fraction(1, 11)


def test_singular_lattice_rejected():
    with pytest.raises(DomainError):
        generic_lattice([[1, 2], [2, 4]])
    with pytest.raises(DomainError):
        generic_lattice([[1.0, 2.0], [2.0, 4.0]])


def test_shortest_vector_fibonacci_example():
    sv = shortest_vector(rank1_lattice((1, 5), 8), "inf")
    assert sv.length == Fraction(1, 4)
    assert np.allclose(np.abs(sv.vector), [0.25, 0.25])


def test_successive_minima_example():
    mins = successive_minima(rank1_lattice((1, 5), 8), "inf")
    assert mins.values == (Fraction(1, 4), Fraction(3, 8))
    assert lattice_covering_upper(rank1_lattice((1, 5), 8)) == Fraction(5, 16)
    assert lattice_mesh_ratio_upper(rank1_lattice((1, 5), 8)) == Fraction(5, 2)


def test_integer_lattice_minima():
    mins = successive_minima(integer_lattice(3, 2), 2)
    assert mins.values == (2, 2, 2)


@settings(max_examples=60, deadline=None)
@given(coprime_pair)
def test_shortest_vector_matches_scan(pair):
    g, N = pair
    sv = shortest_vector(rank1_lattice((1, g), N), "inf")
    assert sv.length == shortest_sup_rank1_2d(g, N)
    _, cf_len = shortest_vector_2d_cf(g, N)
    assert cf_len == sv.length


@settings(max_examples=40, deadline=None)
@given(coprime_pair)
def test_minkowski_product(pair):
    g, N = pair
    L = rank1_lattice((1, g), N)
    mins = successive_minima(L, "inf")
    assert mins.values[0] <= mins.values[1]
    assert math.prod(mins.values) <= L.det_abs


def test_lattice_vectors_radius():
    k, units = lattice_vectors(integer_lattice(2), "inf", 1)
    assert len(k) == 8
    k, units = lattice_vectors(integer_lattice(2), 1, 1)
    assert len(k) == 4


def test_dual_examples():
    v = dual_shortest((1, 5), 8, 1)
    assert v.value == 4
    h = v.h
    assert (h[0] + 5 * h[1]) % 8 == 0 and sum(map(abs, h)) == 4
    v2 = dual_shortest((1, 5), 8, 2)
    assert v2.squared == 8
    assert 1 / v2.value == pytest.approx(1 / (2 * math.sqrt(2)), abs=1e-15)
    assert dual_shortest((1, 1), 2, 1).value == 2
    with pytest.raises(DomainError):
        dual_shortest((1, 5), 8, "inf")


@pytest.mark.parametrize("N", [5, 7, 11])
def test_dual_matches_box_search(N):
    for g1 in range(N):
        for g2 in range(N):
            g = (g1, g2)
            if g == (0, 0):
                continue
            assert dual_shortest(g, N, 1).value == dual_min_box(g, N, 1)
            assert dual_shortest(g, N, 2).squared == dual_min_box(g, N, 2)


def test_frolov_polynomials():
    assert frolov_polynomial(2) == [1, -4, 2]
    assert frolov_polynomial(3) == [1, -9, 23, -16]
    r3 = frolov_roots(3)
    assert 1 < r3[0] < 2 and 2 < r3[1] < 3 and 5 < r3[2] < 6
    for d in (2, 3, 4):
        roots = frolov_roots(d)
        assert len(roots) == d
        assert np.allclose(np.polyval(frolov_polynomial(d), roots), 0, atol=1e-9)


def test_frolov_det_and_admissibility():
    L = frolov_matrix(2)
    assert L.det_abs == pytest.approx(2 * math.sqrt(2), rel=1e-12)
    adm = admissibility_min_normform(L, 50)
    assert adm.minimum >= 1 - 1e-9
    assert adm.zero_coordinate_vectors == 0
    # the norm form is a nonzero integer, so products sit at integers
    k, _ = lattice_vectors(L, "inf", 10)
    prods = np.prod(L.vectors(k), axis=1)
    assert np.allclose(prods, np.round(prods), atol=1e-8)


def test_frolov_minkowski_d3():
    L = frolov_matrix(3)
    mins = successive_minima(L, "inf")
    assert math.prod(mins.values) <= L.det_abs * (1 + 1e-12)


def test_frolov_dimension_limits():
    with pytest.raises(DomainError):
        frolov_matrix(5)


def test_enumerate_in_cube_integer_and_frolov():
    P = enumerate_in_cube(integer_lattice(2), 2)
    assert P.n == 4 and P.is_rational
    assert sorted(map(tuple, P.rows())) == [(0, 0), (0, Fraction(1, 2)), (Fraction(1, 2), 0),
                                            (Fraction(1, 2), Fraction(1, 2))]
    F = enumerate_in_cube(frolov_matrix(2), 10)
    assert F.n == 36
    assert F.coords.min() >= 0 and F.coords.max() < 1


def test_enumerate_in_cube_shift_and_errors():
    P = enumerate_in_cube(integer_lattice(1), 4, [Fraction(-1, 2)])
    assert [r[0] for r in P.rows()] == [Fraction(1, 8), Fraction(3, 8), Fraction(5, 8), Fraction(7, 8)]
    with pytest.raises(DomainError):
        enumerate_in_cube(integer_lattice(2), -1)
    with pytest.raises(ResourceError):
        enumerate_in_cube(integer_lattice(2), 10**4, budget=1000)
