from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qups.errors import DomainError
from qups.generators import golden_alpha, alpha_power2
from qups.numtheory import (badly_approximable_profile, cf_expand_rational, convergents,
                            frac_multiples, is_prime, max_partial_quotient, mod_inverse,
                            nearest_int_dist, vector_nearest_int_dist)

from oracles import trial_division_prime


def test_cf_seven_tenths():
    cf = cf_expand_rational(7, 10)
    assert cf.partial_quotients == (0, 1, 2, 2, 1)
    assert cf.value() == Fraction(7, 10)
    assert max_partial_quotient(cf) == 2


def test_cf_fibonacci_ratio_has_unit_quotients():
    cf = cf_expand_rational(5, 8)
    assert cf.partial_quotients == (0, 1, 1, 1, 1, 1)
    assert max_partial_quotient(cf) == 1
    assert [(c.p, c.q) for c in convergents(cf)] == [(0, 1), (1, 1), (1, 2), (2, 3), (3, 5), (5, 8)]


def test_cf_reduces_first():
    assert cf_expand_rational(14, 20).partial_quotients == (0, 1, 2, 2, 1)


def test_cf_integer_and_errors():
    assert cf_expand_rational(3, 1).partial_quotients == (3,)
    with pytest.raises(DomainError):
        max_partial_quotient(cf_expand_rational(3, 1))
    with pytest.raises(DomainError):
        cf_expand_rational(1, 0)


@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_cf_round_trip_and_normal_form(num, den):
    cf = cf_expand_rational(num, den)
    assert cf.value() == Fraction(num, den)
    if cf.length >= 1:
        assert cf.partial_quotients[-1] == 1
        assert all(a >= 1 for a in cf.partial_quotients[1:])


@given(st.integers(1, 10**5), st.integers(2, 10**5))
def test_convergent_determinant_and_error(num, den):
    x = Fraction(num, den)
    conv = convergents(cf_expand_rational(num, den))
    assert conv[-1].value() == x
    for prev, cur in zip(conv, conv[1:]):
        assert cur.p * prev.q - prev.p * cur.q == (-1) ** (prev.index)
        assert abs(x - prev.value()) <= Fraction(1, prev.q * cur.q)


def test_nearest_int_dist_preserves_type():
    assert nearest_int_dist(Fraction(7, 10)) == Fraction(3, 10)
    assert nearest_int_dist(2.25) == 0.25
    assert nearest_int_dist(Decimal("-0.4")) == Decimal("0.4")
    assert vector_nearest_int_dist([0.1, 0.9, 2.45]) == pytest.approx(0.45)


def test_is_prime_matches_trial_division():
    for n in range(-3, 5000):
        assert is_prime(n) == trial_division_prime(n), n


def test_is_prime_large_and_pseudoprimes():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    for carmichael in (561, 1105, 1729, 2465, 41041, 825265, 3215031751):
        assert not is_prime(carmichael)
    assert is_prime(18446744073709551557)  # largest prime below 2**64


def test_mod_inverse():
    assert mod_inverse(5, 8) == 5
    assert mod_inverse(3, 31) * 3 % 31 == 1
    with pytest.raises(DomainError):
        mod_inverse(2, 8)
    with pytest.raises(DomainError):
        mod_inverse(1, 1)


def _exact_frac(alpha, n):
    with localcontext() as ctx:
        ctx.prec = 80
        x = Decimal(n) * alpha
        return float(x - int(x))


@pytest.mark.parametrize("alpha", [golden_alpha()[0], alpha_power2(2)[1]])
def test_frac_multiples_accuracy(alpha):
    n = np.array([1, 2, 3, 1000, 99991, 10**6, 2**25 + 7], dtype=np.int64)
    got = frac_multiples([alpha], n)[:, 0]
    want = np.array([_exact_frac(alpha, int(k)) for k in n])
    assert np.max(np.abs(got - want)) < 1e-14


def test_frac_multiples_strings_and_range():
    got = frac_multiples(["0.5", "0.25"], np.arange(0, 5))
    assert got.tolist() == [[0, 0], [0.5, 0.25], [0, 0.5], [0.5, 0.75], [0, 0]]
    assert np.all(got < 1.0)


def test_profile_matches_direct_scan():
    alpha = golden_alpha()
    prof = badly_approximable_profile(alpha, 200)
    vals = [(nearest_int_dist(_exact_frac(alpha[0], n)) * n, n) for n in range(1, 201)]
    best = min(vals)
    assert prof.argmin == best[1]
    assert prof.minimum == pytest.approx(best[0], abs=1e-12)


@settings(max_examples=30)
@given(st.integers(1, 2000))
def test_profile_monotone_in_n_max(n_max):
    a = badly_approximable_profile(alpha_power2(2), n_max)
    b = badly_approximable_profile(alpha_power2(2), n_max + 50)
    assert b.minimum <= a.minimum
