from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.euler import (check_even_identity, check_odd_identity, check_shift_identity,
                          classical_euler_poly, classical_limit_gaps, euler_ab_poly,
                          euler_ab_series, euler_number, euler_poly_closed, euler_poly_series,
                          euler_poly_umbral)

HALF = Fraction(1, 2)


def test_spot_values():
    assert euler_number(0, 1, HALF) == 1
    assert euler_number(1, 1, HALF) == Fraction(-2, 5)
    assert euler_number(2, 1, HALF) == Fraction(-4, 15)
    assert euler_number(1, 1, 0.5) == pytest.approx(-0.4, abs=1e-15)
    assert euler_ab_poly(1, 0, 1, 2, HALF) == Fraction(-2, 9)


def test_number_is_series_at_zero():
    # n = 1: [2:q] sum (-q)^m [m] summed by hand for q = 1/2
    rep = euler_poly_series(1, 0, 1, 0.5, tol=1e-14)
    assert rep.converged
    assert rep.value == pytest.approx(-0.4, abs=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0.1, 0.3, 0.5, 0.7, 0.9]), st.integers(1, 3), st.integers(0, 8),
       st.sampled_from([0, 0.5, 1, 2, 1.25]))
def test_three_routes_agree(q, alpha, n, x):
    with mpmath.workdps(30):
        qm, xm = mpmath.mpf(q), mpmath.mpf(x)
        a = euler_poly_closed(n, xm, alpha, qm)
        b = euler_poly_series(n, xm, alpha, qm, tol=mpmath.mpf(10) ** -20).value
        c = euler_poly_umbral(n, xm, alpha, qm)
    assert abs(a - b) <= 1e-10 and abs(a - c) <= 1e-10


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.6), st.integers(1, 2), st.integers(0, 5), st.floats(0, 2))
def test_series_tail_bound_is_honest(q, alpha, n, x):
    rep = euler_poly_series(n, x, alpha, q, tol=1e-6)
    exact = euler_poly_closed(n, x, alpha, q)
    assert abs(rep.value - exact) <= rep.tail_bound + 1e-9


def test_series_truncates_at_max_terms():
    rep = euler_poly_series(3, 0.5, 1, 0.9, tol=1e-14, max_terms=10)
    assert rep.terms_used == 10 and not rep.converged


@given(st.integers(1, 7), st.integers(0, 5), st.integers(1, 3))
def test_shift_identities_exact(k, n, alpha):
    rec = check_shift_identity(k, n, alpha, Fraction(2, 5))
    assert rec.residual == 0 and rec.status == "pass"
    assert rec.identity_id == ("eq:6" if k % 2 == 0 else "eq:7")


@given(st.sampled_from([2, 4, 6]), st.integers(0, 6), st.integers(1, 2),
       st.sampled_from([HALF, Fraction(3, 10)]))
def test_even_recurrence_exact(k, n, alpha, q):
    rec = check_even_identity(k, n, alpha, q)
    assert rec.residual == 0


@given(st.sampled_from([1, 3, 5]), st.integers(0, 6), st.integers(1, 2),
       st.sampled_from([HALF, Fraction(3, 10)]))
def test_odd_recurrence_exact(k, n, alpha, q):
    rec = check_odd_identity(k, n, alpha, q)
    assert rec.residual == 0


def test_printed_recurrences_disagree():
    even = check_even_identity(2, 2, 2, HALF, printed=True)
    odd = check_odd_identity(3, 2, 1, HALF, printed=True)
    assert even.status == odd.status == "expected-fail"
    assert even.residual > 0.1


def test_recurrence_argument_checks():
    with pytest.raises(ValueError):
        check_even_identity(3, 1)
    with pytest.raises(ValueError):
        check_odd_identity(2, 1)


@given(st.integers(0, 6), st.floats(0, 3), st.floats(0.1, 0.8))
def test_beta_one_is_single_weight(n, x, q):
    assert euler_ab_poly(n, x, 2, 1, q) == pytest.approx(euler_poly_closed(n, x, 2, q),
                                                         rel=1e-9, abs=1e-12)


@settings(deadline=None)
@given(st.integers(0, 5), st.integers(1, 3), st.integers(1, 3), st.floats(0, 2))
def test_ab_series_matches_closed(n, alpha, beta, x):
    rep = euler_ab_series(n, x, alpha, beta, 0.4, tol=1e-13)
    assert rep.value == pytest.approx(euler_ab_poly(n, x, alpha, beta, 0.4), abs=1e-10)


def test_classical_oracle():
    assert classical_euler_poly(1, 0) == Fraction(-1, 2)
    assert classical_euler_poly(3, 0) == Fraction(1, 4)
    assert classical_euler_poly(2, Fraction(1, 2)) == Fraction(-1, 4)
    assert classical_euler_poly(3, 0.5) == pytest.approx(0.0)
    # E_n(x) + E_n(x+1) = 2 x^n
    for n in range(6):
        for x in (Fraction(1, 3), Fraction(2)):
            assert classical_euler_poly(n, x) + classical_euler_poly(n, x + 1) == 2 * x ** n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0, HALF, 1])
def test_classical_limit_is_monotone(n, x):
    gaps = classical_limit_gaps(n, x)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_invalid_weights():
    with pytest.raises(ValueError):
        euler_poly_closed(2, 0, 0, 0.5)
    assert euler_poly_closed(0, 1, 0, 0.5) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        euler_poly_closed(-1, 0)
    with pytest.raises(ValueError):
        euler_poly_series(2, -1, 1, 0.5)
    with pytest.raises(ValueError):
        euler_poly_series(2, 1, 1, 0.5j)
    with pytest.raises(ValueError):
        euler_ab_poly(2, 0, 1, 0, 0.5)


def test_complex_q_closed_form():
    # integer x keeps every power integral, so complex q is allowed
    v = euler_poly_closed(2, 1, 1, 0.3 + 0.2j)
    w = euler_poly_umbral(2, 1, 1, 0.3 + 0.2j)
    assert abs(v - w) < 1e-12
