import math
from fractions import Fraction

import mpmath
import pytest
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from qeuler.numkit import (QParam, binom, falling_factorial, gamma, gen_binom, qbracket, qpow,
                           reciprocal_gamma, stirling2)

unit_q = st.floats(min_value=0.05, max_value=0.95)


@given(st.integers(0, 40), unit_q)
def test_integer_bracket_is_geometric_sum(n, q):
    assert qbracket(n, q) == pytest.approx(sum(q ** j for j in range(n)), rel=1e-12, abs=1e-15)


def test_bracket_exact_for_fractions():
    assert qbracket(3, Fraction(1, 2)) == Fraction(7, 4)
    assert qbracket(0, Fraction(1, 3)) == 0
    assert qbracket(1, Fraction(1, 3)) == 1


def test_bracket_near_one_tends_to_x():
    for x in (0.5, 2, 7.25):
        assert qbracket(x, 1 - 1e-9) == pytest.approx(x, rel=1e-7)


@given(st.floats(0.0, 5.0), st.floats(0.0, 5.0), unit_q)
def test_bracket_addition(x, y, q):
    # [x+y] = [x] + q^x [y]
    assert qbracket(x + y, q) == pytest.approx(qbracket(x, q) + qpow(q, x) * qbracket(y, q),
                                               rel=1e-10, abs=1e-12)


def test_bracket_mpmath_matches_float():
    with mpmath.workdps(40):
        v = qbracket(mpmath.mpf("2.5"), mpmath.mpf("0.3"))
    assert float(v) == pytest.approx(qbracket(2.5, 0.3), rel=1e-14)


def test_bracket_domain_errors():
    with pytest.raises(ValueError):
        qbracket(2, 1)
    with pytest.raises(ValueError):
        qbracket(0.5, 0.5j)
    # integer arguments are fine for complex q
    assert qbracket(2, 0.5j) == pytest.approx(1 + 0.5j)


def test_qpow_keeps_exact_types():
    assert qpow(Fraction(1, 2), 3) == Fraction(1, 8)
    assert qpow(Fraction(1, 4), 0.5) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        qpow(-0.5, 0.5)


def test_qparam_domains():
    assert QParam.of(0.5).is_real
    assert not QParam.of(0.3j).is_real
    with pytest.raises(ValueError):
        QParam(1.5, "real-unit-interval")
    with pytest.raises(ValueError):
        QParam.of(2j)


@given(st.integers(0, 12), st.integers(0, 12))
def test_stirling_matches_sympy(n, k):
    assert stirling2(n, k) == sympy_stirling(n, k, kind=2)


@given(st.integers(0, 10), st.integers(-5, 20))
def test_stirling_falling_factorial_expansion(n, x):
    assert sum(stirling2(n, k) * falling_factorial(x, k) for k in range(n + 1)) == x ** n


def test_binomials():
    assert binom(5, 7) == 0 and binom(5, -1) == 0 and binom(6, 3) == 20
    assert gen_binom(7, 3) == 35
    assert gen_binom(-2, 3) == -4
    assert gen_binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert gen_binom(2.5, 3) == pytest.approx(scipy.special.binom(2.5, 3))


def test_gamma_recurrence_grid():
    for i in range(96):
        s = 0.5 + i * 0.1
        assert abs(gamma(s + 1) - s * gamma(s)) / abs(gamma(s + 1)) <= 1e-11


def test_gamma_values_and_poles():
    assert gamma(5) == pytest.approx(24)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi))
    for s in (0, -1, -3):
        with pytest.raises(ValueError):
            gamma(s)
        assert reciprocal_gamma(s) == 0
    assert reciprocal_gamma(4) == pytest.approx(1 / 6)
    assert gamma(1 + 1j) == pytest.approx(complex(mpmath.gamma(1 + 1j)))


@settings(max_examples=50)
@given(st.floats(0.1, 8.0))
def test_reciprocal_gamma_is_reciprocal(s):
    assert reciprocal_gamma(s) * gamma(s) == pytest.approx(1.0, rel=1e-12)
