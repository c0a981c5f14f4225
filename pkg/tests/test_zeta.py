import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.characters import enumerate_characters, quadratic_character, trivial_character
from qeuler.euler import euler_number, euler_poly_closed
from qeuler.zeta import (check_continuation, check_partial_factored, check_partition,
                         continuation_number, continuation_number_derivative, continuation_poly,
                         curve_sample, l_decomposition_check, l_function, l_zero_check,
                         large_n_limit, large_n_residual, partial_zeta, partial_zeta_binomial,
                         partial_zeta_number_form, zeta_derivative, zeta_hurwitz_weighted,
                         zeta_weighted)

CHI3 = quadratic_character(3)


@given(st.integers(0, 8), st.sampled_from([0.5, 1.0, 2.0, 0.3]), st.integers(1, 2))
def test_hurwitz_at_negative_integers(n, x, alpha):
    got = zeta_hurwitz_weighted(-n, x, alpha, 0.5, tol=1e-14).value
    assert got == pytest.approx(euler_poly_closed(n, x, alpha, 0.5), abs=1e-10)


@given(st.integers(1, 8), st.integers(1, 2))
def test_number_zeta_at_negative_integers(n, alpha):
    got = zeta_weighted(-n, alpha, 0.5, tol=1e-14).value
    assert got == pytest.approx(euler_number(n, alpha, 0.5), abs=1e-10)


def test_n_zero_discrepancy():
    # the m = 0 term is absent from the zeta sum, so the n = 0 values differ
    for q in (0.3, 0.5):
        assert zeta_weighted(0, 1, q, tol=1e-15).value == pytest.approx(-q, abs=1e-12)
        assert euler_number(0, 1, q) == pytest.approx(1.0)


@given(st.floats(-3, 4), st.integers(1, 2))
def test_hurwitz_at_one(s, alpha):
    lhs = zeta_hurwitz_weighted(s, 1, alpha, 0.5, tol=1e-14).value
    assert lhs == pytest.approx(-zeta_weighted(s, alpha, 0.5, tol=1e-14).value / 0.5, abs=1e-11)


def test_large_n_approach():
    res = [large_n_residual(n, 1, 0.5) for n in (10, 20, 40)]
    assert res[0] > res[1] > res[2]
    assert large_n_limit(0.5) == -0.75
    # decay is governed by q^2 [2:q] / [2:q^alpha]^n
    for alpha, q in ((1, 0.3), (2, 0.5)):
        lead = q * q * (1 + q) / (1 + q ** alpha) ** 40
        assert large_n_residual(40, alpha, q) == pytest.approx(lead, rel=0.2)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_l_zero_every_character(d):
    for chi in enumerate_characters(d):
        assert l_zero_check(chi, 1.0, 1, 0.5).status == "pass"


@pytest.mark.parametrize("chi", [trivial_character(3), CHI3, quadratic_character(5),
                                 enumerate_characters(5)[1]])
@pytest.mark.parametrize("s", [-2, 0.5, 2])
def test_l_decomposition(chi, s):
    assert l_decomposition_check(s, 1.0, chi, 2, 0.5).status == "pass"


@settings(max_examples=25, deadline=None)
@given(st.floats(-2, 3), st.floats(0.2, 2), st.sampled_from([CHI3, quadratic_character(5)]))
def test_partition_into_classes(s, x, chi):
    assert check_partition(s, x, chi, 1, 0.5).status == "pass"
    assert check_partial_factored(s, x, 1, chi.modulus, chi, 1, 0.5).status == "pass"


def test_printed_partial_forms_off_by_factor():
    for F, chi in ((3, CHI3), (5, quadratic_character(5))):
        for rec in (check_partial_factored(2, 1.0, 1, F, chi, 1, 0.5, printed=True),
                    check_partition(2, 1.0, chi, 1, 0.5, printed=True)):
            assert rec.status == "expected-fail"
            assert rec.note["measured_ratio"] == pytest.approx(1 + 0.5 ** F, abs=1e-8)
            assert rec.note["predicted_ratio"] == 1 + 0.5 ** F


@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_partial_zeta_at_negative_integers(n):
    lhs = partial_zeta(-n, 1.0, 1, 3, CHI3, 1, 0.5, tol=1e-14).value
    assert lhs == pytest.approx(partial_zeta_number_form(n, 1.0, 1, 3, CHI3, 1, 0.5), abs=1e-10)


@pytest.mark.parametrize("s", [-2, 0.5, 2])
def test_binomial_form(s):
    rep = partial_zeta_binomial(s, 1.0, 1, 3, CHI3, 2, 0.3)
    direct = partial_zeta(s, 1.0, 1, 3, CHI3, 2, 0.3, tol=1e-14).value
    assert rep.value == pytest.approx(direct, abs=1e-10)


def test_binomial_form_refuses_divergence():
    with pytest.raises(ValueError):
        partial_zeta_binomial(2, 0.1, 0, 3, CHI3, 1, 0.9)


def test_zeta_argument_checks():
    with pytest.raises(ValueError):
        zeta_hurwitz_weighted(2, 0, 1, 0.5)
    with pytest.raises(ValueError):
        l_function(2, 0, trivial_character(1))
    assert l_function(2, 0, CHI3).converged
    with pytest.raises(ValueError):
        partial_zeta(2, 1.0, 3, 3)
    with pytest.raises(ValueError):
        zeta_weighted(2, 1, 1.5)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("w", [-0.5, 0.0, 0.5])
def test_continuation_interpolates(n, w):
    assert check_continuation(n, w, 1, 0.5).status == "pass"
    assert check_continuation(n, w, 2, 0.5).status == "pass"


def test_printed_continuation_fails():
    assert check_continuation(2, 0.5, 1, 0.5, printed=True).status == "expected-fail"
    with pytest.raises(ValueError):
        continuation_poly(-1.5, 0)


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.9, 4))
def test_continuation_number_smooth(s):
    h = 1e-5
    central = (continuation_number(s + h) - continuation_number(s - h)) / (2 * h)
    assert continuation_number_derivative(s) == pytest.approx(central, abs=1e-6)


@pytest.mark.parametrize("s", [0.5, 1.5, 2.5, 3.5])
def test_zeta_derivative(s):
    h = 1e-5
    central = (zeta_weighted(s + h, 1, 0.5, 1e-15).value
               - zeta_weighted(s - h, 1, 0.5, 1e-15).value) / (2 * h)
    assert zeta_derivative(s, 1, 0.5) == pytest.approx(central, abs=1e-6)


def test_curve_grid():
    one = curve_sample(1, 1, 0, 0, 1, 1, 1, 0.5)
    assert one == [(1, 0, pytest.approx(-0.4, abs=1e-12))]
    grid = curve_sample(steps_s=5, steps_w=3)
    assert len(grid) == 15
    assert [g[0] for g in grid[:3]] == [1.0, 1.0, 1.0]  # s is the outer index
    assert all(math.isfinite(v) for _, _, v in grid)
    # integer s endpoints reproduce the polynomials
    assert grid[-1][2] == pytest.approx(euler_poly_closed(2, 0.5, 1, 0.5), abs=1e-10)
