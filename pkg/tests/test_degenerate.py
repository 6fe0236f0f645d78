import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from degbern.degenerate import (
    binomial_exp_series,
    closed_form_log_series,
    deg_exp_inverse_check,
    deg_exp_series,
    deg_falling_factorial,
    deg_log_inverse_check,
    deg_log_series,
    deg_polylog_derivative_check,
    deg_polylog_series,
    falling_factorial,
    polylog_log_check,
)
from degbern.scalars import LAMBDA, LambdaPolynomial
from degbern.series import TruncatedSeries

from oracles import deg_exp, lam_sym, poly_in_lambda, series_coeffs, t_sym, to_fraction

F = Fraction
nonzero_lambdas = st.fractions(min_value=-3, max_value=3, max_denominator=7).filter(bool)


def test_falling_factorial_examples():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(F(7, 3), 0) == 1
    assert falling_factorial(F(1, 2), 2) == F(-1, 4)


def test_deg_falling_factorial_examples():
    assert deg_falling_factorial(1, 2, F(1, 2)) == F(1, 2)
    assert deg_falling_factorial(1, 3, 1) == 0
    assert deg_falling_factorial(F(2, 3), 0, F(5)) == 1
    for n in range(6):
        assert deg_falling_factorial(F(3, 2), n, 0) == F(3, 2) ** n
    # symbolic: x(x - L) at x = 2
    assert deg_falling_factorial(2, 2, LAMBDA) == LambdaPolynomial([4, -2])


def test_deg_exp_examples():
    assert deg_exp_series(1, 1, 3) == TruncatedSeries([1, 1, 0, 0])
    assert deg_exp_series(2, 1, 3) == TruncatedSeries([1, 2, 1, 0])
    classical = deg_exp_series(F(3, 2), LAMBDA, 8).map(lambda c: c(0))
    assert classical == TruncatedSeries([F(3, 2) ** n / math.factorial(n) for n in range(9)])


def test_deg_exp_matches_sympy_binomial():
    # frozen from sympy: (1 + t/2)^(2/(1/2)) = (1 + t/2)^4
    coeffs = [to_fraction(c) for c in series_coeffs(deg_exp(2, sp.Rational(1, 2)), 6)]
    assert coeffs == [1, 2, F(3, 2), F(1, 2), F(1, 16), 0, 0]
    assert list(deg_exp_series(2, F(1, 2), 6)) == coeffs


@settings(max_examples=40)
@given(st.fractions(min_value=-4, max_value=4, max_denominator=5), nonzero_lambdas)
def test_deg_exp_two_routes(x, lam):
    assert deg_exp_series(x, lam, 10) == binomial_exp_series(x, lam, 10)


def test_binomial_route_rejects_zero_lambda():
    with pytest.raises(ValueError):
        binomial_exp_series(1, 0, 3)
    with pytest.raises(ValueError):
        closed_form_log_series(0, 3)


def test_deg_log_examples():
    log = deg_log_series(LAMBDA, 8)
    assert log[2] == (LAMBDA - 1) / 2
    assert deg_log_series(F(1), 6) == TruncatedSeries.monomial(1, 6)
    classical = log.map(lambda c: c(0))
    assert list(classical) == [0] + [F((-1) ** (n - 1), n) for n in range(1, 9)]


def test_deg_log_matches_sympy():
    expr = ((1 + t_sym) ** lam_sym - 1) / lam_sym
    expected = [poly_in_lambda(sp.simplify(c)) for c in series_coeffs(expr, 6)]
    got = deg_log_series(LAMBDA, 6)
    assert [LambdaPolynomial(e) for e in expected] == list(got)


@pytest.mark.parametrize("lam", [F(1, 2), LAMBDA, F(1), F(-2, 3)])
def test_log_exp_inverse_both_directions(lam):
    assert deg_log_inverse_check(lam, 12)
    assert deg_exp_inverse_check(lam, 12)


@settings(max_examples=30)
@given(nonzero_lambdas)
def test_log_closed_form(lam):
    assert deg_log_series(lam, 10) == closed_form_log_series(lam, 10)


def test_polylog_examples():
    for k in (-2, 0, 1, 3):
        for lam in (LAMBDA, F(2, 5)):
            assert deg_polylog_series(k, lam, 4)[1] == 1
    assert deg_polylog_series(1, LAMBDA, 10) == -deg_log_series(LAMBDA, 10).reflect()
    for k in (-1, 0, 2, 3):
        classical = deg_polylog_series(k, LAMBDA, 10).map(lambda c: c(0))
        assert list(classical) == [0] + [F(n) ** (-k) for n in range(1, 11)]


def test_polylog_coefficient_closed_form():
    # l_{2,L}: coefficient of x^3 is (1 - L)(2 - L) / (2! * 9)
    assert deg_polylog_series(2, LAMBDA, 3)[3] == (1 - LAMBDA) * (2 - LAMBDA) / 18


@pytest.mark.parametrize("k, lam", [(2, F(1, 3)), (1, LAMBDA), (0, F(2)), (-2, LAMBDA), (4, F(-1, 2))])
def test_polylog_derivative(k, lam):
    assert deg_polylog_derivative_check(k, lam, 12)


@pytest.mark.parametrize("lam", [LAMBDA, F(1, 2), F(3)])
def test_polylog_log(lam):
    assert polylog_log_check(lam, 12)


@settings(max_examples=25)
@given(nonzero_lambdas, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_exponent_law(lam, y):
    # e^x * e^y = e^{x+y} for the same lambda
    x = F(1, 3)
    lhs = deg_exp_series(x, lam, 8) * deg_exp_series(y, lam, 8)
    assert lhs == deg_exp_series(x + y, lam, 8)
