from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from degbern.scalars import (
    LAMBDA,
    QQ,
    QQ_LAMBDA,
    LambdaPolynomial,
    NotDivisibleError,
    lambda_product,
    parse_scalar,
    poly_eval,
    rational,
    render_scalar,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10 ** 6)
polys = st.lists(rationals, max_size=6).map(LambdaPolynomial)


@pytest.mark.parametrize("num, den, expected", [
    (2, 4, Fraction(1, 2)),
    (3, -6, Fraction(-1, 2)),
    (0, 7, Fraction(0, 1)),
])
def test_rational_normalizes(num, den, expected):
    q = rational(num, den)
    assert q == expected
    assert q.denominator > 0
    assert (q.numerator, q.denominator) == (expected.numerator, expected.denominator)


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


def test_poly_eval_examples():
    assert poly_eval(LAMBDA - 1, 0) == -1
    assert poly_eval(LAMBDA ** 2 + Fraction(1, 2), Fraction(1, 2)) == Fraction(3, 4)
    assert poly_eval(LambdaPolynomial([2, -3, 1]), 2) == 0


def test_lambda_product_examples():
    assert lambda_product(1) == 1
    # (lam - 1)(lam - 2) expanded by hand
    assert lambda_product(3) == LambdaPolynomial([2, -3, 1])
    assert lambda_product(4)(0) == -6


def test_lambda_product_domain():
    with pytest.raises(ValueError):
        lambda_product(0)


@given(st.integers(1, 20), rationals)
def test_lambda_product_matches_direct_product(n, q):
    direct = Fraction(1)
    for j in range(1, n):
        direct *= q - j
    assert poly_eval(lambda_product(n), q) == direct
    assert lambda_product(n, q) == direct


def test_lambda_product_at_zero():
    import math
    for n in range(1, 15):
        assert lambda_product(n)(0) == (-1) ** (n - 1) * math.factorial(n - 1)


def test_canonical_form():
    p = LambdaPolynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert LambdaPolynomial([0, 0]).coefficients == ()
    assert LambdaPolynomial([]) == 0
    assert (LAMBDA - LAMBDA).degree == -1
    assert LambdaPolynomial([Fraction(2, 4), Fraction(3, 9)]).coefficients == (
        Fraction(1, 2), Fraction(1, 3))


def test_mixed_arithmetic_with_rationals():
    assert Fraction(1, 2) + LAMBDA == LambdaPolynomial([Fraction(1, 2), 1])
    assert 1 - LAMBDA == LambdaPolynomial([1, -1])
    assert Fraction(2) * LAMBDA == LambdaPolynomial([0, 2])
    assert LambdaPolynomial.constant(Fraction(3, 4)) == Fraction(3, 4)
    assert hash(LambdaPolynomial.constant(Fraction(3, 4))) == hash(Fraction(3, 4))


def test_exact_division():
    p = lambda_product(5)
    assert p / lambda_product(3) == (LAMBDA - 3) * (LAMBDA - 4)
    assert (LAMBDA * 3) / 3 == LAMBDA
    with pytest.raises(NotDivisibleError):
        LAMBDA / (LAMBDA - 1)
    with pytest.raises(ZeroDivisionError):
        LAMBDA / 0


@settings(max_examples=60)
@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=60)
@given(polys, polys, rationals)
def test_multiplication_agrees_with_evaluation(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@settings(max_examples=60)
@given(polys, polys.filter(bool))
def test_divmod_reconstructs(a, b):
    q, r = a.divmod_poly(b)
    assert q * b + r == a
    assert r.degree < b.degree or b.degree == 0 and r == 0


@pytest.mark.parametrize("value, text", [
    (Fraction(1, 2), "1/2"),
    (Fraction(-3), "-3"),
    (LAMBDA - 1, "-1 + L"),
    (LambdaPolynomial([2, -3, 1]), "2 - 3*L + L^2"),
    (LambdaPolynomial([0, Fraction(-1, 4)]), "-1/4*L"),
    (LambdaPolynomial([]), "0"),
])
def test_render(value, text):
    assert render_scalar(value) == text
    assert parse_scalar(text) == value


@settings(max_examples=80)
@given(st.one_of(rationals, polys))
def test_render_parse_round_trip(value):
    back = parse_scalar(render_scalar(value))
    assert back == value


@pytest.mark.parametrize("bad", ["", "1/", "L L", "2*", "abc", "1 2"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


def test_ring_contract():
    for ring, x in ((QQ, Fraction(2, 3)), (QQ_LAMBDA, LAMBDA + 2)):
        assert ring.add(ring.zero, x) == x
        assert ring.mul(ring.one, x) == x
        assert ring.eq(ring.sub(x, x), ring.zero)
        assert ring.from_int(3) == 3
        assert ring.from_rational(Fraction(1, 3)) == Fraction(1, 3)
        assert ring.div_exact(ring.mul(x, x), x) == x
    assert QQ_LAMBDA.is_unit(LambdaPolynomial.constant(5))
    assert not QQ_LAMBDA.is_unit(LAMBDA)
    assert QQ_LAMBDA.inverse(LambdaPolynomial.constant(4)) == Fraction(1, 4)
