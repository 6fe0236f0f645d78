"""Degenerate elementary functions as truncated series.

``lam`` may be a rational (a concrete deformation) or the polynomial
:data:`~degbern.scalars.LAMBDA` (symbolic: results are polynomials in lambda).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import QQ, ring_of
from .series import TruncatedSeries, series_compose, series_derive


def falling_factorial(x, n: int):
    """``x (x-1) ... (x-n+1)``; 1 when ``n == 0``."""
    result = 1
    for j in range(n):
        result = result * (x - j)
    return result


def deg_falling_factorial(x, n: int, lam):
    """``x (x-lam) (x-2 lam) ... (x-(n-1) lam)``; 1 when ``n == 0``."""
    result = 1
    for j in range(n):
        result = result * (x - j * lam)
    return result


def deg_exp_series(x, lam, order: int) -> TruncatedSeries:
    """``e_lam^x(t) = (1 + lam t)^(x/lam)`` through ``t^order``."""
    ring = ring_of(x, lam)
    cs = []
    term = ring.one
    for n in range(order + 1):
        cs.append(term * Fraction(1, math.factorial(n)))
        term = term * (x - n * lam)
    return TruncatedSeries(cs, ring)


def binomial_exp_series(x, lam, order: int) -> TruncatedSeries:
    """Independent route to ``e_lam^x(t)`` for rational ``lam != 0``.

    Expands ``(1 + lam t)^(x/lam)`` with generalized binomial coefficients.
    """
    x, lam = QQ.coerce(x), QQ.coerce(lam)
    if not lam:
        raise ValueError("binomial expansion needs a nonzero lambda")
    a = x / lam
    cs = []
    binom = Fraction(1)
    for n in range(order + 1):
        cs.append(binom * lam ** n)
        binom = binom * (a - n) / (n + 1)
    return TruncatedSeries(cs, QQ)


def _lambda_products(lam, count: int, ring):
    """``[prod_{j=1}^{n-1} (lam - j) for n in 1..count]``."""
    out = []
    p = ring.one
    for n in range(1, count + 1):
        out.append(p)
        p = p * (lam - n)
    return out


def deg_log_series(lam, order: int) -> TruncatedSeries:
    """``log_lam(1 + t)``, the compositional inverse of ``e_lam(t) - 1``."""
    ring = ring_of(lam)
    cs = [ring.zero]
    for n, p in enumerate(_lambda_products(lam, order, ring), start=1):
        cs.append(p * Fraction(1, math.factorial(n)))
    return TruncatedSeries(cs, ring)


def closed_form_log_series(lam, order: int) -> TruncatedSeries:
    """``((1 + t)^lam - 1) / lam`` by binomial expansion, rational ``lam != 0``."""
    lam = QQ.coerce(lam)
    if not lam:
        raise ValueError("closed form needs a nonzero lambda")
    cs = [Fraction(0)]
    binom = Fraction(1)
    for n in range(1, order + 1):
        binom = binom * (lam - n + 1) / n
        cs.append(binom / lam)
    return TruncatedSeries(cs, QQ)


def deg_polylog_series(k: int, lam, order: int) -> TruncatedSeries:
    """Degenerate polylogarithm ``l_{k,lam}(x)`` through ``x^order``.

    The ``x^n`` coefficient is ``prod_{j=1}^{n-1} (j - lam) / ((n-1)! n^k)``;
    negative ``k`` is allowed.
    """
    ring = ring_of(lam)
    cs = [ring.zero]
    for n, p in enumerate(_lambda_products(lam, order, ring), start=1):
        sign = -1 if (n - 1) % 2 else 1
        weight = Fraction(sign, math.factorial(n - 1)) * Fraction(n) ** (-k)
        cs.append(p * weight)
    return TruncatedSeries(cs, ring)


def deg_log_inverse_check(lam, order: int) -> bool:
    """``e_lam(log_lam(1 + t)) == 1 + t`` through ``t^order``."""
    composed = series_compose(deg_exp_series(1, lam, order), deg_log_series(lam, order))
    ring = composed.ring
    expected = TruncatedSeries.one(order, ring) + TruncatedSeries.monomial(1, order, ring)
    return composed == expected


def deg_exp_inverse_check(lam, order: int) -> bool:
    """``log_lam(1 + (e_lam(t) - 1)) == t`` through ``t^order``."""
    inner = deg_exp_series(1, lam, order) - 1
    composed = series_compose(deg_log_series(lam, order), inner)
    return composed == TruncatedSeries.monomial(1, order, composed.ring)


def deg_polylog_derivative_check(k: int, lam, order: int) -> bool:
    """``d/dx l_{k,lam}(x) == l_{k-1,lam}(x) / x`` through ``x^(order-1)``."""
    lhs = series_derive(deg_polylog_series(k, lam, order))
    rhs = deg_polylog_series(k - 1, lam, order)
    # l_{k-1}(x)/x: shift down one place; the top slot is unknown, like lhs's
    shifted = list(rhs.coeffs[1:]) + [rhs.ring.zero]
    return list(lhs.coeffs[:order]) == shifted[:order]


def polylog_log_check(lam, order: int) -> bool:
    """``l_{1,lam}(x) == -log_lam(1 - x)`` through ``x^order``."""
    return deg_polylog_series(1, lam, order) == -deg_log_series(lam, order).reflect()
