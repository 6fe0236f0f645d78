"""Stirling, Bernoulli, Carlitz and degenerate poly-Bernoulli families.

Every family has at least two computation routes, selected with ``path=``.
Tables are built once per ``(lambda, order, ...)`` and cached; they are
returned as tuples so callers cannot mutate a shared table.

Table conventions: Stirling tables are ``table[n][k]`` for ``0 <= k, n <= N``
(zero above the diagonal); Bernoulli-type tables are ``table[n]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .degenerate import (
    deg_exp_series,
    deg_falling_factorial,
    deg_log_series,
    deg_polylog_series,
    falling_factorial,
)
from .scalars import lambda_product, ring_of
from .series import (
    TruncatedSeries,
    ValuatedSeries,
    series_compose,
    series_derive,
    valuated_from,
    valuated_integrate,
    valuated_mul,
)

cached = lru_cache(maxsize=None, typed=True)


@dataclass(frozen=True)
class SequenceValue:
    """One exact value of a named family, tagged with the route that produced it."""

    family: str
    n: int
    k: int | None
    lam: Any
    value: Any
    path: str
    x: Any = 0


def _check_path(path, allowed):
    if path not in allowed:
        raise ValueError(f"unknown path {path!r}; expected one of {', '.join(allowed)}")


def _freeze(rows):
    return tuple(tuple(r) for r in rows)


def _entry(table, n, k):
    if n < 0 or k < 0 or n >= len(table) or k > n:
        return 0
    return table[n][k]


def _powers_egf(base: TruncatedSeries, order: int):
    """Rows ``n! [t^n] base^k / k!`` for k = 0..order; ``base`` has zero constant term."""
    ring = base.ring
    cols = []
    p = TruncatedSeries.one(order, ring)
    for k in range(order + 1):
        cols.append(p.egf())
        p = p * base * Fraction(1, k + 1)
    return _freeze([[cols[k][n] if k <= n else ring.zero for k in range(order + 1)]
                    for n in range(order + 1)])


def _falling_coeffs(n: int):
    """Monomial coefficients of ``(x)_n`` (index = power of x)."""
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return coeffs


def _deg_falling_coeffs(n: int, lam, ring):
    """Monomial coefficients in x of ``x (x - lam) ... (x - (n-1) lam)``."""
    coeffs = [ring.one]
    for j in range(n):
        shift = j * lam
        nxt = [ring.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - shift * c
        coeffs = nxt
    return coeffs


def _connection(targets, basis, order, ring):
    """Solve ``targets[n] = sum_k C[n][k] basis[k]`` for monic triangular ``basis``."""
    rows = []
    for n in range(order + 1):
        rest = list(targets[n]) + [ring.zero] * (order + 1 - len(targets[n]))
        row = [ring.zero] * (order + 1)
        for k in range(n, -1, -1):
            c = ring.coerce(rest[k])
            row[k] = c
            if c:
                for i, b in enumerate(basis[k]):
                    rest[i] = rest[i] - c * b
        rows.append(row)
    return _freeze(rows)


# -- classical Stirling numbers -------------------------------------------------


@cached
def stirling2_table(order: int, path: str = "gf"):
    """``S_2(n, k)``: ``(e^t - 1)^k / k!`` (gf) or ``S(n+1,k) = k S(n,k) + S(n,k-1)``."""
    _check_path(path, ("gf", "recurrence"))
    if path == "gf":
        base = TruncatedSeries([0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)])
        return _freeze([[int(v) for v in row] for row in _powers_egf(base, order)])
    rows = [[0] * (order + 1) for _ in range(order + 1)]
    rows[0][0] = 1
    for n in range(order):
        for k in range(1, n + 2):
            rows[n + 1][k] = k * rows[n][k] + rows[n][k - 1]
    return _freeze(rows)


def stirling2(n: int, k: int, path: str = "gf"):
    return _entry(stirling2_table(max(n, 0), path), n, k)


@cached
def stirling1_table(order: int, path: str = "gf"):
    """Signed ``S_1(n, k)``: ``log(1 + t)^k / k!`` (gf) or expansion of ``(x)_n``."""
    _check_path(path, ("gf", "expansion"))
    if path == "gf":
        base = TruncatedSeries([0] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)])
        return _freeze([[int(v) for v in row] for row in _powers_egf(base, order)])
    rows = []
    for n in range(order + 1):
        c = _falling_coeffs(n)
        rows.append(c + [0] * (order - n))
    return _freeze(rows)


def stirling1(n: int, k: int, path: str = "gf"):
    return _entry(stirling1_table(max(n, 0), path), n, k)


# -- degenerate Stirling numbers ------------------------------------------------


@cached
def deg_stirling2_table(lam, order: int, path: str = "gf"):
    """``S_{2,lam}(n, k)`` by three routes.

    gf: ``(e_lam(t) - 1)^k / k!``; sum: ``(1/k!) sum_j (-1)^(k-j) C(k,j) (j)_{n,lam}``;
    inversion: solve ``(x)_{n,lam} = sum_k S_{2,lam}(n,k) (x)_k``.
    """
    _check_path(path, ("gf", "sum", "inversion"))
    ring = ring_of(lam)
    if path == "gf":
        return _powers_egf(deg_exp_series(1, lam, order) - 1, order)
    if path == "sum":
        # (j)_{n,lam} for all j <= order, n <= order
        dff = [[deg_falling_factorial(j, n, lam) for n in range(order + 1)]
               for j in range(order + 1)]
        rows = []
        for n in range(order + 1):
            row = []
            for k in range(order + 1):
                if k > n:
                    row.append(ring.zero)
                    continue
                acc = ring.zero
                for j in range(k + 1):
                    acc = acc + (-1) ** (k - j) * math.comb(k, j) * dff[j][n]
                row.append(ring.coerce(acc * Fraction(1, math.factorial(k))))
            rows.append(row)
        return _freeze(rows)
    targets = [_deg_falling_coeffs(n, lam, ring) for n in range(order + 1)]
    basis = [_falling_coeffs(k) for k in range(order + 1)]
    return _connection(targets, basis, order, ring)


def deg_stirling2(n: int, k: int, lam, path: str = "gf"):
    return _entry(deg_stirling2_table(lam, max(n, 0), path), n, k)


@cached
def deg_stirling1_table(lam, order: int, path: str = "gf"):
    """``S_{1,lam}(n, k)`` by three routes.

    gf: ``log_lam(1 + t)^k / k!``; recurrence:
    ``S(n+1,k) = S(n,k-1) + (lam k - n) S(n,k)``; inversion: solve
    ``(x)_n = sum_k S_{1,lam}(n,k) (x)_{k,lam}`` in the monomial basis.
    """
    _check_path(path, ("gf", "recurrence", "inversion"))
    ring = ring_of(lam)
    if path == "gf":
        return _powers_egf(deg_log_series(lam, order), order)
    if path == "recurrence":
        rows = [[ring.zero] * (order + 1) for _ in range(order + 1)]
        rows[0][0] = ring.one
        for n in range(order):
            for k in range(n + 2):
                prev = rows[n][k - 1] if k >= 1 else ring.zero
                rows[n + 1][k] = prev + (lam * k - n) * rows[n][k]
        return _freeze(rows)
    targets = [_falling_coeffs(n) for n in range(order + 1)]
    basis = [_deg_falling_coeffs(k, lam, ring) for k in range(order + 1)]
    return _connection(targets, basis, order, ring)


def deg_stirling1(n: int, k: int, lam, path: str = "gf"):
    return _entry(deg_stirling1_table(lam, max(n, 0), path), n, k)


# -- Bernoulli numbers and polynomials ----------------------------------------


@cached
def bernoulli_table(order: int, path: str = "gf"):
    """Classical ``B_n`` (``B_1 = -1/2``): ``t / (e^t - 1)`` or the standard recurrence."""
    _check_path(path, ("gf", "recurrence"))
    if path == "gf":
        exp_shifted = TruncatedSeries(
            [Fraction(1, math.factorial(n + 1)) for n in range(order + 1)])
        return tuple((TruncatedSeries.one(order) / exp_shifted).egf())
    b = []
    for n in range(order + 1):
        if n == 0:
            b.append(Fraction(1))
            continue
        acc = sum(math.comb(n + 1, j) * b[j] for j in range(n))
        b.append(Fraction(-acc, n + 1))
    return tuple(b)


def bernoulli(n: int, path: str = "gf"):
    return bernoulli_table(n, path)[n]


def bernoulli_poly(n: int, x=0, path: str = "gf"):
    """``B_n(x) = sum_j C(n, j) B_j x^(n-j)``."""
    b = bernoulli_table(n, path)
    return sum(math.comb(n, j) * b[j] * x ** (n - j) for j in range(n + 1))


@cached
def carlitz_table(lam, order: int, x=0, path: str = "gf"):
    """Carlitz degenerate Bernoulli polynomials ``beta_{n,lam}(x)``.

    gf: ``t / (e_lam(t) - 1) * e_lam^x(t)`` by series division; recurrence:
    ``sum_{j=1}^{n} C(n,j) (1)_{j,lam} beta_{n-j} = [n == 1]`` solved for the
    numbers, then the Appell sum with ``(x)_{m,lam}``.
    """
    _check_path(path, ("gf", "recurrence"))
    ring = ring_of(lam, x)
    if path == "gf":
        denom = valuated_from(deg_exp_series(1, lam, order + 1) - 1)
        t = ValuatedSeries(1, TruncatedSeries.one(order, ring))
        quotient = valuated_mul(t, denom.inverse()).to_series(order)
        return tuple(ring.coerce(v) for v in (quotient * deg_exp_series(x, lam, order)).egf())
    ones = [deg_falling_factorial(1, j, lam) for j in range(order + 2)]
    numbers = []
    for n in range(order + 1):
        # coefficient of t^(n+1)/(n+1)! in (e_lam(t) - 1) * B(t)
        m = n + 1
        acc = ring.one if m == 1 else ring.zero
        for j in range(2, m + 1):
            acc = acc - math.comb(m, j) * ones[j] * numbers[m - j]
        numbers.append(ring.coerce(acc * Fraction(1, m)))
    if not x:
        return tuple(numbers)
    out = []
    for n in range(order + 1):
        acc = ring.zero
        for j in range(n + 1):
            acc = acc + math.comb(n, j) * numbers[j] * deg_falling_factorial(x, n - j, lam)
        out.append(ring.coerce(acc))
    return tuple(out)


def carlitz_beta_poly(n: int, lam, x=0, path: str = "gf"):
    return carlitz_table(lam, n, x, path)[n]


# -- degenerate poly-Bernoulli numbers and polynomials ------------------------


def _one_minus_exp_neg(lam, order: int) -> TruncatedSeries:
    """``1 - e_lam(-t)`` through ``t^order``."""
    return 1 - deg_exp_series(1, lam, order).reflect()


def _gf_poly_bernoulli(k, lam, order):
    u = _one_minus_exp_neg(lam, order + 1)
    lk_u = series_compose(deg_polylog_series(k, lam, order + 1), u)
    quotient = valuated_mul(valuated_from(lk_u), valuated_from(u).inverse())
    return quotient.to_series(order).egf()


def _explicit_poly_bernoulli(k, lam, order, s2):
    ring = ring_of(lam)
    out = []
    for n in range(order + 1):
        acc = ring.zero
        for m in range(n + 1):
            weight = lambda_product(m + 1, lam) * Fraction(m + 1) ** (-k)
            acc = acc + weight * _entry(s2, n, m)
        out.append(ring.coerce(acc if n % 2 == 0 else -acc))
    return out


def iterated_integral_gf(k: int, lam, order: int) -> TruncatedSeries:
    """Generating function of ``beta^{(k)}_{n,lam}`` from ``k - 1`` nested integrals.

    With ``u = 1 - e_lam(-t)`` and ``w = e_lam^(1-lam)(-t) / u`` (a simple pole),
    the integrand starts as ``w * t``; each further level integrates and
    multiplies by ``w``; the outermost level integrates and divides by ``u``.
    """
    if k < 2:
        raise ValueError(f"the iterated-integral form needs k >= 2, got k = {k}")
    ring = ring_of(lam)
    u = valuated_from(_one_minus_exp_neg(lam, order + 1))
    u_inv = u.inverse()
    w = valuated_mul(valuated_from(deg_exp_series(1 - lam, lam, order + 1).reflect()), u_inv)
    t = ValuatedSeries(1, TruncatedSeries.one(order + 1, ring))
    g = valuated_mul(w, t)
    for _ in range(k - 2):
        g = valuated_mul(w, valuated_integrate(g))
    g = valuated_mul(valuated_integrate(g), u_inv)
    return g.to_series(order)


@cached
def poly_bernoulli_table(k: int, lam, order: int, path: str = "gf"):
    """Degenerate poly-Bernoulli numbers ``beta^{(k)}_{n,lam}`` for n <= order.

    gf: ``l_{k,lam}(u) / u`` with ``u = 1 - e_lam(-t)``; explicit:
    ``(-1)^n sum_m prod_{j=1}^m (lam - j) / (m+1)^k S_{2,lam}(n, m)``;
    integral: :func:`iterated_integral_gf` (k >= 2 only).
    """
    _check_path(path, ("gf", "explicit", "integral"))
    ring = ring_of(lam)
    if path == "gf":
        vals = _gf_poly_bernoulli(k, lam, order)
    elif path == "explicit":
        vals = _explicit_poly_bernoulli(k, lam, order, deg_stirling2_table(lam, order))
    else:
        vals = iterated_integral_gf(k, lam, order).egf()
    return tuple(ring.coerce(v) for v in vals)


def poly_bernoulli(n: int, k: int, lam, path: str = "gf"):
    return poly_bernoulli_table(k, lam, n, path)[n]


def poly_bernoulli_iterated_integral(n: int, k: int, lam):
    return poly_bernoulli_table(k, lam, n, "integral")[n]


@cached
def poly_bernoulli_poly_table(k: int, lam, x, order: int, path: str = "gf"):
    """``beta^{(k)}_{n,lam}(x)``: gf times ``e_lam^x(-t)``, or the binomial sum."""
    _check_path(path, ("gf", "sum"))
    ring = ring_of(lam, x)
    if path == "gf":
        numbers = TruncatedSeries.from_egf(poly_bernoulli_table(k, lam, order), ring)
        vals = (numbers * deg_exp_series(x, lam, order).reflect()).egf()
        return tuple(ring.coerce(v) for v in vals)
    numbers = poly_bernoulli_table(k, lam, order, "explicit")
    out = []
    for n in range(order + 1):
        acc = ring.zero
        for l in range(n + 1):
            sign = -1 if (n - l) % 2 else 1
            acc = acc + sign * math.comb(n, l) * numbers[l] * deg_falling_factorial(x, n - l, lam)
        out.append(ring.coerce(acc))
    return tuple(out)


def poly_bernoulli_poly(n: int, k: int, lam, x, path: str = "gf"):
    return poly_bernoulli_poly_table(k, lam, x, n, path)[n]


@cached
def classical_poly_bernoulli_table(k: int, order: int):
    """Kaneko's poly-Bernoulli numbers ``(-1)^n sum_m (-1)^m m! S_2(n,m) / (m+1)^k``."""
    s2 = stirling2_table(order, "recurrence")
    out = []
    for n in range(order + 1):
        acc = sum((-1) ** m * math.factorial(m) * s2[n][m] * Fraction(m + 1) ** (-k)
                  for m in range(n + 1))
        out.append(Fraction((-1) ** n) * acc)
    return tuple(out)


def exp_derivative_check(lam, order: int) -> bool:
    """``d/dx e_lam(-x) == -e_lam^(1-lam)(-x)`` through ``x^(order-1)``."""
    lhs = series_derive(deg_exp_series(1, lam, order).reflect())
    rhs = -deg_exp_series(1 - lam, lam, order).reflect()
    return lhs.coeffs[:order] == rhs.coeffs[:order]


def exp_log_substitution_check(x, lam, order: int) -> bool:
    """``e_lam^x(log_lam(1 + t)) == (1 + t)^x`` with ``(x)_n / n!`` on the right."""
    lhs = series_compose(deg_exp_series(x, lam, order), deg_log_series(lam, order))
    rhs = TruncatedSeries.from_egf([falling_factorial(x, n) for n in range(order + 1)],
                                   lhs.ring)
    return lhs == rhs
