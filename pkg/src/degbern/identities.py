"""Identity verifiers.

Each ``check_*`` function recomputes both sides of one identity through
independent routes and returns an :class:`IdentityCheck`.  Sequence tables
are obtained through a :class:`TableSource`, so a deliberately corrupted
source can be swapped in to confirm that the checks really look at the data.

With ``lam = LAMBDA`` (the symbolic parameter) a passing check proves the
identity for every value of lambda at the indices covered.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from . import sequences as seq
from .degenerate import (
    binomial_exp_series,
    closed_form_log_series,
    deg_exp_series,
    deg_log_series,
    deg_polylog_series,
    falling_factorial,
)
from .scalars import LAMBDA, LambdaPolynomial, lambda_product, poly_eval, render_scalar
from .series import series_compose, series_derive


@dataclass
class IdentityCheck:
    name: str
    params: dict
    verdict: str
    counterexample: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        out = {"name": self.name, "params": self.params, "verdict": self.verdict}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def lambda_label(lam) -> str:
    if isinstance(lam, LambdaPolynomial) and lam == LAMBDA:
        return "symbolic"
    return render_scalar(lam)


def _params(order, lam=None, **extra):
    p = {"N": order}
    p.update(extra)
    if lam is not None:
        p["lambda"] = lambda_label(lam)
    return p


def _verdict(name, params, cases: Iterable, notes=()):
    """First mismatching ``(index, lhs, rhs)`` case becomes the counterexample."""
    for index, lhs, rhs in cases:
        if lhs != rhs:
            return IdentityCheck(name, params, "fail", {
                "index": index, "lhs": render_scalar(lhs), "rhs": render_scalar(rhs)},
                list(notes))
    return IdentityCheck(name, params, "pass", None, list(notes))


class TableSource:
    """Where the checks read sequence tables from; defaults to :mod:`degbern.sequences`."""

    def deg_stirling2_table(self, lam, order, path="gf"):
        return seq.deg_stirling2_table(lam, order, path)

    def deg_stirling1_table(self, lam, order, path="gf"):
        return seq.deg_stirling1_table(lam, order, path)

    def stirling2_table(self, order, path="gf"):
        return seq.stirling2_table(order, path)

    def stirling1_table(self, order, path="gf"):
        return seq.stirling1_table(order, path)

    def carlitz_table(self, lam, order, x=0, path="gf"):
        return seq.carlitz_table(lam, order, x, path)

    def poly_bernoulli_table(self, k, lam, order, path="gf"):
        return seq.poly_bernoulli_table(k, lam, order, path)

    def poly_bernoulli_poly_table(self, k, lam, x, order, path="gf"):
        return seq.poly_bernoulli_poly_table(k, lam, x, order, path)


FAULT_FAMILIES = ("deg-stirling2", "deg-stirling1", "stirling2", "carlitz", "poly-bernoulli")


class CorruptedTables(TableSource):
    """Adds one to a single entry of one family's default-path table.

    ``index`` is ``(n, k)`` for Stirling families and ``(n,)`` otherwise.
    """

    def __init__(self, family: str, index: tuple):
        if family not in FAULT_FAMILIES:
            raise ValueError(f"cannot inject a fault into {family!r}")
        self.family = family
        self.index = tuple(index)

    def _bump(self, table):
        if self.index[0] >= len(table):
            return table
        rows = [list(r) if isinstance(r, tuple) else r for r in table]
        if len(self.index) == 2:
            n, k = self.index
            rows[n][k] = rows[n][k] + 1
            return tuple(tuple(r) for r in rows)
        rows[self.index[0]] = rows[self.index[0]] + 1
        return tuple(rows)

    def deg_stirling2_table(self, lam, order, path="gf"):
        table = super().deg_stirling2_table(lam, order, path)
        return self._bump(table) if self.family == "deg-stirling2" and path == "gf" else table

    def deg_stirling1_table(self, lam, order, path="gf"):
        table = super().deg_stirling1_table(lam, order, path)
        return self._bump(table) if self.family == "deg-stirling1" and path == "gf" else table

    def stirling2_table(self, order, path="gf"):
        table = super().stirling2_table(order, path)
        return self._bump(table) if self.family == "stirling2" and path == "gf" else table

    def carlitz_table(self, lam, order, x=0, path="gf"):
        table = super().carlitz_table(lam, order, x, path)
        return self._bump(table) if self.family == "carlitz" and path == "gf" else table

    def poly_bernoulli_table(self, k, lam, order, path="gf"):
        table = super().poly_bernoulli_table(k, lam, order, path)
        return self._bump(table) if self.family == "poly-bernoulli" and path == "gf" else table


DEFAULT_TABLES = TableSource()


def _sign(n):
    return -1 if n % 2 else 1


# -- poly-Bernoulli identities ---------------------------------------------------


def check_explicit_sum(order, k, lam, tables=DEFAULT_TABLES):
    """Generating function against the explicit degenerate-Stirling sum."""
    gf = tables.poly_bernoulli_table(k, lam, order)
    s2 = tables.deg_stirling2_table(lam, order)

    def cases():
        for n in range(order + 1):
            acc = 0
            for m in range(n + 1):
                acc = acc + lambda_product(m + 1, lam) * Fraction(m + 1) ** (-k) * s2[n][m]
            yield {"n": n}, gf[n], _sign(n) * acc
    return _verdict("explicit-sum", _params(order, lam, k=k), cases())


def check_k1_carlitz(order, lam, tables=DEFAULT_TABLES):
    """``beta^{(1)}_{n,lam} == (-1)^n beta_{n,lam}``."""
    pb = tables.poly_bernoulli_table(1, lam, order)
    carlitz = tables.carlitz_table(lam, order)
    return _verdict("k1-carlitz", _params(order, lam),
                    (({"n": n}, pb[n], _sign(n) * carlitz[n]) for n in range(order + 1)))


def check_iterated_integral(order, k, lam, tables=DEFAULT_TABLES):
    """Iterated-integral generating function against the defining one."""
    integral = tables.poly_bernoulli_table(k, lam, order, "integral")
    gf = tables.poly_bernoulli_table(k, lam, order)
    return _verdict("iterated-integral", _params(order, lam, k=k),
                    (({"n": n}, integral[n], gf[n]) for n in range(order + 1)))


def check_convolution(order, lam, tables=DEFAULT_TABLES):
    """``beta^{(2)}`` as a convolution of Carlitz numbers, both orderings."""
    pb = tables.poly_bernoulli_table(2, lam, order)
    b = tables.carlitz_table(lam, order)
    b1 = tables.carlitz_table(lam, order, 1 - lam)

    def cases():
        for n in range(order + 1):
            first = sum((math.comb(n, m) * b[m] * b1[n - m] * Fraction(1, n - m + 1)
                         for m in range(n + 1)), 0)
            second = sum((math.comb(n, m) * b[n - m] * b1[m] * Fraction(1, m + 1)
                          for m in range(n + 1)), 0)
            yield {"n": n, "form": 1}, pb[n], _sign(n) * first
            yield {"n": n, "form": 2}, pb[n], _sign(n) * second
    return _verdict("convolution", _params(order, lam), cases())


def weak_compositions(n: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``n``."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def composition_count(n: int, parts: int) -> int:
    return math.comb(n + parts - 1, parts - 1)


def check_compositions(order, k, lam, budget=10 ** 5, tables=DEFAULT_TABLES):
    """Multinomial sum over weak compositions of n into k parts."""
    params = _params(order, lam, k=k, budget=budget)
    if k < 1:
        return IdentityCheck("compositions", params, "pass", None, [f"k = {k} is outside k >= 1"])
    pb = tables.poly_bernoulli_table(k, lam, order)
    b = tables.carlitz_table(lam, order)
    b1 = tables.carlitz_table(lam, order, 1 - lam)
    notes = []
    skipped = [n for n in range(order + 1) if composition_count(n, k) > budget]
    if skipped:
        notes.append(f"skipped beyond budget: n = {skipped[0]}..{skipped[-1]} "
                     f"({composition_count(skipped[0], k)} or more compositions)")

    def cases():
        for n in range(order + 1):
            if n in skipped:
                continue
            acc = 0
            for comp in weak_compositions(n, k):
                term = math.factorial(n)
                for part in comp:
                    term //= math.factorial(part)
                term = Fraction(term)
                value = 1
                partial = 0
                for part in comp[:-1]:
                    partial += part
                    value = value * b1[part] * Fraction(1, partial + 1)
                acc = acc + term * value * b[comp[-1]]
            yield {"n": n}, pb[n], _sign(n) * acc
    return _verdict("compositions", params, cases(), notes)


def check_unit_shift(order, k, lam, tables=DEFAULT_TABLES):
    """``beta^{(k)}_{n,lam}(1) - beta^{(k)}_{n,lam}`` as a degenerate-Stirling sum."""
    at1 = tables.poly_bernoulli_poly_table(k, lam, 1, order)
    at0 = tables.poly_bernoulli_table(k, lam, order)
    s2 = tables.deg_stirling2_table(lam, order)

    def cases():
        for n in range(1, order + 1):
            acc = 0
            for m in range(1, n + 1):
                acc = acc + lambda_product(m, lam) * Fraction(m) ** (1 - k) * s2[n][m]
            yield {"n": n}, at1[n] - at0[n], _sign(n) * acc
    return _verdict("unit-shift", _params(order, lam, k=k), cases())


def check_deg_stirling_sum(order, lam, tables=DEFAULT_TABLES):
    """``(-1)^(n-1) sum_m prod_{j<m}(lam - j) S_{2,lam}(n, m) == [n == 1]``."""
    s2 = tables.deg_stirling2_table(lam, order)

    def cases():
        for n in range(1, order + 1):
            acc = 0
            for m in range(1, n + 1):
                acc = acc + lambda_product(m, lam) * s2[n][m]
            yield {"n": n}, -_sign(n) * acc, int(n == 1)
    return _verdict("deg-stirling-sum", _params(order, lam), cases())


def check_stirling_sum(order, tables=DEFAULT_TABLES):
    """``sum_m (-1)^(n-m) (m-1)! S_2(n, m) == [n == 1]``."""
    s2 = tables.stirling2_table(order)

    def cases():
        for n in range(1, order + 1):
            acc = sum(_sign(n - m) * math.factorial(m - 1) * s2[n][m] for m in range(1, n + 1))
            yield {"n": n}, acc, int(n == 1)
    return _verdict("stirling-sum", _params(order), cases())


def check_deg_stirling1_routes(order, lam=LAMBDA, tables=DEFAULT_TABLES):
    """Recurrence, generating-function and connection-inversion tables of S_{1,lam} agree."""
    gf = tables.deg_stirling1_table(lam, order)
    rec = tables.deg_stirling1_table(lam, order, "recurrence")
    inv = tables.deg_stirling1_table(lam, order, "inversion")

    def cases():
        for n in range(order + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k, "route": "recurrence"}, rec[n][k], gf[n][k]
                yield {"n": n, "k": k, "route": "inversion"}, inv[n][k], gf[n][k]
    return _verdict("deg-stirling1-routes", _params(order, lam), cases())


def check_inversion(order, k, lam, tables=DEFAULT_TABLES):
    """Inversion through S_{1,lam}, checked with the lambda prefactor cleared.

    For a rational lambda the divided form is also checked wherever the
    prefactor ``prod_{j=1}^n (lam - j)`` is nonzero.
    """
    pb = tables.poly_bernoulli_table(k, lam, order)
    s1 = tables.deg_stirling1_table(lam, order)
    symbolic = isinstance(lam, LambdaPolynomial)
    undefined = []

    def cases():
        for n in range(order + 1):
            total = 0
            for m in range(n + 1):
                total = total + _sign(m) * pb[m] * s1[n][m]
            prefactor = lambda_product(n + 1, lam)
            yield {"n": n, "form": "cleared"}, total * Fraction(n + 1) ** k, prefactor
            if symbolic:
                continue
            if not prefactor:
                undefined.append(n)
                continue
            yield {"n": n, "form": "divided"}, Fraction(1) / Fraction(n + 1) ** k, \
                total / prefactor

    check = _verdict("inversion", _params(order, lam, k=k), cases())
    if undefined:
        check.notes.append("divided form undefined at this lambda for n = "
                           + ", ".join(map(str, undefined)))
    return check


def check_poly_binomial(order, k, lam, x, tables=DEFAULT_TABLES):
    """Polynomial generating function against the binomial sum over the numbers."""
    gf = tables.poly_bernoulli_poly_table(k, lam, x, order)
    s = tables.poly_bernoulli_poly_table(k, lam, x, order, "sum")
    return _verdict("poly-binomial", _params(order, lam, k=k, x=render_scalar(x)),
                    (({"n": n}, gf[n], s[n]) for n in range(order + 1)))


# -- degenerate-core identities ---------------------------------------------------


def _series_cases(lhs, rhs, upto=None):
    upto = lhs.order if upto is None else upto
    for n in range(upto + 1):
        yield {"n": n}, lhs[n], rhs[n]


def check_log_exp_inverse(order, lam):
    """``e_lam(log_lam(1 + t)) = 1 + t`` and ``log_lam(e_lam(t)) = t``."""
    exp1 = deg_exp_series(1, lam, order)
    log = deg_log_series(lam, order)
    forward = series_compose(exp1, log)
    backward = series_compose(log, exp1 - 1)

    def cases():
        for n in range(order + 1):
            yield {"n": n, "direction": "exp(log)"}, forward[n], int(n <= 1)
            yield {"n": n, "direction": "log(exp)"}, backward[n], int(n == 1)
    return _verdict("log-exp-inverse", _params(order, lam), cases())


def check_log_closed_form(order, lam):
    """Series of ``log_lam(1 + t)`` against ``((1 + t)^lam - 1) / lam`` (rational lam != 0)."""
    return _verdict("log-closed-form", _params(order, lam),
                    _series_cases(deg_log_series(lam, order),
                                  closed_form_log_series(lam, order)))


def check_exp_binomial(order, lam, x):
    """Falling-factorial coefficients of ``e_lam^x(t)`` against the binomial expansion."""
    return _verdict("exp-binomial", _params(order, lam, x=render_scalar(x)),
                    _series_cases(deg_exp_series(x, lam, order),
                                  binomial_exp_series(x, lam, order)))


def check_polylog_derivative(order, k, lam):
    """``d/dx l_{k,lam}(x) = l_{k-1,lam}(x) / x`` through ``x^(N-1)``."""
    lhs = series_derive(deg_polylog_series(k, lam, order))
    rhs = deg_polylog_series(k - 1, lam, order)
    return _verdict("polylog-derivative", _params(order, lam, k=k),
                    (({"n": n}, lhs[n], rhs[n + 1]) for n in range(order)))


def check_polylog_log(order, lam):
    """``l_{1,lam}(x) = -log_lam(1 - x)``."""
    return _verdict("polylog-log", _params(order, lam),
                    _series_cases(deg_polylog_series(1, lam, order),
                                  -deg_log_series(lam, order).reflect()))


def check_exp_derivative(order, lam):
    """``d/dx e_lam(-x) = -e_lam^(1-lam)(-x)`` through ``x^(N-1)``."""
    lhs = series_derive(deg_exp_series(1, lam, order).reflect())
    rhs = -deg_exp_series(1 - lam, lam, order).reflect()
    return _verdict("exp-derivative", _params(order, lam), _series_cases(lhs, rhs, order - 1))


def check_exp_log_substitution(order, lam, xs=(Fraction(1, 2), Fraction(-3), Fraction(5, 3))):
    """``e_lam^x(log_lam(1 + t)) = (1 + t)^x`` for a few rational x."""
    log = deg_log_series(lam, order)

    def cases():
        for x in xs:
            lhs = series_compose(deg_exp_series(x, lam, order), log)
            for n in range(order + 1):
                rhs = falling_factorial(x, n) * Fraction(1, math.factorial(n))
                yield {"x": render_scalar(x), "n": n}, lhs[n], rhs
    return _verdict("exp-log-substitution", _params(order, lam), cases())


def check_orthogonality(order, lam, tables=DEFAULT_TABLES):
    """``S_{1,lam}`` and ``S_{2,lam}`` are mutually inverse lower-triangular matrices."""
    s1 = tables.deg_stirling1_table(lam, order)
    s2 = tables.deg_stirling2_table(lam, order)

    def cases():
        for n in range(order + 1):
            for j in range(n + 1):
                a = sum((s1[n][m] * s2[m][j] for m in range(j, n + 1)), 0)
                b = sum((s2[n][m] * s1[m][j] for m in range(j, n + 1)), 0)
                yield {"n": n, "j": j, "product": "S1*S2"}, a, int(n == j)
                yield {"n": n, "j": j, "product": "S2*S1"}, b, int(n == j)
    return _verdict("orthogonality", _params(order, lam), cases())


# -- classical limits ----------------------------------------------------------------


LIMIT_FAMILIES = ("carlitz", "deg-stirling1", "deg-stirling2", "deg-log", "deg-polylog",
                  "poly-bernoulli")


def limit_rows(family: str, order: int, k: int = 1, tables=DEFAULT_TABLES):
    """Rows ``(index, value at lambda = 0, classical value)`` for one family.

    Degenerate values come from symbolic-lambda tables evaluated at 0; the
    classical side is computed without any degenerate machinery.
    """
    at0 = lambda v: poly_eval(v, 0)  # noqa: E731
    rows = []
    if family == "carlitz":
        deg = tables.carlitz_table(LAMBDA, order)
        classical = seq.bernoulli_table(order, "recurrence")
        rows = [({"n": n}, at0(deg[n]), classical[n]) for n in range(order + 1)]
    elif family in ("deg-stirling1", "deg-stirling2"):
        if family == "deg-stirling1":
            deg = tables.deg_stirling1_table(LAMBDA, order)
            classical = seq.stirling1_table(order, "expansion")
        else:
            deg = tables.deg_stirling2_table(LAMBDA, order)
            classical = seq.stirling2_table(order, "recurrence")
        rows = [({"n": n, "k": j}, at0(deg[n][j]), Fraction(classical[n][j]))
                for n in range(order + 1) for j in range(n + 1)]
    elif family == "deg-log":
        deg = deg_log_series(LAMBDA, order)
        rows = [({"n": n}, at0(deg[n]), Fraction(_sign(n - 1), n) if n else Fraction(0))
                for n in range(order + 1)]
    elif family == "deg-polylog":
        deg = deg_polylog_series(k, LAMBDA, order)
        rows = [({"n": n, "k": k}, at0(deg[n]), Fraction(n) ** (-k) if n else Fraction(0))
                for n in range(order + 1)]
    elif family == "poly-bernoulli":
        deg = tables.poly_bernoulli_table(k, LAMBDA, order)
        if k == 1:
            b = seq.bernoulli_table(order, "recurrence")
            classical = [_sign(n) * b[n] for n in range(order + 1)]
        else:
            classical = seq.classical_poly_bernoulli_table(k, order)
        rows = [({"n": n, "k": k}, at0(deg[n]), classical[n]) for n in range(order + 1)]
    else:
        raise ValueError(f"no classical limit for family {family!r}")
    return rows


def check_limits(order, k_values=(1, 2), tables=DEFAULT_TABLES):
    """Every symbolic table evaluated at lambda = 0 equals its classical counterpart."""
    def cases():
        for family in LIMIT_FAMILIES:
            ks = k_values if family in ("deg-polylog", "poly-bernoulli") else (1,)
            for k in ks:
                for index, deg, classical in limit_rows(family, order, k, tables):
                    yield dict(index, family=family), deg, classical
    return _verdict("limits", _params(order, k=list(k_values)), cases())


# -- the suite ---------------------------------------------------------------------


@dataclass
class SuiteConfig:
    order: int = 16
    k_range: tuple = tuple(range(-2, 5))
    lambdas: tuple = ()
    symbolic: bool = True
    composition_budget: int = 10 ** 5
    tables: Any = DEFAULT_TABLES

    def representations(self):
        reps = [LAMBDA] if self.symbolic else []
        return reps + [Fraction(v) for v in self.lambdas]


def run_suite(config: SuiteConfig | None = None) -> list:
    """Run every verifier; failures are recorded, never raised."""
    config = config or SuiteConfig()
    N, tables = config.order, config.tables
    ks = list(config.k_range)
    report = []
    for lam in config.representations():
        symbolic = isinstance(lam, LambdaPolynomial)
        report.append(check_log_exp_inverse(N, lam))
        if not symbolic and lam:
            report.append(check_log_closed_form(N, lam))
            report.append(check_exp_binomial(N, lam, Fraction(3, 2)))
        report.append(check_polylog_log(N, lam))
        report.extend(check_polylog_derivative(N, k, lam) for k in ks)
        report.append(check_exp_derivative(N, lam))
        report.append(check_exp_log_substitution(N, lam))
        report.append(check_orthogonality(N, lam, tables))
        report.append(check_deg_stirling1_routes(N, lam, tables))
        report.extend(check_explicit_sum(N, k, lam, tables) for k in ks)
        report.append(check_k1_carlitz(N, lam, tables))
        report.extend(check_iterated_integral(N, k, lam, tables) for k in ks if k >= 2)
        report.append(check_convolution(N, lam, tables))
        report.extend(check_compositions(N, k, lam, config.composition_budget, tables)
                      for k in ks if k >= 1)
        report.extend(check_unit_shift(N, k, lam, tables) for k in ks)
        report.extend(check_poly_binomial(N, k, lam, Fraction(1, 3), tables) for k in ks)
        report.append(check_deg_stirling_sum(N, lam, tables))
        report.extend(check_inversion(N, k, lam, tables) for k in ks)
        if symbolic:
            report.append(check_limits(N, tuple(ks) or (1,), tables))
    if report:
        report.append(check_stirling_sum(N, tables))
    return report


def report_to_json(report) -> str:
    return json.dumps([c.to_dict() for c in report], indent=2)
