"""Acceptance criteria 1-10.

Each test carries ``@pytest.mark.criterion``; the terminal summary prints one
PASS/FAIL line per criterion.  Run just these with::

    pytest tests/test_acceptance.py -v
"""

import csv
import io
import json
import math
from fractions import Fraction

import pytest

from degbern import identities as ids
from degbern import sequences as seq
from degbern.cli import main
from degbern.degenerate import deg_log_series, deg_polylog_series
from degbern.scalars import LAMBDA, parse_scalar, poly_eval, render_scalar

from oracles import bernoulli_recurrence, carlitz_sympy, set_partitions_count, signed_stirling1

F = Fraction
K_RANGE = range(-2, 5)
criterion = pytest.mark.criterion


def at0(v):
    return poly_eval(v, 0)


def stirling2_oracle(N):
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    s = [[1] + [0] * N]
    for n in range(1, N + 1):
        s.append([0] + [k * s[n - 1][k] + s[n - 1][k - 1] for k in range(1, N + 1)])
    return s


def stirling1_oracle(N):
    # s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
    s = [[1] + [0] * N]
    for n in range(1, N + 1):
        s.append([0] + [s[n - 1][k - 1] - (n - 1) * s[n - 1][k] for k in range(1, N + 1)])
    return s


def assert_passed(check):
    assert check.passed, check.to_dict()


@criterion(1, "gf and explicit-sum poly-Bernoulli agree, n <= 16, k = -2..4, symbolic lambda")
@pytest.mark.parametrize("k", K_RANGE)
def test_criterion_1(k):
    gf = seq.poly_bernoulli_table(k, LAMBDA, 16, "gf")
    assert gf == seq.poly_bernoulli_table(k, LAMBDA, 16, "explicit")
    assert_passed(ids.check_explicit_sum(16, k, LAMBDA))


@criterion(2, "k = 1 poly-Bernoulli is (-1)^n Carlitz; spot values by hand division")
def test_criterion_2():
    assert_passed(ids.check_k1_carlitz(16, LAMBDA))
    carlitz = seq.carlitz_table(LAMBDA, 16)
    pb = seq.poly_bernoulli_table(1, LAMBDA, 16)
    assert all(pb[n] == (-1) ** n * carlitz[n] for n in range(17))
    assert carlitz[1] == (LAMBDA - 1) / 2
    assert carlitz[2] == (1 - LAMBDA ** 2) / 6
    oracle = carlitz_sympy(4)
    assert [list(c.coefficients) for c in carlitz[:5]] == [
        [F(c) for c in row] for row in oracle]


@criterion(3, "iterated-integral route equals gf and explicit, k = 2, 3, n <= 12")
@pytest.mark.parametrize("lam", [LAMBDA, F(1, 2)], ids=["symbolic", "1/2"])
@pytest.mark.parametrize("k", [2, 3])
def test_criterion_3(k, lam):
    integral = seq.poly_bernoulli_table(k, lam, 12, "integral")
    assert integral == seq.poly_bernoulli_table(k, lam, 12, "gf")
    assert integral == seq.poly_bernoulli_table(k, lam, 12, "explicit")
    assert_passed(ids.check_iterated_integral(12, k, lam))


@criterion(4, "convolution (k = 2) and composition (k = 3, 4) formulas, symbolic lambda")
def test_criterion_4():
    assert_passed(ids.check_convolution(12, LAMBDA))
    for k in (2, 3, 4):
        check = ids.check_compositions(12, k, LAMBDA)
        assert_passed(check)
        # every composition enumerated: no budget notes
        assert not check.notes


@criterion(5, "Stirling-sum identities for poly-Bernoulli, n <= 16, k = -2..4")
@pytest.mark.parametrize("k", K_RANGE)
def test_criterion_5(k):
    assert_passed(ids.check_unit_shift(16, k, LAMBDA))
    if k == 1:
        assert_passed(ids.check_deg_stirling_sum(16, LAMBDA))
        assert_passed(ids.check_stirling_sum(16))


@criterion(5, "Stirling-sum identities for poly-Bernoulli, n <= 16, k = -2..4")
def test_criterion_5_brute_force():
    for n in range(1, 8):
        acc = sum((-1) ** (n - m) * math.factorial(m - 1) * set_partitions_count(n, m)
                  for m in range(1, n + 1))
        assert acc == int(n == 1)
    s2 = seq.stirling2_table(16)
    assert [list(r) for r in s2] == stirling2_oracle(16)


@criterion(6, "degenerate S_1: recurrence = gf = inversion, n <= 16; lambda = 0 is classical")
def test_criterion_6():
    gf = seq.deg_stirling1_table(LAMBDA, 16, "gf")
    assert gf == seq.deg_stirling1_table(LAMBDA, 16, "recurrence")
    assert gf == seq.deg_stirling1_table(LAMBDA, 16, "inversion")
    assert_passed(ids.check_deg_stirling1_routes(16, LAMBDA))
    classical = stirling1_oracle(16)
    assert [[at0(v) for v in row] for row in gf] == classical
    for n in range(7):
        assert all(classical[n][k] == signed_stirling1(n, k) for k in range(n + 1))


@criterion(7, "inversion identity, cleared form symbolic; divided form at lambda = 5/7")
@pytest.mark.parametrize("k", K_RANGE)
def test_criterion_7(k):
    assert_passed(ids.check_inversion(12, k, LAMBDA))
    divided = ids.check_inversion(12, k, F(5, 7))
    assert_passed(divided)
    assert not divided.notes


@criterion(8, "degenerate log/exp inverses, series identities, orthogonality")
def test_criterion_8():
    N = 16
    checks = [ids.check_log_exp_inverse(N, LAMBDA), ids.check_exp_derivative(N, LAMBDA),
              ids.check_polylog_log(N, LAMBDA), ids.check_exp_log_substitution(N, LAMBDA),
              ids.check_orthogonality(N, LAMBDA)]
    checks += [ids.check_polylog_derivative(N, k, LAMBDA) for k in K_RANGE]
    for c in checks:
        assert_passed(c)


@criterion(9, "lambda = 0 gives B_n, S_1, S_2, log(1+t) and Li_k coefficients, n <= 16")
def test_criterion_9():
    N = 16
    b = bernoulli_recurrence(N)
    assert [at0(v) for v in seq.carlitz_table(LAMBDA, N)] == b
    assert [at0(v) for v in seq.poly_bernoulli_table(1, LAMBDA, N)] == [
        (-1) ** n * b[n] for n in range(N + 1)]
    assert [[at0(v) for v in row] for row in seq.deg_stirling2_table(LAMBDA, N)] == stirling2_oracle(N)
    assert [[at0(v) for v in row] for row in seq.deg_stirling1_table(LAMBDA, N)] == stirling1_oracle(N)
    assert [at0(v) for v in deg_log_series(LAMBDA, N)] == [0] + [
        F((-1) ** (n - 1), n) for n in range(1, N + 1)]
    for k in K_RANGE:
        assert [at0(v) for v in deg_polylog_series(k, LAMBDA, N)] == [0] + [
            F(n) ** (-k) for n in range(1, N + 1)]
    assert_passed(ids.check_limits(N, tuple(K_RANGE)))


def _run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@criterion(10, "CLI: clean verify exits 0, fault injection exits 1, tables round-trip")
def test_criterion_10(capsys):
    code, out, _ = _run(capsys, "verify", "--order", "12", "--k-range", "-2..4",
                        "--lambda", "symbolic")
    assert code == 0
    assert all(r["verdict"] == "pass" for r in json.loads(out))

    code, out, err = _run(capsys, "verify", "--order", "8", "--lambda", "1/2",
                          "--inject-fault", "carlitz:3")
    assert code == 1
    bad = [r for r in json.loads(out) if r["verdict"] == "fail"]
    assert bad and all("counterexample" in r for r in bad)
    assert "FAIL" in err

    for family in ("poly-bernoulli", "deg-stirling2", "carlitz"):
        code, out, _ = _run(capsys, "table", "--family", family, "--k", "3", "--n-max", "8")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows
        for r in rows:
            assert render_scalar(parse_scalar(r["value"])) == r["value"]
