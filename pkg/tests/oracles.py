"""Independent reference computations used to freeze expected values.

Nothing here imports degbern: brute-force enumeration and sympy series
expansion only.
"""

import itertools
import math
from fractions import Fraction

import sympy as sp

lam_sym, t_sym, x_sym = sp.symbols("lam t x")


def set_partitions_count(n, k):
    """Number of partitions of {0..n-1} into k blocks, by restricted growth strings."""
    if n == 0:
        return int(k == 0)
    count = 0
    for rgs in itertools.product(range(n), repeat=n):
        if rgs[0] != 0:
            continue
        ok = True
        top = 0
        for v in rgs[1:]:
            if v > top + 1:
                ok = False
                break
            top = max(top, v)
        if ok and top + 1 == k:
            count += 1
    return count


def cycle_count(perm):
    seen, cycles = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            cycles += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
    return cycles


def signed_stirling1(n, k):
    """``(-1)^(n-k)`` times the number of permutations of n with k cycles."""
    c = sum(1 for p in itertools.permutations(range(n)) if cycle_count(p) == k)
    return (-1) ** (n - k) * c


def bernoulli_recurrence(N):
    """``sum_{j<=n} C(n+1, j) B_j = 0`` for n >= 1 (so ``B_1 = -1/2``)."""
    b = [Fraction(1)]
    for n in range(1, N + 1):
        b.append(-sum(math.comb(n + 1, j) * b[j] for j in range(n)) / Fraction(n + 1))
    return b


def to_fraction(expr):
    expr = sp.nsimplify(expr)
    p, q = sp.fraction(sp.Rational(expr))
    return Fraction(int(p), int(q))


def series_coeffs(expr, N, var=t_sym):
    """Taylor coefficients of a sympy expression in ``var`` through ``var^N``."""
    s = sp.series(expr, var, 0, N + 1).removeO()
    return [sp.expand(s.coeff(var, n)) for n in range(N + 1)]


def poly_in_lambda(expr):
    """sympy polynomial in ``lam`` -> list of Fraction coefficients (ascending)."""
    expr = sp.expand(expr)
    if expr == 0:
        return []
    p = sp.Poly(expr, lam_sym)
    coeffs = [Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1]))
              for c in reversed(p.all_coeffs())]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def deg_exp(x, lam):
    """``(1 + lam t)^(x/lam)`` as a sympy expression."""
    return (1 + lam * t_sym) ** (sp.sympify(x) / lam)


def poly_bernoulli_sympy(k, lam, N, exact=True):
    """``n! [t^n] l_k(u)/u`` with ``u = 1 - e_lam(-t)``, straight from the definitions.

    ``lam`` may be ``lam_sym``; pass ``exact=False`` to get sympy expressions back.
    """
    lam = sp.sympify(lam)
    u = sp.expand(1 - deg_exp(1, lam).subs(t_sym, -t_sym))
    xs = sp.Symbol("xs")
    lk = 0
    for n in range(1, N + 2):
        coeff = sp.Integer(1)
        for j in range(1, n):
            coeff *= (j - lam)
        lk += coeff / (sp.factorial(n - 1) * sp.Integer(n) ** k) * xs ** n
    expr = (lk / xs).expand()
    expr = expr.subs(xs, u)
    coeffs = [sp.expand(c * sp.factorial(n)) for n, c in enumerate(series_coeffs(expr, N))]
    return [to_fraction(c) for c in coeffs] if exact else coeffs


def carlitz_sympy(N, x=0):
    """``n! [t^n] t e_lam^x(t) / (e_lam(t) - 1)`` as lists of lambda-coefficients."""
    expr = t_sym * deg_exp(x, lam_sym) / (deg_exp(1, lam_sym) - 1)
    coeffs = series_coeffs(expr, N)
    return [poly_in_lambda(sp.simplify(c * sp.factorial(n))) for n, c in enumerate(coeffs)]
