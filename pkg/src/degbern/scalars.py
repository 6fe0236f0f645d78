"""Exact scalars: rationals and polynomials in the deformation parameter.

Rationals are :class:`fractions.Fraction`.  Polynomials in lambda are
:class:`LambdaPolynomial`, stored as integer numerators over one positive
common denominator so that multiplication is a plain integer convolution.

Both kinds of scalar interoperate through the ordinary arithmetic operators,
and the two ring objects :data:`QQ` and :data:`QQ_LAMBDA` expose the shared
coefficient-ring contract used by the series code.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

from .kernels import convolve_int

Scalar = Union[int, Fraction, "LambdaPolynomial"]

VARIABLE = "L"


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def rational(num: int, den: int = 1) -> Fraction:
    """Reduced rational ``num/den`` with positive denominator.

    >>> rational(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class LambdaPolynomial:
    """Dense polynomial in lambda with rational coefficients.

    Immutable.  Trailing zero coefficients are never stored, so the zero
    polynomial has no coefficients at all.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_as_fraction(c) for c in coefficients]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(nums, den)

    def _set(self, nums, den):
        while nums and not nums[-1]:
            nums.pop()
        if not nums:
            den = 1
        else:
            if den < 0:
                nums = [-v for v in nums]
                den = -den
            g = math.gcd(den, *nums)
            if g != 1:
                nums = [v // g for v in nums]
                den //= g
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, nums, den) -> LambdaPolynomial:
        obj = cls.__new__(cls)
        obj._set(list(nums), den)
        return obj

    @classmethod
    def constant(cls, c) -> LambdaPolynomial:
        c = _as_fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def identity(cls) -> LambdaPolynomial:
        """The polynomial ``lambda`` itself."""
        return cls._raw([0, 1], 1)

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self) -> tuple:
        return tuple(Fraction(v, self._den) for v in self._num)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._num) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def __call__(self, x) -> Fraction:
        """Horner evaluation at a rational point."""
        x = _as_fraction(x)
        if x.denominator == 1:
            xv = x.numerator
            acc = 0
            for v in reversed(self._num):
                acc = acc * xv + v
            return Fraction(acc, self._den)
        acc = Fraction(0)
        for v in reversed(self._num):
            acc = acc * x + v
        return acc / self._den

    evaluate = __call__

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LambdaPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPolynomial.constant(other)
        return None

    def __bool__(self):
        return bool(self._num)

    def __neg__(self):
        return LambdaPolynomial._raw([-v for v in self._num], self._den)

    def __pos__(self):
        return self

    def _add(self, other, sign):
        d1, d2 = self._den, other._den
        g = math.gcd(d1, d2)
        s1, s2 = d2 // g, d1 // g
        a, b = self._num, other._num
        n = max(len(a), len(b))
        nums = [0] * n
        for i, v in enumerate(a):
            nums[i] = v * s1
        for i, v in enumerate(b):
            nums[i] += sign * v * s2
        return LambdaPolynomial._raw(nums, d1 * s1)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        return self._add(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return LambdaPolynomial._raw([v * other for v in self._num], self._den)
        if isinstance(other, Fraction):
            return LambdaPolynomial._raw(
                [v * other.numerator for v in self._num], self._den * other.denominator)
        if not isinstance(other, LambdaPolynomial):
            return NotImplemented
        if not self._num or not other._num:
            return ZERO_POLY
        return LambdaPolynomial._raw(
            convolve_int(list(self._num), list(other._num)), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = ONE_POLY, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod_poly(self, other) -> tuple[LambdaPolynomial, LambdaPolynomial]:
        """Polynomial long division: ``self = q * other + r``, deg r < deg other."""
        other = self._coerce(other)
        if other is None:
            raise TypeError("cannot divide by non-scalar")
        if not other._num:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coefficients)
        div = other.coefficients
        dd = len(div) - 1
        lead = div[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd] / lead
            quot[i] = c
            if c:
                for j, dv in enumerate(div):
                    rem[i + j] -= c * dv
        return LambdaPolynomial(quot), LambdaPolynomial(rem[:dd])

    def __truediv__(self, other):
        """Exact division; raises :class:`NotDivisibleError` on a remainder."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            other = Fraction(other)
            return LambdaPolynomial._raw(
                [v * other.denominator for v in self._num], self._den * other.numerator)
        if not isinstance(other, LambdaPolynomial):
            return NotImplemented
        if other.is_constant():
            return self / other.constant_term()
        q, r = self.divmod_poly(other)
        if r:
            raise NotDivisibleError(f"({self}) is not divisible by ({other})")
        return q

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            if len(self._num) <= 1:
                # agree with hash(Fraction) for constants, since they compare equal
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"LambdaPolynomial('{self}')"


ZERO_POLY = LambdaPolynomial._raw([], 1)
ONE_POLY = LambdaPolynomial._raw([1], 1)
LAMBDA = LambdaPolynomial.identity()


def poly_eval(p, x) -> Fraction:
    """Value of a scalar at ``lambda = x`` (rationals evaluate to themselves)."""
    if isinstance(p, LambdaPolynomial):
        return p(x)
    return _as_fraction(p)


def lambda_product(n: int, lam=None):
    """``prod_{j=1}^{n-1} (lam - j)``, i.e. ``lam^(n-1) (1)_{n,1/lam}``.

    With ``lam`` omitted the result is the symbolic polynomial in lambda.
    """
    if n < 1:
        raise ValueError(f"lambda_product is defined for n >= 1, got {n}")
    if lam is None:
        # coefficients of the falling product, built with integer arithmetic
        coeffs = [1]
        for j in range(1, n):
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= j * c
            coeffs = nxt
        return LambdaPolynomial._raw(coeffs, 1)
    result = Fraction(1) if isinstance(lam, (int, Fraction)) else ONE_POLY
    for j in range(1, n):
        result = result * (lam - j)
    return result


# -- rendering and parsing ------------------------------------------------------


def render_rational(q) -> str:
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_polynomial(p: LambdaPolynomial) -> str:
    terms = []
    for i, c in enumerate(p.coefficients):
        if not c:
            continue
        if i == 0:
            body = render_rational(abs(c))
        else:
            mono = VARIABLE if i == 1 else f"{VARIABLE}^{i}"
            body = mono if abs(c) == 1 else f"{render_rational(abs(c))}*{mono}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def render_scalar(x) -> str:
    """Canonical text: ``p/q`` for rationals, ``c0 + c1*L + ...`` for polynomials.

    A polynomial of degree <= 0 renders exactly like the equal rational.
    """
    if isinstance(x, LambdaPolynomial):
        return render_polynomial(x)
    return render_rational(x)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<var1>L)(?:\^(?P<exp1>\d+))?)?
          | (?P<var2>L)(?:\^(?P<exp2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str):
    """Inverse of :func:`render_scalar`.

    Returns a :class:`~fractions.Fraction` when the text has no ``L`` term,
    otherwise a :class:`LambdaPolynomial`.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty scalar literal")
    pos = 0
    coeffs: dict[int, Fraction] = {}
    symbolic = False
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        first = False
        if m.group("coef") is not None:
            num, _, den = m.group("coef").partition("/")
            c = Fraction(int(num), int(den) if den else 1)
            if m.group("var1"):
                e = int(m.group("exp1") or 1)
            else:
                e = 0
        else:
            c = Fraction(1)
            e = int(m.group("exp2") or 1)
        if e:
            symbolic = True
        if sign == "-":
            c = -c
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
    if not symbolic:
        return coeffs.get(0, Fraction(0))
    top = max(coeffs)
    return LambdaPolynomial(coeffs.get(i, 0) for i in range(top + 1))


# -- coefficient rings ----------------------------------------------------------


class RationalField:
    """The rationals as a coefficient ring."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, LambdaPolynomial):
            if not x.is_constant():
                raise TypeError(f"{x} is not a rational constant")
            return x.constant_term()
        return _as_fraction(x)

    from_int = coerce
    from_rational = coerce

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def is_unit(self, a) -> bool:
        return a != 0

    def div_exact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def inverse(self, a):
        return self.div_exact(self.one, a)

    def __repr__(self):
        return self.name


class LambdaPolynomialRing(RationalField):
    """Polynomials in lambda over the rationals as a coefficient ring."""

    name = "QQ[L]"
    zero = ZERO_POLY
    one = ONE_POLY

    def coerce(self, x) -> LambdaPolynomial:
        if isinstance(x, LambdaPolynomial):
            return x
        return LambdaPolynomial.constant(x)

    from_int = coerce
    from_rational = coerce

    def is_unit(self, a) -> bool:
        a = self.coerce(a)
        return bool(a) and a.is_constant()

    def inverse(self, a):
        a = self.coerce(a)
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit of QQ[L]")
        return LambdaPolynomial.constant(1 / a.constant_term())


QQ = RationalField()
QQ_LAMBDA = LambdaPolynomialRing()


def ring_of(*elements):
    """Smallest of the two rings containing every element."""
    for e in elements:
        if isinstance(e, LambdaPolynomial):
            return QQ_LAMBDA
    return QQ
