"""Truncated formal power series in t over an exact coefficient ring.

A :class:`TruncatedSeries` of order N carries the coefficients of
``t^0 .. t^N`` and every operation is exact through ``t^N``.  Binary
operations insist on equal orders instead of silently truncating.

:class:`ValuatedSeries` represents ``t^e * u(t)`` with ``u(0)`` a unit, which
is how negative powers of t (the ``1/t`` factors in iterated integrals) are
carried through a computation.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .kernels import cauchy
from .scalars import QQ, QQ_LAMBDA, render_scalar, ring_of


class SeriesOrderError(ValueError):
    """Binary operation on series of different truncation orders."""


class SeriesDivisionError(ZeroDivisionError):
    """Division by a series whose constant term is not invertible."""


class CompositionError(ValueError):
    """Composition with an inner series that has a nonzero constant term."""


class ValuationError(ValueError):
    """A valuated series cannot be represented as requested (e.g. a pole)."""


def _promote(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise SeriesOrderError(f"series orders differ: {a.order} != {b.order}")
    if a.ring is b.ring:
        return a, b
    return a.over(QQ_LAMBDA), b.over(QQ_LAMBDA)


class TruncatedSeries:
    """Coefficients ``c_0..c_N`` of a power series, exact through ``t^N``."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        if ring is None:
            ring = ring_of(*coeffs)
        self.ring = ring
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)

    @classmethod
    def _wrap(cls, coeffs, ring):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.ring = ring
        return obj

    @classmethod
    def zero(cls, order: int, ring=QQ) -> TruncatedSeries:
        return cls._wrap([ring.zero] * (order + 1), ring)

    @classmethod
    def one(cls, order: int, ring=QQ) -> TruncatedSeries:
        return cls.monomial(0, order, ring)

    @classmethod
    def monomial(cls, power: int, order: int, ring=QQ, coeff=1) -> TruncatedSeries:
        """``coeff * t^power`` (zero if ``power > order``)."""
        cs = [ring.zero] * (order + 1)
        if power <= order:
            cs[power] = ring.coerce(coeff)
        return cls._wrap(cs, ring)

    @classmethod
    def from_egf(cls, values, ring=None) -> TruncatedSeries:
        """Series whose ``t^n`` coefficient is ``values[n] / n!``."""
        values = list(values)
        ring = ring or ring_of(*values)
        return cls(
            [ring.coerce(v) * Fraction(1, math.factorial(n)) for n, v in enumerate(values)],
            ring)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def egf(self) -> list:
        """``[n! * c_n]``: the sequence this series generates exponentially."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]

    def over(self, ring) -> TruncatedSeries:
        """The same series with coefficients coerced into ``ring``."""
        if ring is self.ring:
            return self
        return TruncatedSeries(self.coeffs, ring)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesOrderError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries._wrap(self.coeffs[:order + 1], self.ring)

    def map(self, fn) -> TruncatedSeries:
        """Apply ``fn`` to every coefficient (e.g. evaluate at lambda = 0)."""
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def reflect(self) -> TruncatedSeries:
        """``f(-t)``."""
        return TruncatedSeries._wrap(
            [c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], self.ring)

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.monomial(0, self.order, ring_of(other) if self.ring is QQ
                                             else self.ring, other)
        a, b = _promote(self, other)
        return TruncatedSeries._wrap([x + y for x, y in zip(a.coeffs, b.coeffs)], a.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        ring = QQ_LAMBDA if ring_of(other) is QQ_LAMBDA else self.ring
        s = self.over(ring)
        return TruncatedSeries._wrap([c * other for c in s.coeffs], ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        ring = QQ_LAMBDA if ring_of(other) is QQ_LAMBDA else self.ring
        inv = ring.inverse(ring.coerce(other))
        return self * inv

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            s = render_scalar(c)
            if n == 0:
                terms.append(s)
                continue
            mono = "t" if n == 1 else f"t^{n}"
            if s in ("1", "-1"):
                terms.append(s[:-1] + mono)
            else:
                terms.append(f"({s}) {mono}" if " " in s else f"{s} {mono}")
        body = terms[0] if terms else "0"
        for term in terms[1:]:
            body += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return f"{body} + O(t^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({[render_scalar(c) for c in self.coeffs]}, {self.ring!r})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product through ``t^N``."""
    a, b = _promote(a, b)
    return TruncatedSeries._wrap(cauchy(list(a.coeffs), list(b.coeffs), a.ring.zero), a.ring)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """``q`` with ``q * b == a`` through ``t^N``; ``b[0]`` must be a unit."""
    a, b = _promote(a, b)
    ring = a.ring
    if not ring.is_unit(b.coeffs[0]):
        raise SeriesDivisionError(f"constant term {render_scalar(b.coeffs[0])} is not invertible")
    inv = ring.inverse(b.coeffs[0])
    bc = b.coeffs
    q = []
    for n, an in enumerate(a.coeffs):
        acc = an
        for j in range(1, n + 1):
            if bc[j]:
                acc = acc - bc[j] * q[n - j]
        q.append(acc * inv)
    return TruncatedSeries._wrap(q, ring)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(t))`` through ``t^N`` by Horner's scheme; needs ``g[0] == 0``."""
    f, g = _promote(f, g)
    if g.coeffs[0]:
        raise CompositionError("inner series must have zero constant term")
    ring = f.ring
    result = TruncatedSeries.monomial(0, f.order, ring, f.coeffs[-1])
    for c in reversed(f.coeffs[:-1]):
        result = series_mul(result, g)
        result = TruncatedSeries._wrap((result.coeffs[0] + c,) + result.coeffs[1:], ring)
    return result


def series_integrate(a: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative with zero constant term; the input's top coefficient drops out."""
    ring = a.ring
    cs = [ring.zero] + [a.coeffs[n - 1] * Fraction(1, n) for n in range(1, a.order + 1)]
    return TruncatedSeries._wrap(cs, ring)


def series_derive(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the ``t^N`` coefficient of the result is set to zero."""
    ring = a.ring
    cs = [a.coeffs[n + 1] * (n + 1) for n in range(a.order)] + [ring.zero]
    return TruncatedSeries._wrap(cs, ring)


class ValuatedSeries:
    """``t^offset * unit(t)`` where ``unit[0]`` is nonzero.

    ``unit.order`` is the relative precision: the value is known through
    ``t^(offset + unit.order)``.  Products keep the smaller relative
    precision of their two factors.  The zero series has ``unit = None``.
    """

    __slots__ = ("offset", "unit", "precision")

    def __init__(self, offset: int, unit: TruncatedSeries | None, precision: int | None = None):
        if unit is not None and not unit.coeffs[0]:
            raise ValuationError("unit part must have a nonzero constant term")
        self.offset = offset
        self.unit = unit
        # absolute precision of the zero series (no unit to carry it)
        self.precision = precision

    @classmethod
    def zero(cls, precision: int) -> ValuatedSeries:
        return cls(0, None, precision)

    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def absolute_order(self) -> int:
        if self.unit is None:
            return self.precision
        return self.offset + self.unit.order

    def __mul__(self, other):
        return valuated_mul(self, other)

    def inverse(self) -> ValuatedSeries:
        if self.unit is None:
            raise SeriesDivisionError("zero series has no inverse")
        one = TruncatedSeries.one(self.unit.order, self.unit.ring)
        return ValuatedSeries(-self.offset, series_div(one, self.unit))

    def to_series(self, order: int) -> TruncatedSeries:
        """Ordinary truncated series through ``t^order``."""
        if self.unit is None:
            if self.precision is not None and self.precision < order:
                raise ValuationError(f"zero series only known through t^{self.precision}")
            return TruncatedSeries.zero(order)
        if self.offset < 0:
            raise ValuationError(f"series has a pole of order {-self.offset}")
        if self.absolute_order < order:
            raise ValuationError(
                f"series only known through t^{self.absolute_order}, asked for t^{order}")
        ring = self.unit.ring
        cs = [ring.zero] * self.offset + list(self.unit.coeffs)
        return TruncatedSeries._wrap(cs[:order + 1] + [ring.zero] * (order + 1 - len(cs)), ring)

    def __eq__(self, other):
        if not isinstance(other, ValuatedSeries):
            return NotImplemented
        return self.offset == other.offset and self.unit == other.unit

    def __repr__(self):
        if self.unit is None:
            return f"ValuatedSeries(zero, O(t^{self.precision}))"
        return f"ValuatedSeries(t^{self.offset} * ({self.unit}))"


def valuated_from(a: TruncatedSeries) -> ValuatedSeries:
    """Factor out the lowest nonzero power of t."""
    v = a.valuation()
    if v is None:
        return ValuatedSeries.zero(a.order)
    return ValuatedSeries(v, TruncatedSeries._wrap(a.coeffs[v:], a.ring))


def valuated_mul(a: ValuatedSeries, b: ValuatedSeries) -> ValuatedSeries:
    if a.unit is None or b.unit is None:
        return ValuatedSeries.zero(min(x.absolute_order for x in (a, b)))
    m = min(a.unit.order, b.unit.order)
    u = series_mul(a.unit.truncate(m), b.unit.truncate(m))
    return ValuatedSeries(a.offset + b.offset, u)


def valuated_integrate(a: ValuatedSeries) -> ValuatedSeries:
    """Term-wise antiderivative with zero constant; requires ``offset >= 0``."""
    if a.unit is None:
        return ValuatedSeries.zero(a.precision + 1)
    if a.offset < 0:
        raise ValuationError(
            f"cannot integrate t^{a.offset} * (...): the integrand has a pole")
    e = a.offset
    u = a.unit
    cs = [c * Fraction(1, e + j + 1) for j, c in enumerate(u.coeffs)]
    return ValuatedSeries(e + 1, TruncatedSeries._wrap(cs, u.ring))
