"""Exact arithmetic tower: Gaussian rationals, dense univariate polynomials,
and truncated formal power series over an exact coefficient field.

Rational numbers are plain fractions.Fraction (already canonical: positive
denominator, lowest terms). GaussianRational adds an exact imaginary part.
UniPoly and TruncSeries are generic over the coefficient type: anything whose
+, -, * (and / where division is used) interoperate with Python ints works,
so both Fraction and GaussianRational coefficients are supported.

Conventions:
  * UniPoly stores dense coefficients indexed by degree, trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple.
  * TruncSeries stores the coefficients of z^0 .. z^order and carries the
    truncation order explicitly; mixed-order operations truncate to the
    minimum order so no coefficient is ever claimed beyond what was computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import NonzeroInnerConstant, PoleAtOrigin, ZeroConstantTerm

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "UniPoly",
    "TruncSeries",
    "poly_eval",
    "poly_derivative",
    "series_div",
    "series_compose",
    "series_from_rational_function",
]

Rational = Fraction

_Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number re + i*im with rational real and imaginary parts.

    >>> (GaussianRational(1, 2) * GaussianRational(1, -2)).re
    Fraction(5, 1)
    >>> GaussianRational(0, 1) ** 2 == -1
    True
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(x: object) -> "GaussianRational | None":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(Fraction(x))
        return None

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def real_part(self) -> Fraction:
        return self.re

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        # matches hash of the plain rational when imaginary part is zero
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # conjugate multiplication keeps everything rational
        q = o.re * o.re + o.im * o.im
        if q == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / q,
            (self.im * o.re - self.re * o.im) / q,
        )

    def __rtruediv__(self, other: object) -> "GaussianRational":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = GaussianRational(0, 1)


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n > 0 and not _nonzero(coeffs[n - 1]):
        n -= 1
    return tuple(coeffs[:n])


def _nonzero(c: object) -> bool:
    return c != 0


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; coeffs[d] is the coefficient of x^d.

    >>> p = UniPoly((-1, -1, 1))   # x^2 - x - 1
    >>> p(2)
    1
    >>> p.derivative().coeffs
    (-1, 2)
    """

    coeffs: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(tuple(self.coeffs)))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @property
    def degree(self) -> int:
        # zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d: int):
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __call__(self, x):
        return poly_eval(self, x)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: object) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] = out[d] + c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "UniPoly":
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly(())
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for d1, c1 in enumerate(self.coeffs):
                if not _nonzero(c1):
                    continue
                for d2, c2 in enumerate(other.coeffs):
                    out[d1 + d2] = out[d1 + d2] + c1 * c2
            return UniPoly(out)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "UniPoly":
        return poly_derivative(self)

    def map_coeffs(self, f: Callable) -> "UniPoly":
        return UniPoly(tuple(f(c) for c in self.coeffs))

    def shift_up(self, k: int = 1) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)


def _as_poly(x: object) -> UniPoly | None:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return UniPoly((x,))
    return None


def poly_eval(p: UniPoly, x):
    """Evaluate p at x by Horner's rule; returns 0 for the zero polynomial."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: UniPoly) -> UniPoly:
    """Formal derivative."""
    return UniPoly(tuple(c * d for d, c in enumerate(p.coeffs) if d > 0))


@dataclass(frozen=True)
class TruncSeries:
    """Truncated power series: coefficients of z^0 .. z^order.

    The order is explicit; arithmetic between series of different orders
    truncates to the smaller order.

    >>> one = TruncSeries.constant(1, 4)
    >>> geom = one / TruncSeries((1, -1), 4)
    >>> geom.coeffs
    (1, 1, 1, 1, 1)
    """

    coeffs: tuple
    order: int = -1

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        order = self.order
        if order < 0:
            order = len(coeffs) - 1
        if len(coeffs) < order + 1:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    @staticmethod
    def constant(c, order: int) -> "TruncSeries":
        return TruncSeries((c,), order)

    @staticmethod
    def zero(order: int) -> "TruncSeries":
        return TruncSeries((), order)

    @staticmethod
    def identity(order: int) -> "TruncSeries":
        """The series z."""
        return TruncSeries((0, 1), order)

    @staticmethod
    def from_poly(p: UniPoly, order: int) -> "TruncSeries":
        return TruncSeries(p.coeffs, order)

    def coefficient(self, m: int):
        if m > self.order:
            raise IndexError(f"coefficient {m} beyond truncation order {self.order}")
        return self.coeffs[m]

    def is_zero(self) -> bool:
        return all(not _nonzero(c) for c in self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1], order)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coeffs), self.order)

    def _pair(self, other: object):
        if isinstance(other, TruncSeries):
            k = min(self.order, other.order)
            a = self.truncate(k) if k < self.order else self
            b = other.truncate(k) if k < other.order else other
            return a, b
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self, TruncSeries.constant(other, self.order)
        return None, None

    def __add__(self, other: object) -> "TruncSeries":
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return TruncSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    __radd__ = __add__

    def __sub__(self, other: object) -> "TruncSeries":
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return TruncSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    def __rsub__(self, other: object) -> "TruncSeries":
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return TruncSeries(tuple(y - x for x, y in zip(a.coeffs, b.coeffs)), a.order)

    def __mul__(self, other: object) -> "TruncSeries":
        if isinstance(other, (int, Fraction, GaussianRational)):
            return TruncSeries(tuple(c * other for c in self.coeffs), self.order)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        n = a.order
        out = [0] * (n + 1)
        for d1, c1 in enumerate(a.coeffs):
            if not _nonzero(c1):
                continue
            for d2 in range(min(n - d1, b.order) + 1):
                c2 = b.coeffs[d2]
                if _nonzero(c2):
                    out[d1 + d2] = out[d1 + d2] + c1 * c2
        return TruncSeries(tuple(out), n)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "TruncSeries":
        if isinstance(other, (int, Fraction, GaussianRational)):
            return TruncSeries(tuple(_exact_div(c, other) for c in self.coeffs), self.order)
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        return NotImplemented

    def __rtruediv__(self, other: object) -> "TruncSeries":
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return series_div(b, a)

    def derivative(self) -> "TruncSeries":
        """Formal d/dz; the truncation order drops by one."""
        if self.order < 1:
            raise ValueError("derivative needs truncation order >= 1")
        return TruncSeries(
            tuple(c * d for d, c in enumerate(self.coeffs) if d > 0), self.order - 1
        )

    def shift_up(self, k: int = 1) -> "TruncSeries":
        """Multiply by z^k; the order grows by k (all new info known exactly)."""
        return TruncSeries((0,) * k + self.coeffs, self.order + k)

    def shift_down(self, k: int = 1) -> "TruncSeries":
        """Divide by z^k; requires the first k coefficients to vanish."""
        for c in self.coeffs[:k]:
            if _nonzero(c):
                raise ValueError("shift_down of a series with nonzero low coefficients")
        return TruncSeries(self.coeffs[k:], self.order - k)

    def map_coeffs(self, f: Callable) -> "TruncSeries":
        return TruncSeries(tuple(f(c) for c in self.coeffs), self.order)


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Series quotient c with b*c = a modulo z^(order+1).

    Requires b to have an invertible constant term.
    """
    order = min(a.order, b.order)
    if not _nonzero(b.coeffs[0]):
        raise ZeroConstantTerm("series division by a series with zero constant term")
    b0 = b.coeffs[0]
    out = []
    for k in range(order + 1):
        acc = a.coeffs[k]
        for j in range(k):
            d = k - j
            if d <= b.order and _nonzero(b.coeffs[d]):
                acc = acc - out[j] * b.coeffs[d]
        out.append(_exact_div(acc, b0))
    return TruncSeries(tuple(out), order)


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """Coefficients of outer(inner(z)) to the common truncation order.

    The inner series must have zero constant term.
    """
    if _nonzero(inner.coeffs[0]):
        raise NonzeroInnerConstant("composition requires inner series with zero constant term")
    order = min(outer.order, inner.order)
    if inner.order > order:
        inner = inner.truncate(order)
    # Horner evaluation of the outer polynomial at the inner series
    acc = TruncSeries.constant(outer.coeffs[order], order)
    for k in range(order - 1, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return acc


def series_from_rational_function(num: UniPoly, den: UniPoly, order: int) -> TruncSeries:
    """Taylor expansion of num/den at the origin to the requested order."""
    if den.is_zero() or not _nonzero(den.coeffs[0]):
        raise PoleAtOrigin("rational function has a pole (or 0/0) at the origin")
    a = TruncSeries(num.coeffs, order)
    b = TruncSeries(den.coeffs, order)
    return series_div(a, b)
