"""Truncated formal power series over exact rationals.

A :class:`Series` of order ``N`` stores the coefficients of ``t**0 .. t**(N-1)``
as :class:`fractions.Fraction` values.  Binary operations truncate to the
shorter operand, so series of different orders compose freely::

    >>> e = exp_t(5)
    >>> egf_coeff(e, 4)
    Fraction(1, 1)
    >>> log(exp(Series([0, 1, 0]))) == Series([0, 1, 0])
    True

``exp`` and ``log`` use the quadratic coefficient recurrences obtained from
``E' = a' E`` and ``a L' = a'``; for the orders used here (a few hundred at
most) that is both simpler and faster than Newton iteration.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]

DEFAULT_MAX_ORDER = 256


class SeriesError(ValueError):
    pass


class DivisionByZeroConstantTerm(SeriesError):
    pass


class ConstantTermNotOne(SeriesError):
    pass


class NonzeroConstantTerm(SeriesError):
    pass


class OrderExceeded(SeriesError):
    pass


def max_order() -> int:
    """Truncation cap, read from ``BERNSTIR_MAX_ORDER`` (default 256)."""
    raw = os.environ.get("BERNSTIR_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise SeriesError(f"BERNSTIR_MAX_ORDER must be an integer, got {raw!r}")
    if cap < 1:
        raise SeriesError("BERNSTIR_MAX_ORDER must be positive")
    return cap


def check_order(order: int) -> None:
    cap = max_order()
    if order > cap:
        raise OrderExceeded(
            f"truncation order {order} exceeds BERNSTIR_MAX_ORDER={cap}"
        )


class Series:
    """Immutable truncated power series ``sum(coeffs[i] * t**i, i < order)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        self._coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self._coeffs)}])"

    def truncate(self, order: int) -> "Series":
        return Series(self._coeffs[:order])

    def scale(self, c: Scalar) -> "Series":
        c = Fraction(c)
        return Series(c * a for a in self._coeffs)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return add(self, other.scale(-1))

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other: "Series") -> "Series":
        return div(self, other)

    def __pow__(self, alpha: Scalar) -> "Series":
        return power(self, alpha)


# -- constructors ------------------------------------------------------------

def from_function(f: Callable[[int], Scalar], order: int) -> Series:
    check_order(order)
    return Series(f(i) for i in range(order))


def zero(order: int) -> Series:
    return from_function(lambda i: 0, order)


def one(order: int) -> Series:
    return from_function(lambda i: 1 if i == 0 else 0, order)


def monomial(c: Scalar, order: int) -> Series:
    """``c * t`` truncated to ``order``."""
    return from_function(lambda i: c if i == 1 else 0, order)


def exp_t(order: int, c: Scalar = 1) -> Series:
    """``exp(c*t)``."""
    c = Fraction(c)
    return from_function(lambda i: c**i / factorial(i), order)


def expm1_over_t(order: int) -> Series:
    """``(exp(t) - 1) / t = sum t**i / (i+1)!``."""
    return from_function(lambda i: Fraction(1, factorial(i + 1)), order)


def log1p_over_t(order: int) -> Series:
    """``log(1 + t) / t = sum (-1)**i t**i / (i+1)``."""
    return from_function(lambda i: Fraction((-1) ** i, i + 1), order)


# -- arithmetic --------------------------------------------------------------

def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(a[i] + b[i] for i in range(n))


def mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return Series(out)


def div(a: Series, b: Series) -> Series:
    if b.order == 0 or b[0] == 0:
        raise DivisionByZeroConstantTerm("divisor has zero constant term")
    n = min(a.order, b.order)
    inv_b0 = 1 / b[0]
    q: list[Fraction] = []
    for k in range(n):
        s = a[k]
        for i in range(1, k + 1):
            if b[i]:
                s -= b[i] * q[k - i]
        q.append(s * inv_b0)
    return Series(q)


def log(a: Series) -> Series:
    """Logarithm of a series with constant term 1.

    From ``a * L' = a'``: ``k L_k = k a_k - sum_{i=1}^{k-1} i L_i a_{k-i}``.
    """
    if a.order == 0 or a[0] != 1:
        raise ConstantTermNotOne("log requires constant term 1")
    n = a.order
    L = [Fraction(0)] * n
    for k in range(1, n):
        s = k * a[k]
        for i in range(1, k):
            if L[i] and a[k - i]:
                s -= i * L[i] * a[k - i]
        L[k] = s / k
    return Series(L)


def exp(a: Series) -> Series:
    """Exponential of a series with constant term 0.

    From ``E' = a' E``: ``k E_k = sum_{i=1}^{k} i a_i E_{k-i}``.
    """
    if a.order and a[0] != 0:
        raise NonzeroConstantTerm("exp requires constant term 0")
    n = a.order
    E = [Fraction(0)] * n
    if n:
        E[0] = Fraction(1)
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, k + 1):
            if a[i] and E[k - i]:
                s += i * a[i] * E[k - i]
        E[k] = s / k
    return Series(E)


def power(a: Series, alpha: Scalar) -> Series:
    """``a ** alpha`` for a unit series, as ``exp(alpha * log(a))``."""
    if a.order == 0 or a[0] != 1:
        raise ConstantTermNotOne("power requires constant term 1")
    return exp(log(a).scale(alpha))


def egf_coeff(a: Series, n: int) -> Fraction:
    """The value multiplying ``t**n / n!``."""
    if n < 0 or n >= a.order:
        raise OrderExceeded(f"coefficient {n} requested from series of order {a.order}")
    return factorial(n) * a[n]


def from_sequence(values: Sequence[Scalar]) -> Series:
    check_order(len(values))
    return Series(values)
