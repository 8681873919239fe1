"""Higher-order Bernoulli polynomials of both kinds at integer arguments.

Two families are handled, distinguished by their generating functions:

* ``Family.FIRST``  -- ``B_n^(a)(x)``:  ``(t / (exp(t) - 1))**a * exp(x t)``
* ``Family.SECOND`` -- ``b_n^(a)(x)``:  ``(t / log(1 + t))**a * (1 + t)**x``

Every value is available along independent routes:

``oracle_eval``
    coefficient extraction from the generating function (ground truth);
``eval_prop1`` / ``eval_prop2``
    Melzak interpolation in the order ``a`` over the exactly known values at
    negative integer orders, which are r-Stirling numbers of the first kind
    (argument ``-r``) or second kind (argument ``+r``);
``special_neg_order``
    the closed forms at negative integer order.

The literature is not consistent about which of ``B_n`` and ``b_n`` is called
"of the first kind"; names here always follow the generating functions above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Mapping, Optional, Sequence, Union

from . import series as S
from .rstirling import StirlingKind, rstir, stirling1, stirling2

Number = Union[int, Fraction]

FIRST_KIND = StirlingKind.FIRST
SECOND_KIND = StirlingKind.SECOND


class Family(enum.Enum):
    FIRST = "B"
    SECOND = "b"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        if value in ("B", "first", "FIRST", 1):
            return cls.FIRST
        if value in ("b", "second", "SECOND", 2):
            return cls.SECOND
        raise ValueError(f"unknown Bernoulli family {value!r}")


class PoleAtSampledPoint(ZeroDivisionError):
    """A Melzak denominator ``shift + q + j`` vanishes for some sampled ``j``."""

    def __init__(self, j: int, shift: Fraction, q: int):
        self.j = j
        self.shift = shift
        self.q = q
        super().__init__(
            f"pole at sampled point j={j}: {shift} + q({q}) + j({j}) = 0"
        )


class InternalMismatch(ArithmeticError):
    pass


class OddArgument(ValueError):
    pass


class NonIntegerArgument(ValueError):
    pass


def neg_one_pow(e: int) -> int:
    """``(-1)**e`` as an int for any integer ``e`` (``**`` returns float for e < 0)."""
    return -1 if e % 2 else 1


def _as_int(x, name: str = "x") -> int:
    if isinstance(x, bool):
        raise NonIntegerArgument(f"{name} must be an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise NonIntegerArgument(f"{name} must be an integer, got {x!r}")


@dataclass(frozen=True)
class EvalSpec:
    """Degree ``n``, order ``alpha``, integer argument ``x`` and the Melzak
    parameters ``p >= n`` (number of sample points minus one) and ``q``
    (shift of the sample points)."""

    n: int
    alpha: Fraction
    x: int
    p: Optional[int] = None
    q: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "x", _as_int(self.x))
        if self.n < 0 or self.q < 0:
            raise ValueError("n and q must be non-negative")
        if self.p is None:
            object.__setattr__(self, "p", self.n)
        if self.p < self.n:
            raise ValueError(f"need p >= n, got p={self.p}, n={self.n}")


# -- elementary pieces -------------------------------------------------------

def binom_rat(x: Number, k: int) -> Fraction:
    """``x (x-1) ... (x-k+1) / k!`` for rational ``x``."""
    return falling(x, k) / factorial(k)


def falling(x: Number, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def rising(x: Number, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


# -- generating-function oracle ---------------------------------------------

def oracle_eval(family, n: int, alpha: Number, x: int) -> Fraction:
    """``n!`` times the ``t**n`` coefficient of the family's generating function."""
    return _oracle_eval(Family.parse(family), n, Fraction(alpha), _as_int(x))


@lru_cache(maxsize=4096)
def _oracle_eval(family: Family, n: int, alpha: Fraction, x: int) -> Fraction:
    order = n + 1
    if family is Family.FIRST:
        gf = S.power(S.expm1_over_t(order), -alpha) * S.exp_t(order, x)
    else:
        one_plus_t = S.from_function(lambda i: 1 if i < 2 else 0, order)
        gf = S.power(S.log1p_over_t(order), -alpha) * S.power(one_plus_t, x)
    return S.egf_coeff(gf, n)


def euler_poly_oracle(n: int, x: int) -> Fraction:
    """Euler polynomial ``E_n(x)`` from ``2 exp(x t) / (exp(t) + 1)``."""
    order = n + 1
    denom = S.exp_t(order) + S.one(order)
    return S.egf_coeff((S.exp_t(order, x) * 2) / denom, n)


# -- negative integer orders -------------------------------------------------

def special_neg_order(family, n: int, k: int, r: int) -> Fraction:
    """``B_n^(-k)(r)`` for ``Family.FIRST``, ``b_n^(-k)(-r)`` for ``Family.SECOND``."""
    family = Family.parse(family)
    if family is Family.FIRST:
        return Fraction(rstir(SECOND_KIND, n + r + k, k + r, r), comb(n + k, k))
    return Fraction(neg_one_pow(n) * rstir(FIRST_KIND, n + r + k, k + r, r), comb(n + k, k))


# -- Melzak interpolation ----------------------------------------------------

def melzak_eval(
    values: Union[Sequence[Number], Mapping[int, Number], Callable[[int], Number]],
    alpha: Number,
    p: int,
    q: int = 0,
) -> Fraction:
    """Value at ``alpha`` of a polynomial of degree ``<= p`` from its samples.

    ``values[j]`` (or ``values(j)``) must be the polynomial at ``-j - q`` for
    ``j = 0 .. p``.  Returns::

        (alpha+q) * C(alpha+q+p, p) * sum_j (-1)**j C(p, j) values[j] / (alpha+q+j)
    """
    a = Fraction(alpha) + q
    for j in range(p + 1):
        if a + j == 0:
            raise PoleAtSampledPoint(j, Fraction(alpha), q)
    get = values if callable(values) else values.__getitem__
    total = Fraction(0)
    for j in range(p + 1):
        v = get(j)
        if v:
            total += neg_one_pow(j) * comb(p, j) * Fraction(v) / (a + j)
    return a * binom_rat(a + p, p) * total


def eval_prop1(family, spec: EvalSpec) -> Fraction:
    """Value at ``x = -r <= 0`` from r-Stirling numbers of the first kind."""
    family = Family.parse(family)
    n, p, q = spec.n, spec.p, spec.q
    if spec.x > 0:
        raise ValueError("eval_prop1 needs x <= 0")
    r = -spec.x
    s_n = neg_one_pow(n)
    if family is Family.SECOND:
        # samples b_n^(-j-q)(-r)
        return melzak_eval(
            lambda j: Fraction(s_n * rstir(FIRST_KIND, n + r + j + q, r + j + q, r),
                               comb(n + j + q, n)),
            spec.alpha, p, q)
    # B_n^(a)(x) = b_n^(n+1-a)(x-1)
    return melzak_eval(
        lambda j: Fraction(s_n * rstir(FIRST_KIND, n + r + j + q + 1, r + j + q + 1, r + 1),
                           comb(n + j + q, n)),
        n + 1 - spec.alpha, p, q)


def eval_prop2(family, spec: EvalSpec) -> Fraction:
    """Value at ``x = r >= 0`` from r-Stirling numbers of the second kind."""
    family = Family.parse(family)
    n, p, q = spec.n, spec.p, spec.q
    if spec.x < 0:
        raise ValueError("eval_prop2 needs x >= 0")
    r = spec.x
    if family is Family.FIRST:
        # samples B_n^(-j-q)(r)
        return melzak_eval(
            lambda j: Fraction(rstir(SECOND_KIND, n + r + q + j, r + q + j, r),
                               comb(n + q + j, n)),
            spec.alpha, p, q)
    # b_n^(a)(x) = B_n^(n+1-a)(x+1)
    return melzak_eval(
        lambda j: Fraction(rstir(SECOND_KIND, n + r + q + j + 1, r + q + j + 1, r + 1),
                           comb(n + q + j, n)),
        n + 1 - spec.alpha, p, q)


def _closed(family: Family, spec: EvalSpec) -> Fraction:
    return eval_prop1(family, spec) if spec.x <= 0 else eval_prop2(family, spec)


def evaluate(
    family,
    n: int,
    alpha: Number,
    x: int,
    p: Optional[int] = None,
    q: Optional[int] = None,
    retry_poles: bool = False,
) -> Fraction:
    """Closed-form value of ``B_n^(alpha)(x)`` or ``b_n^(alpha)(x)``.

    Negative integer orders go through :func:`special_neg_order` where it
    applies, unless ``p`` or ``q`` is given explicitly.  Otherwise the Melzak
    sums are used with defaults ``p = n``, ``q = 0``.  On a pole the call
    fails, or with ``retry_poles`` moves ``q`` up until the sample points
    clear it; the result does not depend on ``q``.
    """
    family = Family.parse(family)
    alpha = Fraction(alpha)
    x = _as_int(x)
    if p is None and q is None and alpha.denominator == 1 and alpha < 0:
        k = -alpha.numerator
        if family is Family.FIRST and x >= 0:
            return special_neg_order(family, n, k, x)
        if family is Family.SECOND and x <= 0:
            return special_neg_order(family, n, k, -x)
    spec = EvalSpec(n, alpha, x, p, q or 0)
    while True:
        try:
            return _closed(family, spec)
        except PoleAtSampledPoint:
            if not retry_poles:
                raise
            spec = EvalSpec(n, alpha, x, spec.p, spec.q + 1)


# -- p = n, q = 0 displays ---------------------------------------------------

def _check_poles(shift: Fraction, n: int) -> None:
    for j in range(n + 1):
        if shift + j == 0:
            raise PoleAtSampledPoint(j, shift, 0)


def corollary2(family, n: int, alpha: Number, r: int) -> Fraction:
    """Value at ``-r`` written with ``C(2n, n+j)`` weights (first-kind r-Stirling)."""
    family = Family.parse(family)
    a = Fraction(alpha)
    c2n = comb(2 * n, n)
    if family is Family.SECOND:
        _check_poles(a, n)
        s = sum(Fraction(neg_one_pow(n + j) * comb(2 * n, n + j)
                         * rstir(FIRST_KIND, n + r + j, r + j, r)) / (a + j)
                for j in range(n + 1))
        return a * binom_rat(a + n, n) / c2n * s
    b = n + 1 - a
    _check_poles(b, n)
    s = sum(Fraction(neg_one_pow(n + j) * comb(2 * n, n + j)
                     * rstir(FIRST_KIND, n + r + j + 1, r + j + 1, r + 1)) / (b + j)
            for j in range(n + 1))
    return b * binom_rat(2 * n - a + 1, n) / c2n * s


def corollary3(family, n: int, alpha: Number, r: int) -> Fraction:
    """Value at ``+r`` written with ``C(2n, n+j)`` weights (second-kind r-Stirling)."""
    family = Family.parse(family)
    a = Fraction(alpha)
    c2n = comb(2 * n, n)
    if family is Family.FIRST:
        _check_poles(a, n)
        s = sum(Fraction(neg_one_pow(j) * comb(2 * n, n + j)
                         * rstir(SECOND_KIND, n + r + j, r + j, r)) / (a + j)
                for j in range(n + 1))
        return a * binom_rat(a + n, n) / c2n * s
    b = n + 1 - a
    _check_poles(b, n)
    s = sum(Fraction(neg_one_pow(j) * comb(2 * n, n + j)
                     * rstir(SECOND_KIND, n + r + j + 1, r + j + 1, r + 1)) / (b + j)
            for j in range(n + 1))
    return b * binom_rat(2 * n + 1 - a, n) / c2n * s


# -- classical polynomials (order 1) -----------------------------------------

def classical_B_at_int(n: int, m: int) -> Fraction:
    """``B_n(m)`` for any integer ``m``."""
    return _classical(Family.FIRST, n, _as_int(m, "m"))


def classical_b_at_int(n: int, m: int) -> Fraction:
    """``b_n(m)`` for any integer ``m``."""
    return _classical(Family.SECOND, n, _as_int(m, "m"))


def _classical(family: Family, n: int, m: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    if m < 0:
        return eval_prop1(family, EvalSpec(n, 1, m))
    if m > 0:
        return eval_prop2(family, EvalSpec(n, 1, m))
    left = eval_prop1(family, EvalSpec(n, 1, 0))
    right = eval_prop2(family, EvalSpec(n, 1, 0))
    if left != right:
        raise InternalMismatch(f"{family.value}_{n}(0): {left} != {right}")
    return left


def classical_displays(n: int, r: int) -> dict[str, Fraction]:
    """The four order-1 sums for ``B_n(-r)``, ``b_n(-r)``, ``B_n(r)``, ``b_n(r)``.

    Written out directly rather than through :func:`eval_prop1` so that they
    can be checked against it.  The sums carrying a leading ``n`` are 0/0 at
    ``n = 0``; the degree-zero value 1 is returned there.
    """
    c2n = comb(2 * n, n)
    b_neg = (n + 1) * sum(
        Fraction(neg_one_pow(n + j) * comb(2 * n, n + j) * rstir(FIRST_KIND, n + r + j, r + j, r), j + 1)
        for j in range(n + 1)) / c2n
    B_pos = (n + 1) * sum(
        Fraction(neg_one_pow(j) * comb(2 * n, n + j) * rstir(SECOND_KIND, n + r + j, r + j, r), j + 1)
        for j in range(n + 1)) / c2n
    if n == 0:
        B_neg = b_pos = Fraction(1)
    else:
        B_neg = n * sum(
            Fraction(neg_one_pow(n + j) * comb(2 * n, n + j)
                     * rstir(FIRST_KIND, n + r + j + 1, r + j + 1, r + 1), n + j)
            for j in range(n + 1))
        b_pos = n * sum(
            Fraction(neg_one_pow(j) * comb(2 * n, n + j)
                     * rstir(SECOND_KIND, n + r + j + 1, r + j + 1, r + 1), n + j)
            for j in range(n + 1))
    return {"B(-r)": B_neg, "b(-r)": b_neg, "B(r)": B_pos, "b(r)": b_pos}


def bernoulli_number_reps(n: int) -> dict[str, Fraction]:
    """``B_n`` and ``b_n`` each written two ways, with ordinary Stirling numbers."""
    c2n = comb(2 * n, n)
    b_first = (n + 1) * sum(
        Fraction(neg_one_pow(n + j) * comb(2 * n, n + j) * stirling1(n + j, j), j + 1)
        for j in range(n + 1)) / c2n
    B_second = (n + 1) * sum(
        Fraction(neg_one_pow(j) * comb(2 * n, n + j) * stirling2(n + j, j), j + 1)
        for j in range(n + 1)) / c2n
    if n == 0:
        B_first = b_second = Fraction(1)
    else:
        B_first = n * sum(
            Fraction(neg_one_pow(n + j) * comb(2 * n, n + j) * stirling1(n + j + 1, j + 1), n + j)
            for j in range(n + 1))
        b_second = n * sum(
            Fraction(neg_one_pow(j) * comb(2 * n, n + j) * stirling2(n + j + 1, j + 1), n + j)
            for j in range(n + 1))
    return {"B_first": B_first, "B_second": B_second,
            "b_first": b_first, "b_second": b_second}


# -- Genocchi and Euler ------------------------------------------------------

def genocchi_routes(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """``G_n`` from ``B_2n`` (series), and from the two Stirling-number sums."""
    if n < 1:
        raise ValueError("Genocchi numbers are indexed from n = 1")
    m = 2 * n
    factor = 1 - 4 ** n
    by_product = 2 * factor * oracle_eval(Family.FIRST, m, 1, 0)
    by_first = 4 * n * factor * sum(
        Fraction(neg_one_pow(j) * comb(2 * m, m + j) * stirling1(m + j + 1, j + 1), m + j)
        for j in range(m + 1))
    by_second = 2 * (m + 1) * factor * sum(
        Fraction(neg_one_pow(j) * comb(2 * m, m + j) * stirling2(m + j, j), j + 1)
        for j in range(m + 1)) / comb(2 * m, m)
    return by_product, by_first, by_second


def genocchi(n: int) -> int:
    routes = genocchi_routes(n)
    if len(set(routes)) != 1:
        raise InternalMismatch(f"Genocchi routes disagree at n={n}: {routes}")
    g = routes[0]
    if g.denominator != 1:
        raise InternalMismatch(f"G_{n} = {g} is not an integer")
    return g.numerator


def euler_at_even(n: int, m: int) -> Fraction:
    """``E_{n-1}(m)`` for even ``m`` via ``(2/n)(B_n(m) - 2**n B_n(m/2))``."""
    m = _as_int(m, "m")
    if m % 2:
        raise OddArgument(f"m must be even, got {m}")
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(2, n) * (classical_B_at_int(n, m) - 2 ** n * classical_B_at_int(n, m // 2))


def remark2_B(n: int, r: int) -> Fraction:
    """``B_n(r) = sum_j (-1)**j j!/(j+1) {n+r, j+r}_r``."""
    return sum(
        (Fraction(neg_one_pow(j) * factorial(j), j + 1) * rstir(SECOND_KIND, n + r, j + r, r)
         for j in range(n + 1)),
        Fraction(0),
    )


def expansion_high_order(family, n: int, k: int, x: int) -> Fraction:
    """``B_n^(n+k+1)(x)`` or ``b_n^(n+k+1)(x)`` as a finite Stirling sum."""
    family = Family.parse(family)
    x = _as_int(x)
    if family is Family.FIRST:
        s = sum(Fraction(neg_one_pow(j) * comb(n + k, j + k) * stirling1(j + k, k)) * falling(x - 1, n - j)
                for j in range(n + 1))
    else:
        s = sum(Fraction(comb(n + k, j + k) * stirling2(j + k, k) * (x + 1) ** (n - j))
                for j in range(n + 1))
    return s / comb(n + k, k)
