"""Grid sweeps over the r-Stirling / binomial identities.

Each ``check_*`` function evaluates both sides of one identity exactly at
every point of a parameter grid and returns an :class:`IdentityReport`.
Points are visited in lexicographic order of their parameter tuple, so the
recorded witnesses are the smallest failing points and reports are
reproducible.

The binomial-sum identities come in two families, built on first-kind
r-Stirling numbers ``[N K]_r`` (first display) or second-kind ``{N K}_r``
(second display).  As published, the first display of each family (and the
first-kind specialisations at ``r = 1`` and ``k = 0`` of the order ``n+k+1``
family) is off by a factor ``(-1)**n``: the two sides agree for even ``n``
and are negatives of each other for odd ``n``.  ``sign="corrected"`` (the
default) applies the factor; ``sign="paper"`` keeps the printed form so the
discrepancy stays checkable.  Second displays are unaffected by ``sign``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional

from .bernoulli import (
    Family,
    falling,
    oracle_eval,
    remark2_B,
    rising,
    neg_one_pow,
    special_neg_order,
)
from .rstirling import StirlingKind, rstir

MAX_WITNESSES = 16
DEFAULT_ALPHAS = (
    Fraction(1), Fraction(2), Fraction(5),
    Fraction(1, 2), Fraction(-5, 2), Fraction(7, 3),
)

FIRST = StirlingKind.FIRST
SECOND = StirlingKind.SECOND


class IdentityId(enum.Enum):
    C1_FIRST = "c1-first"
    C1_SECOND = "c1-second"
    C1_EX_R1_FIRST = "c1-ex-r1-first"
    C1_EX_R1_SECOND = "c1-ex-r1-second"
    C1_EX_K0_FIRST = "c1-ex-k0-first"
    C1_EX_K0_SECOND = "c1-ex-k0-second"
    C1_EX_N0 = "c1-ex-n0"
    C5_FIRST = "c5-first"
    C5_SECOND = "c5-second"
    C5_EX_K0_FIRST = "c5-ex-k0-first"
    C5_EX_K0_SECOND = "c5-ex-k0-second"
    C5_EX_N0 = "c5-ex-n0"
    A5 = "a5"
    A6 = "a6"
    CARLITZ = "carlitz"
    REMARK2 = "remark2"


@dataclass(frozen=True)
class Grid:
    """Sweep ranges.  ``p`` runs over ``n + offset`` for each offset."""

    max_n: int = 8
    max_k: int = 4
    max_r: int = 3
    max_q: int = 3
    p_offsets: tuple[int, ...] = (0, 2)
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS

    def __post_init__(self):
        if min(self.max_n, self.max_k, self.max_r, self.max_q) < 0:
            raise ValueError("grid bounds must be non-negative")
        if not self.p_offsets or min(self.p_offsets) < 0:
            raise ValueError("p offsets must be non-negative")
        object.__setattr__(self, "p_offsets", tuple(sorted(set(self.p_offsets))))
        object.__setattr__(self, "alphas", tuple(sorted(set(Fraction(a) for a in self.alphas))))

    def ranges(self, dims: Iterable[str]) -> dict:
        full = {
            "n": [0, self.max_n],
            "k": [0, self.max_k],
            "r": [0, self.max_r],
            "q": [0, self.max_q],
            "p": {"n_plus": list(self.p_offsets)},
            "x": [-self.max_r, self.max_r],
            "alpha": [str(a) for a in self.alphas],
        }
        return {d: full[d] for d in dims}


@dataclass
class Failure:
    params: dict
    lhs: Fraction
    rhs: Fraction


@dataclass
class IdentityReport:
    id: IdentityId
    grid: dict
    checked: int = 0
    failed: int = 0
    failures: list[Failure] = field(default_factory=list)
    sign: Optional[str] = None

    @property
    def verified(self) -> bool:
        return self.failed == 0


def _sweep(
    ident: IdentityId,
    grid: Grid,
    dims: tuple[str, ...],
    points: Iterable[tuple],
    sides: Callable[..., tuple[Fraction, Fraction]],
    sign: Optional[str] = None,
) -> IdentityReport:
    report = IdentityReport(ident, grid.ranges(dims), sign=sign)
    for pt in sorted(points):
        lhs, rhs = sides(*pt)
        report.checked += 1
        if lhs != rhs:
            report.failed += 1
            if len(report.failures) < MAX_WITNESSES:
                report.failures.append(
                    Failure(dict(zip(dims, pt)), Fraction(lhs), Fraction(rhs)))
    return report


def grid_points(grid: Grid, dims: tuple[str, ...]) -> list[tuple]:
    """All parameter tuples for ``dims``; ``p`` is tied to ``n`` (0 when absent)."""
    axes = {
        "n": range(grid.max_n + 1),
        "k": range(grid.max_k + 1),
        "r": range(grid.max_r + 1),
        "q": range(grid.max_q + 1),
        "alpha": grid.alphas,
        "x": range(-grid.max_r, grid.max_r + 1),
    }
    free = [d for d in dims if d != "p"]
    out = []
    for combo in itertools.product(*(axes[d] for d in free)):
        vals = dict(zip(free, combo))
        if "p" in dims:
            for off in grid.p_offsets:
                vals["p"] = vals.get("n", 0) + off
                out.append(tuple(vals[d] for d in dims))
        else:
            out.append(tuple(vals[d] for d in dims))
    return out


def _kind(variant: str) -> StirlingKind:
    if variant == "first":
        return FIRST
    if variant == "second":
        return SECOND
    raise ValueError(f"variant must be 'first' or 'second', got {variant!r}")


# -- first corollary family (order n+k+1) ------------------------------------

def c1_lhs(kind: StirlingKind, n, k, r, q, p) -> int:
    return sum(
        neg_one_pow(j) * comb(j + q, q) * comb(n + k + q + j, k) * comb(n + k + p + q + 1, p - j)
        * rstir(kind, n + r + j + q, r + j + q, r)
        for j in range(p + 1))


SIGNS = ("corrected", "paper")


def _check_sign(convention: str) -> None:
    if convention not in SIGNS:
        raise ValueError(f"sign must be 'paper' or 'corrected', got {convention!r}")


def c1_rhs(kind: StirlingKind, n, k, r, q, convention: str = "corrected") -> Fraction:
    if kind is FIRST:
        s = sum(neg_one_pow(n - j) * comb(n + k, j + k) * rstir(SECOND, j + k, k, 0) * (r - 1) ** (n - j)
                for j in range(n + 1))
        if convention == "corrected":
            s *= neg_one_pow(n)
    else:
        s = sum(neg_one_pow(j) * comb(n + k, j + k) * rstir(FIRST, j + k, k, 0) * falling(r - 1, n - j)
                for j in range(n + 1))
    return comb(n + k + q, q) * Fraction(s)


def check_c1(variant: str, grid: Grid = Grid(), sign: str = "corrected") -> IdentityReport:
    _check_sign(sign)
    kind = _kind(variant)
    ident = IdentityId.C1_FIRST if kind is FIRST else IdentityId.C1_SECOND
    dims = ("n", "k", "r", "q", "p")
    return _sweep(ident, grid, dims, grid_points(grid, dims),
                  lambda n, k, r, q, p: (c1_lhs(kind, n, k, r, q, p),
                                         c1_rhs(kind, n, k, r, q, sign)),
                  sign=sign if kind is FIRST else None)


def check_c1_examples(
    which: str, grid: Grid = Grid(), variant: str = "first", sign: str = "corrected"
) -> IdentityReport:
    """Specialisations at ``r = 1``, ``k = 0`` and ``n = 0``, each transcribed
    on its own rather than derived from :func:`check_c1`."""
    _check_sign(sign)
    fix = neg_one_pow if sign == "corrected" else (lambda n: 1)
    if which == "n0":
        dims = ("k", "q", "p")

        def sides(k, q, p):
            lhs = sum(neg_one_pow(j) * comb(j + q, q) * comb(k + q + j, k) * comb(k + q + p + 1, p - j)
                      for j in range(p + 1))
            return lhs, comb(k + q, q)

        return _sweep(IdentityId.C1_EX_N0, grid, dims, grid_points(grid, dims), sides)

    kind = _kind(variant)
    if which == "r1":
        ident = IdentityId.C1_EX_R1_FIRST if kind is FIRST else IdentityId.C1_EX_R1_SECOND
        dims = ("n", "k", "q", "p")

        def sides(n, k, q, p):
            sgn = neg_one_pow if kind is FIRST else (lambda j: neg_one_pow(n - j))
            lhs = sum(sgn(j) * comb(j + q, q) * comb(n + k + q + j, k) * comb(n + k + p + q + 1, p - j)
                      * rstir(kind, j + n + q + 1, j + q + 1, 0)
                      for j in range(p + 1))
            if kind is FIRST:
                return lhs, fix(n) * comb(n + k + q, q) * rstir(SECOND, n + k, k, 0)
            return lhs, comb(n + k + q, q) * rstir(FIRST, n + k, k, 0)

    elif which == "k0":
        ident = IdentityId.C1_EX_K0_FIRST if kind is FIRST else IdentityId.C1_EX_K0_SECOND
        dims = ("n", "r", "q", "p")

        def sides(n, r, q, p):
            sgn = (lambda j: neg_one_pow(n - j)) if kind is FIRST else neg_one_pow
            lhs = sum(sgn(j) * comb(j + q, q) * comb(n + p + q + 1, p - j)
                      * rstir(kind, n + r + j + q, r + j + q, r)
                      for j in range(p + 1))
            if kind is FIRST:
                return lhs, fix(n) * comb(n + q, q) * Fraction((r - 1) ** n)
            return lhs, comb(n + q, q) * falling(r - 1, n)

    else:
        raise ValueError(f"unknown example {which!r}; expected r1, k0 or n0")
    return _sweep(ident, grid, dims, grid_points(grid, dims), sides,
                  sign=sign if kind is FIRST else None)


# -- second corollary family (order -k) --------------------------------------

def c5_lhs(kind: StirlingKind, n, k, r, q, p) -> int:
    return sum(
        neg_one_pow(j) * comb(n + p + q + k + 1, p - j) * comb(q + j, j) * comb(q + k + 1 + j, k)
        * rstir(kind, n + r + q + k + 1 + j, r + q + k + 1 + j, r)
        for j in range(p + 1))


def c5_rhs(kind: StirlingKind, n, k, r, q, p, convention: str = "corrected") -> int:
    value = comb(n + p + q + k + 1, n + k) * rstir(kind, n + k + r, k + r, r)
    if convention == "paper" and kind is FIRST:
        value *= neg_one_pow(n)
    return value


def check_c5(variant: str, sign: str = "corrected", grid: Grid = Grid()) -> IdentityReport:
    _check_sign(sign)
    kind = _kind(variant)
    ident = IdentityId.C5_FIRST if kind is FIRST else IdentityId.C5_SECOND
    dims = ("n", "k", "r", "q", "p")
    return _sweep(ident, grid, dims, grid_points(grid, dims),
                  lambda n, k, r, q, p: (c5_lhs(kind, n, k, r, q, p),
                                         c5_rhs(kind, n, k, r, q, p, sign)),
                  sign=sign if kind is FIRST else None)


def check_c5_examples(which: str, grid: Grid = Grid(), variant: str = "first") -> IdentityReport:
    if which == "n0":
        dims = ("k", "q", "p")

        def sides(k, q, p):
            lhs = sum(neg_one_pow(j) * comb(p + q + k + 1, p - j) * comb(q + j, q) * comb(q + k + 1 + j, k)
                      for j in range(p + 1))
            return lhs, comb(p + q + k + 1, k)

        return _sweep(IdentityId.C5_EX_N0, grid, dims, grid_points(grid, dims), sides)
    if which != "k0":
        raise ValueError(f"unknown example {which!r}; expected k0 or n0")

    kind = _kind(variant)
    ident = IdentityId.C5_EX_K0_FIRST if kind is FIRST else IdentityId.C5_EX_K0_SECOND
    dims = ("n", "r", "q", "p")

    def sides(n, r, q, p):
        lhs = sum(neg_one_pow(j) * comb(n + p + q + 1, p - j) * comb(q + j, j)
                  * rstir(kind, n + r + q + 1 + j, r + q + 1 + j, r)
                  for j in range(p + 1))
        tail = rising(r, n) if kind is FIRST else Fraction(r ** n)
        return lhs, comb(n + p + q + 1, n) * tail

    return _sweep(ident, grid, dims, grid_points(grid, dims), sides)


# -- identities checked against the series oracle ---------------------------

def check_basic(ident, grid: Grid = Grid()) -> IdentityReport:
    ident = IdentityId(ident) if not isinstance(ident, IdentityId) else ident
    if ident is IdentityId.A5:
        dims = ("n", "k", "r")

        def sides(n, k, r):
            return (special_neg_order(Family.FIRST, n, k, r),
                    oracle_eval(Family.FIRST, n, -k, r))
    elif ident is IdentityId.A6:
        dims = ("n", "k", "r")

        def sides(n, k, r):
            return (special_neg_order(Family.SECOND, n, k, r),
                    oracle_eval(Family.SECOND, n, -k, -r))
    elif ident is IdentityId.CARLITZ:
        dims = ("n", "alpha", "x")

        def sides(n, alpha, x):
            return (oracle_eval(Family.FIRST, n, alpha, x),
                    oracle_eval(Family.SECOND, n, n + 1 - alpha, x - 1))
    elif ident is IdentityId.REMARK2:
        dims = ("n", "r")

        def sides(n, r):
            return remark2_B(n, r), oracle_eval(Family.FIRST, n, 1, r)
    else:
        raise ValueError(f"{ident.value} is not an oracle-checked identity")
    return _sweep(ident, grid, dims, grid_points(grid, dims), sides)


def run_identity(ident, grid: Grid = Grid(), sign: str = "corrected") -> IdentityReport:
    """Dispatch on an :class:`IdentityId` or its string value."""
    ident = IdentityId(ident) if not isinstance(ident, IdentityId) else ident
    I = IdentityId
    table = {
        I.C1_FIRST: lambda: check_c1("first", grid, sign),
        I.C1_SECOND: lambda: check_c1("second", grid, sign),
        I.C1_EX_R1_FIRST: lambda: check_c1_examples("r1", grid, "first", sign),
        I.C1_EX_R1_SECOND: lambda: check_c1_examples("r1", grid, "second", sign),
        I.C1_EX_K0_FIRST: lambda: check_c1_examples("k0", grid, "first", sign),
        I.C1_EX_K0_SECOND: lambda: check_c1_examples("k0", grid, "second", sign),
        I.C1_EX_N0: lambda: check_c1_examples("n0", grid),
        I.C5_FIRST: lambda: check_c5("first", sign, grid),
        I.C5_SECOND: lambda: check_c5("second", sign, grid),
        I.C5_EX_K0_FIRST: lambda: check_c5_examples("k0", grid, "first"),
        I.C5_EX_K0_SECOND: lambda: check_c5_examples("k0", grid, "second"),
        I.C5_EX_N0: lambda: check_c5_examples("n0", grid),
    }
    if ident in table:
        return table[ident]()
    return check_basic(ident, grid)


def run_all(grid: Grid = Grid(), sign: str = "corrected") -> list[IdentityReport]:
    return [run_identity(i, grid, sign) for i in IdentityId]
