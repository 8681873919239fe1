"""r-Stirling numbers of both kinds.

``rstir(kind, N, K, r)`` takes the indices exactly as they appear in the
bracket ``[N K]_r`` / brace ``{N K}_r``.  Values come from memoized
triangles built by the recurrences

    {N K}_r = K {N-1 K}_r + {N-1 K-1}_r          (N > r)
    [N K]_r = (N-1) [N-1 K]_r + [N-1 K-1]_r      (N > r)

on top of the base row ``f(r, K) = [K == r]``.  Two independent routes are
provided for cross-checking: brute-force enumeration of set partitions /
permutations, and coefficient extraction from the exponential generating
functions.  The first kind is the unsigned (cycle-counting) one.
"""

from __future__ import annotations

import enum
import itertools
import threading
from functools import lru_cache
from math import factorial

import numpy as np

from . import series as S

ENUM_BUDGET = 10


class StirlingKind(enum.Enum):
    FIRST = 1   # unsigned, cycles
    SECOND = 2  # set partitions

    @classmethod
    def parse(cls, value) -> "StirlingKind":
        if isinstance(value, cls):
            return value
        if value in (1, "1", "first", "FIRST"):
            return cls.FIRST
        if value in (2, "2", "second", "SECOND"):
            return cls.SECOND
        raise ValueError(f"unknown Stirling kind {value!r}")


class BudgetExceeded(ValueError):
    pass


class NonIntegerCoefficient(ArithmeticError):
    pass


class StirlingTable:
    """Triangle of ``f(N, K)`` for one kind and one ``r``, grown on demand.

    Row ``N`` is stored as a list indexed by ``K - r`` for ``r <= K <= N``.
    """

    def __init__(self, kind: StirlingKind, r: int):
        if r < 0:
            raise ValueError("r must be non-negative")
        self.kind = kind
        self.r = r
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return self.r + len(self._rows) - 1

    def extend(self, max_n: int) -> None:
        if max_n <= self.max_n:
            return
        with self._lock:
            rows = self._rows
            r = self.r
            while r + len(rows) - 1 < max_n:
                n = r + len(rows)  # row being built
                prev = rows[-1]    # row n - 1, entries K = r .. n-1
                second = self.kind is StirlingKind.SECOND
                row = []
                for K in range(r, n + 1):
                    i = K - r
                    stay = (K if second else n - 1) * prev[i] if i < len(prev) else 0
                    step = prev[i - 1] if i >= 1 else 0
                    row.append(stay + step)
                rows.append(row)

    def __call__(self, N: int, K: int) -> int:
        r = self.r
        if N < r or K < r or K > N:
            return 0
        if N > self.max_n:
            self.extend(N)
        return self._rows[N - r][K - r]

    def row(self, N: int) -> list[int]:
        """Values ``f(N, K)`` for ``K = 0 .. N``, zero-padded below ``r``."""
        return [self(N, K) for K in range(N + 1)]


_tables: dict[tuple[StirlingKind, int], StirlingTable] = {}


def table(kind, r: int) -> StirlingTable:
    kind = StirlingKind.parse(kind)
    key = (kind, r)
    t = _tables.get(key)
    if t is None:
        t = _tables.setdefault(key, StirlingTable(kind, r))
    return t


def rstir(kind, N: int, K: int, r: int) -> int:
    """``[N K]_r`` (kind FIRST) or ``{N K}_r`` (kind SECOND); zero out of range."""
    if N < 0 or K < 0 or r < 0:
        return 0
    return table(kind, r)(N, K)


def stirling1(N: int, K: int) -> int:
    return rstir(StirlingKind.FIRST, N, K, 0)


def stirling2(N: int, K: int) -> int:
    return rstir(StirlingKind.SECOND, N, K, 0)


# -- enumeration oracle ------------------------------------------------------

def _set_partitions(n: int):
    """Restricted growth strings of length n (block label of each element)."""
    if n == 0:
        yield ()
        return
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(labels)
            return
        for b in range(top + 2):
            labels[i] = b
            yield from rec(i + 1, max(top, b))

    labels[0] = 0
    yield from rec(1, 0)


@lru_cache(maxsize=None)
def _partition_counts(N: int) -> dict[tuple[int, int], int]:
    """Histogram over (blocks, r) of partitions of [N] whose elements 1..r
    lie in distinct blocks, for every r at once."""
    counts: dict[tuple[int, int], int] = {}
    for labels in _set_partitions(N):
        blocks = len(set(labels))
        r = 0
        while r < N and labels[r] not in labels[:r]:
            r += 1
        for rr in range(r + 1):
            counts[blocks, rr] = counts.get((blocks, rr), 0) + 1
    return counts


@lru_cache(maxsize=None)
def _permutation_counts(N: int) -> dict[tuple[int, int], int]:
    """Histogram over (cycles, r) of permutations of [N] whose elements
    1..r lie in distinct cycles, for every r at once."""
    if N == 0:
        return {(0, 0): 1}
    perms = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(range(N))),
        dtype=np.int8,
        count=factorial(N) * N,
    ).reshape(-1, N)
    # cycle_min[:, i] = smallest element on the cycle through i
    cycle_min = np.broadcast_to(np.arange(N, dtype=np.int8), perms.shape).copy()
    cur = cycle_min.copy()
    for _ in range(N - 1):
        cur = np.take_along_axis(perms, cur.astype(np.intp), axis=1)
        np.minimum(cycle_min, cur, out=cycle_min)
    cycles = (cycle_min == np.arange(N)).sum(axis=1)

    counts: dict[tuple[int, int], int] = {}
    distinct = np.ones(len(perms), dtype=bool)
    for r in range(N + 1):
        if r >= 2:
            for i in range(r - 1):
                distinct &= cycle_min[:, r - 1] != cycle_min[:, i]
        c = np.bincount(cycles[distinct], minlength=N + 1)
        for k in range(N + 1):
            if c[k]:
                counts[k, r] = int(c[k])
    return counts


def rstir_enum_oracle(kind, N: int, K: int, r: int) -> int:
    """Count r-restricted partitions/permutations of [N] by brute force."""
    kind = StirlingKind.parse(kind)
    if N > ENUM_BUDGET:
        raise BudgetExceeded(f"enumeration limited to N <= {ENUM_BUDGET}, got {N}")
    if min(N, K, r) < 0 or r > N:
        return 0
    hist = _partition_counts(N) if kind is StirlingKind.SECOND else _permutation_counts(N)
    return hist.get((K, r), 0)


def bell_by_enumeration(N: int) -> int:
    if N > ENUM_BUDGET:
        raise BudgetExceeded(f"enumeration limited to N <= {ENUM_BUDGET}, got {N}")
    return sum(1 for _ in _set_partitions(N))


# -- generating-function oracle ---------------------------------------------

def rstir_gf_oracle(kind, n: int, k: int, r: int) -> int:
    """``[n+r, k+r]_r`` or ``{n+r, k+r}_r`` as ``n! [t^n]`` of its EGF.

    Second kind: ``(exp(t) - 1)**k exp(r t) / k!``.
    First kind:  ``(-log(1 - t))**k (1 - t)**(-r) / k!``.
    """
    kind = StirlingKind.parse(kind)
    if min(n, k, r) < 0:
        return 0
    order = n + 1
    if kind is StirlingKind.SECOND:
        inner = S.exp_t(order) - S.one(order)             # exp(t) - 1
        tail = S.exp_t(order, r)                          # exp(r t)
    else:
        one_minus_t = S.from_function(lambda i: (1, -1)[i] if i < 2 else 0, order)
        inner = -S.log(one_minus_t)                       # -log(1 - t)
        tail = S.power(one_minus_t, -r)                   # (1 - t)**(-r)
    acc = S.one(order)
    for _ in range(k):
        acc = acc * inner
    value = S.egf_coeff(acc * tail, n) / factorial(k)
    if value.denominator != 1:
        raise NonIntegerCoefficient(f"non-integral coefficient {value} at n={n}, k={k}, r={r}")
    return value.numerator
