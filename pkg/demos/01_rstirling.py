"""
r-Stirling numbers three ways
=============================

A recurrence table, brute-force enumeration and a generating function
all give the same triangle.
"""

from bernstir import StirlingKind, rstir, rstir_enum_oracle, rstir_gf_oracle

SECOND = StirlingKind.SECOND

# partitions of {1..N} into K blocks, with 1..r in distinct blocks
for N in range(2, 7):
    print(N, [rstir(SECOND, N, K, 2) for K in range(N + 1)])

# {5 3}_2 counted by walking every set partition of a 5-element set
print(rstir_enum_oracle(SECOND, 5, 3, 2), rstir(SECOND, 5, 3, 2))

# and read off n! [t^n] of (e^t - 1)^k e^{rt} / k!, offset by r
print(rstir_gf_oracle(SECOND, 3, 1, 2))

# r = 0 and r = 1 coincide
print(all(rstir(k, 7, K, 0) == rstir(k, 7, K, 1) for k in StirlingKind for K in range(8)))
