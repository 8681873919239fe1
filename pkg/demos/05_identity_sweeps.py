"""
Sweeping binomial r-Stirling identities
=======================================

Each identity is checked exactly at every point of a grid.  The first-kind
displays need a factor (-1)^n; ``sign="paper"`` drops it and the sweep
finds the odd-n counterexamples.
"""

from bernstir import Grid, run_identity

grid = Grid(max_n=5, max_k=3, max_r=2, max_q=2)

for ident in ("c1-first", "c5-first", "c5-second", "carlitz"):
    rep = run_identity(ident, grid)
    print(ident, rep.checked, rep.failed)

rep = run_identity("c5-first", grid, sign="paper")
print(rep.failed, "of", rep.checked)
w = rep.failures[0]
print(w.params, w.lhs, w.rhs)
