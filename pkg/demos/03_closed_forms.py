"""
Closed forms at integer points
==============================

Finite sums of r-Stirling numbers, weighted by binomials, reproduce the
series values.  The free parameters p and q do not change the answer,
except that some choices put a sample on a pole.
"""

from fractions import Fraction

from bernstir import EvalSpec, PoleAtSampledPoint, eval_prop1, eval_prop2, evaluate, oracle_eval

alpha = Fraction(-5, 2)
for x in (-3, 0, 3):
    route = eval_prop1 if x <= 0 else eval_prop2
    values = {route("B", EvalSpec(5, alpha, x, p, q)) for p in (5, 6, 8) for q in (0, 1, 2)}
    print(x, *values, oracle_eval("B", 5, alpha, x))

try:
    evaluate("B", 2, 5, 0)
except PoleAtSampledPoint as e:
    print("pole:", e)
print(evaluate("B", 2, 5, 0, retry_poles=True), oracle_eval("B", 2, 5, 0))

# at negative integer order the sum collapses to one r-Stirling number
print(evaluate("B", 3, -2, 2), oracle_eval("B", 3, -2, 2))
