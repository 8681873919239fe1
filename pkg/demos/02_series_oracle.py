"""
Truncated power series over the rationals
=========================================

Everything below is exact.  The same machinery is the independent
reference for the higher-order Bernoulli values.
"""

from fractions import Fraction

from bernstir import series as S
from bernstir import oracle_eval

order = 8
t_over_expm1 = S.one(order) / S.expm1_over_t(order)
print(*(S.egf_coeff(t_over_expm1, n) for n in range(order)))

# fractional powers go through exp(alpha * log a)
root = S.power(S.expm1_over_t(order), Fraction(1, 2))
print(root * root == S.expm1_over_t(order))

# B_n^(alpha)(x): [t^n] n! (t/(e^t-1))^alpha e^{xt}
print(oracle_eval("B", 4, Fraction(7, 3), -1))
print(oracle_eval("b", 4, Fraction(7, 3), -1))
