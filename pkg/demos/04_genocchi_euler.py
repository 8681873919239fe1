"""
Bernoulli numbers, Genocchi numbers, Euler values
=================================================
"""

from bernstir import classical_B_at_int, euler_at_even, genocchi
from bernstir.bernoulli import bernoulli_number_reps, genocchi_routes

for n in (2, 4, 12):
    print(n, classical_B_at_int(n, 0), *bernoulli_number_reps(n).values())

# each Genocchi number three ways
for n in range(1, 7):
    print(n, genocchi(n), *genocchi_routes(n))

# E_{n-1} at even integers through Bernoulli values
print(*(euler_at_even(3, m) for m in range(-4, 5, 2)))
