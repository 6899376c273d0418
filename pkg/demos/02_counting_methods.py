"""
Counting involutions five ways
==============================

``f(N, p)`` is the number of fixed-point-free involutions of {1..2N} with no
decreasing subsequence longer than 2p.  It is also the number of returning
walks of p vicious walkers of length 2N.
"""

import time

from viciouswalk import Method, f_inv
from viciouswalk.counting import catalan, double_factorial

for N in range(1, 6):
    row = []
    for p in range(1, 4):
        values = {m: f_inv(N, p, m).value for m in Method}
        assert len(set(values.values())) == 1
        row.append(values[Method.DETERMINANT])
    print(N, row)

###############################################################################
# One walker gives the Catalan numbers.  With at least N walkers nothing is
# excluded and every one of the (2N-1)!! pairings counts.

print([f_inv(N, 1).value for N in range(9)])
print([catalan(N) for N in range(9)])
print(f_inv(6, 6, Method.WALK_DP).value, double_factorial(11))

###############################################################################
# Brute force stops being practical near N = 8.  The determinant is exact at
# any size because it only ever handles Python integers.

t0 = time.perf_counter()
big = f_inv(60, 2).value
print(big, f"({time.perf_counter() - t0:.2f} s, {big.bit_length()} bits)")
