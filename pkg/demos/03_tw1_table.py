"""
Tabulating the GOE Tracy-Widom law
==================================

F1 is built from the Hastings-McLeod solution of Painleve II, integrated
backwards from s = 8 where q is indistinguishable from Ai.
"""

import numpy as np

from viciouswalk.tw1 import build_f1_table, goe_mc_cdf
from viciouswalk.stats import ks_distance

table = build_f1_table()
for x in (-4, -3, -2, -1, 0, 1, 2):
    print(f"F1({x:+d}) = {table(x):.6f}")

density = np.gradient(table.values, table.grid)
mean = np.trapezoid(table.grid * density, table.grid)
print("mean", mean, "median", table.quantile(0.5))

###############################################################################
# The largest eigenvalue of a large GOE matrix, centred at sqrt(2M) and
# scaled by sqrt(2) M^(1/6), should follow the table.  The tridiagonal model
# makes M = 200 cheap.

cdf = goe_mc_cdf(200, 10_000, np.random.default_rng(0))
print("KS", ks_distance(cdf, table))
