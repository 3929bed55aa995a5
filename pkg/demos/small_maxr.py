"""
Exact mixed Ramsey numbers for tiny n
=====================================

maxr(n; K_m, K_4) by branch and bound over set partitions of the edges,
checked against a plain enumeration of every partition.
"""

import time

import numpy as np

from mixramsey.admissibility import nlogn_reference, theorem_bound
from mixramsey.maxr import brute_force_maxr, unpruned_maxr

rows = []
for n in range(3, 6):
    for m in range(3, 6):
        a = brute_force_maxr(n, m)
        b = unpruned_maxr(n, m)
        assert a.value == b.value
        rows.append((n, m, a.value, theorem_bound(n, m), nlogn_reference(n)))

table = np.array(rows)
np.set_printoptions(precision=2, suppress=True)
print(" n  m  maxr  upper  nlogn")
print(table)

t0 = time.perf_counter()
r = brute_force_maxr(6, 3)
print("maxr(6; K_3, K_4) =", r.value, f"({time.perf_counter() - t0:.1f}s)")
print(r.witness.upper())
