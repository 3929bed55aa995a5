"""
Searching rotational word pairs
===============================

Enumerate every admissible two-symbol word pair for q=2 and q=3, compare
with a brute-force enumeration, and count models of the CNF encoding.
"""

import time

from mixramsey.cnf import count_models, encode_sat
from mixramsey.projective_plane import labeling_with_offsets
from mixramsey.search import SearchConfig, exhaustive_rotational, search_rotational, verify_words
from mixramsey.colouring import WordPair

t0 = time.perf_counter()
res = search_rotational(SearchConfig(2, mode="all"))
print(f"q=2: {len(res.solutions)} pairs, {res.nodes_explored} nodes, {time.perf_counter() - t0:.2f}s")
print("first:", res.solutions[0].w0, res.solutions[0].w1)

brute = exhaustive_rotational(SearchConfig(2, mode="all"))
print("brute force agrees:", sorted((w.w0, w.w1) for w in brute) == sorted((w.w0, w.w1) for w in res.solutions))
print("CNF models:", count_models(encode_sat(2)))

# q = 3, on the labeling whose star offsets are 1 7 11 25
w3 = WordPair(3, "*00001*001*1110100110010*", "*0100110010111*100*10000*")
r = verify_words(3, w3)
print("q=3 pair:", r.colour_count, "colours, admissible", r.report.admissible)

lab = labeling_with_offsets(3, w3.stars(0))
t0 = time.perf_counter()
n3 = search_rotational(SearchConfig(3, mode="count", offsets=w3.stars(0))).count
print(f"q=3 (exponent {lab.exponent}): {n3} pairs in {time.perf_counter() - t0:.1f}s")
