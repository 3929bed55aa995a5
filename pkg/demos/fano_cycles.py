"""
Colouring K_14 from two 7-cycles
================================

Pick a 7-cycle on the points and one on the lines of the Fano plane so that
every pair of their edges is joined by an incidence.  Colour 0 goes to the
cycles and to non-incident point/line pairs, colour 1 to everything else.
"""

from itertools import islice

from mixramsey.admissibility import is_admissible
from mixramsey.colouring import extract_words, fano_colouring, fano_cycle_pairs, fano_cycles

C, D = fano_cycles()
print("points:", C)
print("lines: ", D)

sc = fano_colouring((C, D))
print(is_admissible(sc.base).to_text())
w = extract_words(sc)
print(w.w0, w.w1)

# a few more shift-invariant choices
for C2, D2 in islice(fano_cycle_pairs(), 1, 4):
    ok = is_admissible(fano_colouring((C2, D2)).base).admissible
    print(C2[1], D2[1], ok)
