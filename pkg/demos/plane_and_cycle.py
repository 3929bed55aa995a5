"""
Projective planes and their rotational Hamilton cycles
======================================================

Build PG(2,q), its point/line incidence graph, and the cyclic labeling that
makes a shift by two an automorphism.
"""

from mixramsey.finite_field import build_field
from mixramsey.projective_plane import (
    build_plane, graph_stats, is_planar_difference_set, levi_graph,
    offsets_to_residues, rotational_cycle, verify_rotational,
)

# GF(8) with its default modulus; coefficients are listed low degree first
F = build_field(2, 3)
print("GF(8) modulus", F.modulus, "alpha^7 =", F.power(7))

for q in (2, 3, 4, 5):
    plane = build_plane(q)
    L = levi_graph(plane)
    print(f"q={q}:", graph_stats(L))

    lab = rotational_cycle(q)
    N = q * q + q + 1
    res = sorted(offsets_to_residues(lab.offsets, N))
    print("   rotational:", verify_rotational(L, lab),
          " offsets:", lab.offsets,
          " residues:", res, "difference set:", is_planar_difference_set(N, res))
