"""Exact maxr(n; K_m, K_4) for tiny n by enumerating edge-set partitions.

Colourings up to colour permutation are restricted growth strings over the
edges of K_n in row-major order (0,1), (0,2), ..., (n-2,n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .colouring import EdgeColouring

MIN_N, MAX_N = 3, 6


@dataclass(frozen=True)
class MaxrResult:
    value: int
    witness: EdgeColouring


def edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def _sets_completed_by(n: int, size: int):
    """For each edge, the vertex sets of ``size`` whose last edge it is, as edge-index tuples."""
    idx = edge_index(n)
    out = [[] for _ in idx]
    if size > n:
        return out
    for S in combinations(range(n), size):
        edges = [idx[e] for e in combinations(S, 2)]
        out[max(edges)].append(tuple(edges))
    return out


def brute_force_maxr(n: int, m: int) -> MaxrResult:
    """Branch and bound over restricted growth strings.

    Partial strings are cut when a completed m-set is monochromatic, a
    completed 4-set is rainbow, or the colours used plus edges left cannot
    beat the best found.  The witness is the least maximizing string.
    """
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"n must lie in {MIN_N}..{MAX_N}")
    if m < 3:
        raise ValueError("m must be at least 3")
    E = n * (n - 1) // 2
    mono_at = _sets_completed_by(n, m)
    rainbow_at = _sets_completed_by(n, 4)
    rgs = [0] * E
    best = [0, None]

    def ok(e):
        c = rgs[e]
        for edges in mono_at[e]:
            if all(rgs[f] == c for f in edges):
                return False
        for edges in rainbow_at[e]:
            if len({rgs[f] for f in edges}) == 6:
                return False
        return True

    def rec(e, used):
        if used + (E - e) <= best[0]:
            return
        if e == E:
            best[0], best[1] = used, list(rgs)
            return
        for c in range(used + 1):
            rgs[e] = c
            if ok(e):
                rec(e + 1, max(used, c + 1))

    rec(0, 0)
    return MaxrResult(best[0], EdgeColouring.from_upper(n, best[1]))


def _set_table(n: int, size: int) -> np.ndarray:
    idx = edge_index(n)
    rows = [[idx[e] for e in combinations(S, 2)] for S in combinations(range(n), size)]
    k = size * (size - 1) // 2
    return np.array(rows, dtype=np.int64).reshape(len(rows), k)


def _unpruned_kernel():
    from numba import njit

    @njit(cache=True)
    def run(E, mono, rainbow):
        a = np.zeros(E, dtype=np.int64)
        pmax = np.zeros(E, dtype=np.int64)  # max of a[0..i]
        best = 0
        witness = np.zeros(E, dtype=np.int64)
        seen = np.zeros(E + 1, dtype=np.int64)
        while True:
            k = pmax[E - 1] + 1
            if k > best:
                good = True
                for r in range(mono.shape[0]):
                    c = a[mono[r, 0]]
                    same = True
                    for s in range(1, mono.shape[1]):
                        if a[mono[r, s]] != c:
                            same = False
                            break
                    if same:
                        good = False
                        break
                if good:
                    for r in range(rainbow.shape[0]):
                        for s in range(6):
                            seen[s] = a[rainbow[r, s]]
                        distinct = True
                        for s in range(6):
                            for u in range(s + 1, 6):
                                if seen[s] == seen[u]:
                                    distinct = False
                                    break
                            if not distinct:
                                break
                        if distinct:
                            good = False
                            break
                if good:
                    best = k
                    witness[:] = a
            # successor in lexicographic order of restricted growth strings
            i = E - 1
            while i > 0 and a[i] == pmax[i - 1] + 1:
                i -= 1
            if i == 0:
                break
            a[i] += 1
            pmax[i] = max(pmax[i - 1], a[i])
            for j in range(i + 1, E):
                a[j] = 0
                pmax[j] = pmax[i]
        return best, witness

    return run


def unpruned_maxr(n: int, m: int) -> MaxrResult:
    """Reference enumerator: walks every restricted growth string.

    Admissibility is tested in full on each string whose colour count would
    raise the running maximum.
    """
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"n must lie in {MIN_N}..{MAX_N}")
    E = n * (n - 1) // 2
    mono = _set_table(n, m) if m <= n else np.zeros((0, 1), dtype=np.int64)
    rainbow = _set_table(n, 4)
    best, witness = _unpruned_kernel()(E, mono, rainbow)
    return MaxrResult(int(best), EdgeColouring.from_upper(n, witness.tolist()))
