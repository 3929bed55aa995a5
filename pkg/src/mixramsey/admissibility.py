"""Admissibility of edge-colourings and the colour-count bounds.

A colouring of K_n is admissible for m when it has no monochromatic K_m and
no rainbow K_4.  Bounds are compared exactly by squaring both sides.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .colouring import EdgeColouring, colour_count


class NotAdmissibleError(ValueError):
    pass


def _colour_masks(rows: list[list[int]]) -> list[dict[int, int]]:
    n = len(rows)
    masks: list[dict[int, int]] = [{} for _ in range(n)]
    for i in range(n):
        mi, ri = masks[i], rows[i]
        for j in range(n):
            if j != i:
                c = ri[j]
                mi[c] = mi.get(c, 0) | (1 << j)
    return masks


def _extend(masks, colour, chosen, cand, need):
    if need == 0:
        return chosen
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        found = _extend(masks, colour, chosen + [v], cand & masks[v].get(colour, 0), need - 1)
        if found:
            return found
    return None


def find_mono_clique(colouring: EdgeColouring, m: int):
    """Lexicographically least m-set spanning a monochromatic K_m, or None."""
    if m < 3:
        raise ValueError("m must be at least 3")
    n = colouring.n
    if m > n:
        return None
    rows = colouring.rows()
    masks = _colour_masks(rows)
    for a in range(n):
        for b in range(a + 1, n):
            c = rows[a][b]
            cand = masks[a][c] & masks[b][c] & ~((2 << b) - 1)
            found = _extend(masks, c, [a, b], cand, m - 2)
            if found:
                witness = tuple(found)
                assert len({rows[x][y] for x, y in combinations(witness, 2)}) == 1
                return witness
    return None


def find_rainbow_k4(colouring: EdgeColouring):
    """Lexicographically least 4-set whose six edges have distinct colours, or None."""
    n = colouring.n
    if n < 4:
        raise ValueError("K_4 needs at least 4 vertices")
    rows = colouring.rows()
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            ab = ra[b]
            rb = rows[b]
            for c in range(b + 1, n):
                ac, bc = ra[c], rb[c]
                if ac == ab or bc == ab or bc == ac:
                    continue
                rc = rows[c]
                for d in range(c + 1, n):
                    ad, bd, cd = ra[d], rb[d], rc[d]
                    if len({ab, ac, bc, ad, bd, cd}) == 6:
                        return (a, b, c, d)
    return None


def theorem_bound(n: int, m: int) -> float:
    """n^(3/2) * sqrt(2m), the upper bound on colours of an admissible K_n."""
    if m < 3:
        raise ValueError("m must be at least 3")
    if n < 1:
        raise ValueError("n must be positive")
    return n**1.5 * math.sqrt(2 * m)


def within_theorem_bound(colours: int, n: int, m: int) -> bool:
    return colours * colours <= 2 * m * n**3


def base_case_check(m: int) -> bool:
    """C(n, 2) < n^(3/2) sqrt(2m) for every n up to 21, compared exactly."""
    if m < 3:
        raise ValueError("m must be at least 3")
    return all(math.comb(n, 2) ** 2 < 2 * m * n**3 for n in range(1, 22))


def nlogn_reference(n: int) -> float:
    """The n log n lower-bound reference line (natural log)."""
    return n * math.log(n) if n > 0 else 0.0


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    mono_witness: tuple[int, ...] | None
    rainbow_witness: tuple[int, ...] | None
    colour_count: int
    theorem_bound: float
    m: int

    def to_text(self) -> str:
        lines = [
            f"admissible {'true' if self.admissible else 'false'}",
            f"colours {self.colour_count}",
            f"bound {self.theorem_bound:.6f}",
        ]
        if self.mono_witness is not None:
            lines.append("mono " + " ".join(map(str, self.mono_witness)))
        if self.rainbow_witness is not None:
            lines.append("rainbow " + " ".join(map(str, self.rainbow_witness)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, m: int = 4) -> "AdmissibilityReport":
        fields = dict(line.split(" ", 1) for line in text.strip().splitlines())
        ids = lambda key: tuple(int(x) for x in fields[key].split()) if key in fields else None  # noqa: E731
        return cls(
            admissible=fields["admissible"] == "true",
            mono_witness=ids("mono"),
            rainbow_witness=ids("rainbow"),
            colour_count=int(fields["colours"]),
            theorem_bound=float(fields["bound"]),
            m=m,
        )


def is_admissible(colouring: EdgeColouring, m: int = 4) -> AdmissibilityReport:
    n = colouring.n
    if n < 1:
        raise ValueError("empty colouring")
    mono = find_mono_clique(colouring, m)
    rainbow = find_rainbow_k4(colouring) if n >= 4 else None
    count = colour_count(colouring)
    admissible = mono is None and rainbow is None
    if admissible and not within_theorem_bound(count, n, m):
        raise AssertionError(f"admissible colouring with {count} colours exceeds the bound for n={n}, m={m}")
    return AdmissibilityReport(admissible, mono, rainbow, count, theorem_bound(n, m), m)


@dataclass(frozen=True)
class SigmaQuery:
    A: tuple[int, ...]
    B: tuple[int, ...]
    k: int
    sigma: int
    lemma_bound: float
    m: int

    @property
    def holds(self) -> bool:
        return self.sigma * self.sigma <= self.k**3 * self.m


def sigma(colouring: EdgeColouring, A, B, m: int = 4) -> SigmaQuery:
    """Colours that occur on some A-B edge and on no other edge of K_n."""
    A, B = tuple(sorted(set(A))), tuple(sorted(set(B)))
    if not A or not B:
        raise ValueError("A and B must be nonempty")
    if set(A) & set(B):
        raise ValueError("A and B must be disjoint")
    rows = colouring.rows()
    n = colouring.n
    in_a, in_b = set(A), set(B)
    across, elsewhere = set(), set()
    for i in range(n):
        for j in range(i + 1, n):
            c = rows[i][j]
            if (i in in_a and j in in_b) or (i in in_b and j in in_a):
                across.add(c)
            else:
                elsewhere.add(c)
    k = max(len(A), len(B))
    return SigmaQuery(A, B, k, len(across - elsewhere), k**1.5 * math.sqrt(m), m)


def check_lemma_bound(colouring: EdgeColouring, A, B, m: int = 4, assume_admissible: bool = False) -> bool:
    """sigma(A, B) <= k^(3/2) sqrt(m) for an admissible colouring.

    Raises NotAdmissibleError when the colouring is not admissible for m.
    """
    if not assume_admissible and not is_admissible(colouring, m).admissible:
        raise NotAdmissibleError("colouring is not admissible; the inequality is not claimed")
    return sigma(colouring, A, B, m).holds


def random_disjoint_pair(n: int, rng: random.Random):
    while True:
        tags = [rng.randrange(3) for _ in range(n)]
        A = [v for v, t in enumerate(tags) if t == 1]
        B = [v for v, t in enumerate(tags) if t == 2]
        if A and B:
            return A, B


def lemma_sweep(colouring: EdgeColouring, m: int = 4, samples: int = 200, seed: int = 0) -> list[SigmaQuery]:
    """Sigma queries on seeded random disjoint pairs of an admissible colouring."""
    if not is_admissible(colouring, m).admissible:
        raise NotAdmissibleError("colouring is not admissible; the inequality is not claimed")
    rng = random.Random(seed)
    return [sigma(colouring, *random_disjoint_pair(colouring.n, rng), m) for _ in range(samples)]
