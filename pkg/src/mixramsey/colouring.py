"""Edge-colourings of complete graphs, special colourings and rotational words.

Vertices of K_n(q) are identified with cycle positions: vertex i is v_i of
the labeling attached to a :class:`SpecialColouring`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .projective_plane import CyclicLabeling, LeviGraph, levi_graph_for, rotational_cycle

SYMBOLS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
STAR = "*"


class WordError(ValueError):
    """Structurally invalid word pair.  ``offset`` names the offending position."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class RotationError(ValueError):
    """Colouring is not rotational; ``witness`` holds two positions whose words differ."""

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness


def symbol_value(ch: str) -> int:
    v = SYMBOLS.find(ch)
    if v < 0:
        raise WordError(f"invalid palette symbol {ch!r}")
    return v


@dataclass(eq=False)
class EdgeColouring:
    """Symmetric colour matrix of K_n; the diagonal holds -1."""

    matrix: np.ndarray
    palette_size: int = 0

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError("colour matrix must be square")
        if not np.array_equal(M, M.T):
            raise ValueError("colour matrix must be symmetric")
        off = M[~np.eye(len(M), dtype=bool)]
        if off.size and off.min() < 0:
            raise ValueError("colour ids must be non-negative")
        M = M.copy()
        np.fill_diagonal(M, -1)
        M.setflags(write=False)
        self.matrix = M

    @property
    def n(self) -> int:
        return len(self.matrix)

    def colour(self, i: int, j: int) -> int:
        return int(self.matrix[i, j])

    def upper(self) -> np.ndarray:
        """Colours of pairs (i, j), i < j, in row-major order."""
        return self.matrix[np.triu_indices(self.n, 1)]

    def rows(self) -> list[list[int]]:
        return self.matrix.tolist()

    def recoloured(self, pairs: dict) -> "EdgeColouring":
        M = self.matrix.copy()
        for (i, j), c in pairs.items():
            M[i, j] = M[j, i] = c
        return EdgeColouring(M, self.palette_size)

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColouring)
            and self.palette_size == other.palette_size
            and np.array_equal(self.matrix, other.matrix)
        )

    @classmethod
    def from_upper(cls, n: int, colours, palette_size: int = 0) -> "EdgeColouring":
        M = np.full((n, n), -1, dtype=np.int64)
        iu = np.triu_indices(n, 1)
        M[iu] = list(colours)
        M.T[iu] = M[iu]
        return cls(M, palette_size)

    @classmethod
    def constant(cls, n: int, colour: int = 0) -> "EdgeColouring":
        return cls(np.full((n, n), colour, dtype=np.int64))

    @classmethod
    def rainbow(cls, n: int) -> "EdgeColouring":
        return cls.from_upper(n, range(n * (n - 1) // 2))


def colour_count(colouring: EdgeColouring) -> int:
    return int(np.unique(colouring.upper()).size)


def canonicalize(colouring: EdgeColouring) -> EdgeColouring:
    """Relabel colours 0, 1, ... by first occurrence in row-major upper-triangle order."""
    seen: dict[int, int] = {}
    out = [seen.setdefault(c, len(seen)) for c in colouring.upper().tolist()]
    return EdgeColouring.from_upper(colouring.n, out)


def is_special(colouring: EdgeColouring, levi: LeviGraph, embedding) -> bool:
    """Every embedded L_q edge carries a colour used nowhere else."""
    emb = list(embedding)
    if len(set(emb)) != len(emb):
        raise ValueError("embedding is not injective")
    values, counts = np.unique(colouring.upper(), return_counts=True)
    multiplicity = dict(zip(values.tolist(), counts.tolist()))
    return all(multiplicity[colouring.colour(emb[u], emb[v])] == 1 for u, v in levi.edges())


@dataclass(frozen=True)
class WordPair:
    q: int
    w0: str
    w1: str

    @property
    def n(self) -> int:
        return 2 * (self.q * self.q + self.q + 1)

    def word(self, parity: int) -> str:
        return self.w1 if parity % 2 else self.w0

    def at(self, parity: int, d: int) -> str:
        """Symbol at offset d (1 <= d < n) of the word for the given parity."""
        return self.word(parity)[d - 1]

    def stars(self, parity: int) -> tuple[int, ...]:
        return tuple(d for d, ch in enumerate(self.word(parity), 1) if ch == STAR)

    def symbols_used(self) -> set[int]:
        return {symbol_value(ch) for ch in self.w0 + self.w1 if ch != STAR}

    def is_reverse_pair(self) -> bool:
        return self.w1 == self.w0[::-1]

    def validate(self) -> None:
        """Check length, star consistency and symmetric-position consistency."""
        n = self.n
        for name, w in (("w0", self.w0), ("w1", self.w1)):
            if len(w) != n - 1:
                raise WordError(f"{name} has length {len(w)}, expected {n - 1}")
            for ch in w:
                if ch != STAR:
                    symbol_value(ch)
        if self.w0[0] != STAR or self.w1[0] != STAR:
            raise WordError("offset 1 must be a star in both words", 1)
        for parity in (0, 1):
            for d in range(1, n):
                a = self.at(parity, d)
                b = self.at(parity + d, n - d)
                if (a == STAR) != (b == STAR):
                    raise WordError(f"star mismatch between offset {d} and its mirror", d)
                if a != b:
                    raise WordError(f"symmetric positions disagree at offset {d}", d)


def format_words(words: WordPair) -> str:
    return f"q {words.q}\nw0 {words.w0}\nw1 {words.w1}\n"


def parse_words(text: str) -> WordPair:
    fields = {}
    for line in text.splitlines():
        if line.strip():
            key, _, value = line.partition(" ")
            fields[key] = value
    try:
        return WordPair(int(fields["q"]), fields["w0"], fields["w1"])
    except (KeyError, ValueError) as exc:
        raise WordError(f"malformed word file: {exc}") from None


@dataclass(eq=False)
class SpecialColouring:
    base: EdgeColouring
    labeling: CyclicLabeling
    levi: LeviGraph = field(repr=False)

    @property
    def embedding(self) -> list[int]:
        """Levi vertex -> K_n vertex."""
        emb = [0] * len(self.labeling.order)
        for i, v in enumerate(self.labeling.order):
            emb[v] = i
        return emb

    def is_special(self) -> bool:
        return is_special(self.base, self.levi, self.embedding)

    def is_rotational(self) -> bool:
        try:
            extract_words(self)
        except (RotationError, WordError):
            return False
        return True


def position_adjacency(labeling: CyclicLabeling, levi: LeviGraph) -> np.ndarray:
    """A[i, j] is True iff v_i v_j is an L_q edge."""
    order = list(labeling.order)
    return levi.adjacency_matrix()[np.ix_(order, order)]


def expand_words(labeling: CyclicLabeling, words: WordPair, levi: LeviGraph | None = None,
                 palette_size: int | None = None) -> SpecialColouring:
    """Rotate the two words around the cycle to colour all of K_n(q).

    Star positions get fresh colours palette_size, palette_size + 1, ... in
    lexicographic order of the vertex pairs.  ``palette_size`` defaults to one
    more than the largest symbol used.
    """
    if levi is None:
        levi = levi_graph_for(labeling.q)
    n = labeling.n
    if words.n != n:
        raise WordError(f"words are for n={words.n}, labeling has n={n}")
    words.validate()
    if words.stars(0) != tuple(labeling.offsets):
        raise WordError(f"w0 stars {words.stars(0)} differ from labeling offsets {labeling.offsets}")
    adj = position_adjacency(labeling, levi)
    odd = tuple(d for d in range(1, n) if adj[1, (1 + d) % n])
    if words.stars(1) != odd:
        raise WordError(f"w1 stars {words.stars(1)} differ from labeling offsets {odd}")
    used = words.symbols_used()
    t = palette_size if palette_size is not None else (max(used) + 1 if used else 0)
    if used and max(used) >= t:
        raise WordError(f"symbol {max(used)} outside palette of size {t}")

    M = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        w = words.word(i % 2)
        for d in range(1, n):
            ch = w[d - 1]
            if ch != STAR:
                M[i, (i + d) % n] = symbol_value(ch)
    fresh = itertools.count(t)
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                M[i, j] = M[j, i] = next(fresh)
    return SpecialColouring(EdgeColouring(M, t), labeling, levi)


def _word_of(sc: SpecialColouring, adj: np.ndarray, i: int) -> str:
    n, t = sc.base.n, sc.base.palette_size
    out = []
    for d in range(1, n):
        j = (i + d) % n
        if adj[i, j]:
            out.append(STAR)
            continue
        c = sc.base.colour(i, j)
        if (t and c >= t) or c >= len(SYMBOLS):
            raise WordError(f"edge ({i}, {j}) has non-palette colour {c}", d)
        out.append(SYMBOLS[c])
    return "".join(out)


def extract_words(sc: SpecialColouring) -> WordPair:
    adj = position_adjacency(sc.labeling, sc.levi)
    n = sc.base.n
    w0, w1 = _word_of(sc, adj, 0), _word_of(sc, adj, 1)
    for i in range(2, n):
        if _word_of(sc, adj, i) != (w1 if i % 2 else w0):
            raise RotationError(f"word of v_{i} differs from word of v_{i % 2}", (i % 2, i))
    return WordPair(sc.labeling.q, w0, w1)


def format_mrc(colouring: EdgeColouring) -> str:
    n = colouring.n
    rows = ["mrc 1", f"n {n}", f"palette {colouring.palette_size}"]
    M = colouring.matrix
    for i in range(n - 1):
        rows.append(" ".join(str(int(c)) for c in M[i, i + 1:]))
    return "\n".join(rows) + "\n"


def parse_mrc(text: str) -> EdgeColouring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    try:
        if lines[0] != "mrc 1":
            raise ValueError("missing 'mrc 1' header")
        key, n = lines[1].split()
        if key != "n":
            raise ValueError("expected 'n <n>'")
        n = int(n)
        key, t = lines[2].split()
        if key != "palette":
            raise ValueError("expected 'palette <t>'")
        body = lines[3:]
        if len(body) != max(n - 1, 0):
            raise ValueError(f"expected {n - 1} colour rows, found {len(body)}")
        colours = []
        for i, row in enumerate(body):
            vals = [int(x) for x in row.split(" ")] if row else []
            if len(vals) != n - 1 - i:
                raise ValueError(f"row {i} has {len(vals)} entries, expected {n - 1 - i}")
            colours.extend(vals)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"malformed colouring file: {exc}") from None
    return EdgeColouring.from_upper(n, colours, int(t))


def special_from_colouring(colouring: EdgeColouring, q: int) -> SpecialColouring:
    """Attach the rotational labeling whose stars match the colouring.

    Colours at or above the palette size mark L_q edges; the star set of
    vertex 0 selects the labeling.
    """
    t = colouring.palette_size
    offsets = [d for d in range(1, colouring.n) if colouring.colour(0, d) >= t]
    from .projective_plane import labeling_with_offsets

    labeling = labeling_with_offsets(q, offsets)
    return SpecialColouring(colouring, labeling, levi_graph_for(q))


# K_14 colourings from two 7-cycles on the Fano plane.


def _hamilton_cycles(vertices):
    first, rest = vertices[0], vertices[1:]
    for perm in itertools.permutations(rest):
        if perm[0] < perm[-1]:
            cyc = (first,) + perm
            yield tuple(sorted(tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))))


def edges_at_distance_one(adj: np.ndarray, e, f) -> bool:
    """Some endpoint of e is adjacent in L_2 to some endpoint of f."""
    return any(adj[a, b] for a in e for b in f)


def _shift(cycle, n: int = 14):
    return tuple(sorted(tuple(sorted(((a + 2) % n, (b + 2) % n))) for a, b in cycle))


def fano_cycle_pairs(labeling: CyclicLabeling | None = None, rotational_only: bool = True):
    """All pairs (C, C') of 7-cycles on points and on lines, in lexicographic order.

    Every edge of C must be at distance 1 from every edge of C'.  Cycles are
    sorted edge lists over K_14 positions.  With ``rotational_only`` both
    cycles must be invariant under the shift i -> i + 2.
    """
    labeling = labeling or rotational_cycle(2)
    adj = position_adjacency(labeling, levi_graph_for(2))
    point_cycles = sorted(_hamilton_cycles(tuple(range(0, 14, 2))))
    line_cycles = sorted(_hamilton_cycles(tuple(range(1, 14, 2))))
    if rotational_only:
        point_cycles = [c for c in point_cycles if _shift(c) == c]
        line_cycles = [c for c in line_cycles if _shift(c) == c]
    line_edges = sorted({e for c in line_cycles for e in c})
    for C in point_cycles:
        ok = {f for f in line_edges if all(edges_at_distance_one(adj, e, f) for e in C)}
        for D in line_cycles:
            if all(f in ok for f in D):
                yield C, D


def fano_cycles(labeling: CyclicLabeling | None = None):
    """Least shift-invariant pair of 7-cycles at mutual distance 1."""
    return next(fano_cycle_pairs(labeling))


def fano_colouring(cycles=None) -> SpecialColouring:
    """Special colouring of K_14 with 23 colours built from two 7-cycles.

    Colour 0 goes on the cycle edges and on non-incident point-line pairs,
    colour 1 on the remaining point-point and line-line pairs.
    """
    labeling = rotational_cycle(2)
    levi = levi_graph_for(2)
    C, D = cycles if cycles is not None else fano_cycles(labeling)
    adj = position_adjacency(labeling, levi)
    cycle_edges = set(C) | set(D)
    n = 14
    M = np.full((n, n), -1, dtype=np.int64)
    fresh = itertools.count(2)
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                c = next(fresh)
            elif (i, j) in cycle_edges or (i - j) % 2:
                c = 0
            else:
                c = 1
            M[i, j] = M[j, i] = c
    return SpecialColouring(EdgeColouring(M, 2), labeling, levi)
