"""Backtracking search for admissible rotational colourings of K_n(q).

A rotational colouring is fixed by two words.  Symmetry of edge colours ties
word positions together: for even d, w0[d] = w0[n-d] and w1[d] = w1[n-d];
for odd d, w0[d] = w1[n-d].  The free variables are these classes of
non-star positions; stars sit at the L_q offsets of the labeling.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .admissibility import AdmissibilityReport, is_admissible
from .colouring import (
    STAR,
    SYMBOLS,
    SpecialColouring,
    WordPair,
    colour_count,
    expand_words,
    position_adjacency,
)
from .projective_plane import CyclicLabeling, labeling_with_offsets, levi_graph_for, rotational_cycle

MODES = ("first", "all", "count")
DEFAULT_NODE_BUDGET = 10**9
MAX_SEARCH_Q = 9
SPLIT_TASKS = 64


@dataclass(frozen=True)
class SearchConfig:
    q: int
    m: int = 4
    palette_size: int = 2
    mode: str = "first"
    node_budget: int | None = None
    thread_hint: int = 1
    offsets: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.m < 3:
            raise ValueError("m must be at least 3")
        if not 1 <= self.palette_size <= len(SYMBOLS):
            raise ValueError(f"palette size must lie in 1..{len(SYMBOLS)}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node budget must be non-negative")
        if self.q > MAX_SEARCH_Q:
            raise ValueError(f"searches are limited to q <= {MAX_SEARCH_Q}")


@dataclass
class Checkpoint:
    q: int
    m: int
    palette_size: int
    mode: str
    exponent: int
    nodes: int
    prefix: list[int]
    solutions: list[WordPair] = field(default_factory=list)
    count: int = 0

    def to_text(self) -> str:
        rows = [
            "checkpoint 1",
            f"q {self.q}",
            f"m {self.m}",
            f"palette {self.palette_size}",
            f"mode {self.mode}",
            f"exponent {self.exponent}",
            f"nodes {self.nodes}",
            f"count {self.count}",
            "prefix " + " ".join(map(str, self.prefix)),
        ]
        rows += [f"solution {w.w0} {w.w1}" for w in self.solutions]
        return "\n".join(rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Checkpoint":
        lines = text.splitlines()
        if not lines or lines[0] != "checkpoint 1":
            raise ValueError("not a search checkpoint")
        fields, sols = {}, []
        for line in lines[1:]:
            key, _, rest = line.partition(" ")
            if key == "solution":
                sols.append(rest.split())
            else:
                fields[key] = rest
        q = int(fields["q"])
        return cls(
            q=q,
            m=int(fields["m"]),
            palette_size=int(fields["palette"]),
            mode=fields["mode"],
            exponent=int(fields["exponent"]),
            nodes=int(fields["nodes"]),
            prefix=[int(x) for x in fields["prefix"].split()],
            solutions=[WordPair(q, a, b) for a, b in sols],
            count=int(fields.get("count", len(sols))),
        )


@dataclass
class SearchOutcome:
    solutions: list[WordPair]
    nodes_explored: int
    exhausted: bool
    count: int = 0
    checkpoint: Checkpoint | None = None


class RotationalProblem:
    """Free position classes and clique constraints for one labeling."""

    def __init__(self, labeling: CyclicLabeling, m: int, palette_size: int):
        self.labeling = labeling
        self.q = labeling.q
        self.m = m
        self.t = palette_size
        n = self.n = labeling.n
        adj = position_adjacency(labeling, levi_graph_for(labeling.q))
        self.adj = adj
        self.star = [[bool(adj[p, (p + d) % n]) for d in range(n)] for p in (0, 1)]
        self.classes = free_classes(self.star, n)
        index = {pos: c for c, members in enumerate(self.classes) for pos in members}
        self.class_of = index
        # edge_class[i][j]: class of pair (i, j), -1 for an L_q edge
        self.edge_class = [
            [-1 if i == j or adj[i, j] else index[(i % 2, (j - i) % n)] for j in range(n)]
            for i in range(n)
        ]
        self.mono, self.rainbow = self._constraints()
        nc = len(self.classes)
        self.mono_at = [[] for _ in range(nc)]
        self.rainbow_at = [[] for _ in range(nc)]
        for S in self.mono:
            self.mono_at[S[-1]].append(S[:-1])
        for S in self.rainbow:
            self.rainbow_at[S[-1]].append(S[:-1])

    def _palette_cliques(self, size: int):
        """Vertex sets of the given size containing 0 or 1 with no L_q edge.

        Shifting by 2 permutes these sets and preserves every edge class, so
        sets through 0 or 1 meet every orbit.
        """
        n, ec = self.n, self.edge_class
        out = []
        for root in (0, 1):
            others = [v for v in range(n) if v != root and ec[root][v] >= 0]
            for rest in itertools.combinations(others, size - 1):
                if all(ec[a][b] >= 0 for a, b in itertools.combinations(rest, 2)):
                    out.append(tuple(sorted((root,) + rest)))
        return out

    def _constraints(self):
        ec = self.edge_class
        mono = set()
        for S in self._palette_cliques(self.m):
            mono.add(tuple(sorted({ec[a][b] for a, b in itertools.combinations(S, 2)})))
        rainbow = set()
        if self.t >= 3:
            n = self.n
            for root in (0, 1):
                for rest in itertools.combinations([v for v in range(n) if v != root], 3):
                    S = (root,) + rest
                    cls = [ec[a][b] for a, b in itertools.combinations(S, 2) if ec[a][b] >= 0]
                    if len(cls) <= self.t and len(set(cls)) == len(cls):
                        rainbow.add(tuple(sorted(cls)))
        return sorted(mono), sorted(rainbow)

    def words(self, assignment) -> WordPair:
        n = self.n
        chars = [[STAR] * (n - 1) for _ in (0, 1)]
        for c, members in enumerate(self.classes):
            for p, d in members:
                chars[p][d - 1] = SYMBOLS[assignment[c]]
        return WordPair(self.q, "".join(chars[0]), "".join(chars[1]))

    def assignment(self, words: WordPair) -> list[int]:
        out = []
        for members in self.classes:
            syms = {words.at(p, d) for p, d in members}
            if len(syms) != 1 or STAR in syms:
                raise ValueError("words do not fit this labeling's classes")
            out.append(SYMBOLS.index(syms.pop()))
        return out

    def consistent(self, assign, depth: int) -> bool:
        """Check the constraints completed by assigning class ``depth``."""
        v = assign[depth]
        for others in self.mono_at[depth]:
            if all(assign[c] == v for c in others):
                return False
        for others in self.rainbow_at[depth]:
            vals = [assign[c] for c in others]
            vals.append(v)
            if len(set(vals)) == len(vals):
                return False
        return True


def free_classes(star, n: int) -> list[tuple[tuple[int, int], ...]]:
    """Classes of non-star word positions (parity, d) tied by edge symmetry.

    Ordered by smallest (d, parity) member.
    """
    seen = set()
    classes = []
    for d in range(1, n):
        for p in (0, 1):
            if star[p][d] or (p, d) in seen:
                continue
            mate = ((p + d) % 2, n - d)
            members = tuple(sorted({(p, d), mate}, key=lambda x: (x[1], x[0])))
            seen.update(members)
            classes.append(members)
    return classes


@lru_cache(maxsize=32)
def _problem(q: int, m: int, t: int, offsets: tuple[int, ...] | None) -> RotationalProblem:
    labeling = rotational_cycle(q) if offsets is None else labeling_with_offsets(q, offsets)
    return RotationalProblem(labeling, m, t)


def problem_for(config: SearchConfig) -> RotationalProblem:
    return _problem(config.q, config.m, config.palette_size, config.offsets)


def _explore(problem: RotationalProblem, prefix, start, budget, first_only):
    """Depth-first search below a fixed, consistent prefix.

    Assignments are visited in lexicographic order, skipping those below
    ``start``.  Returns (solutions, nodes, frontier); frontier is the partial
    assignment at which the budget ran out, or None when the subtree is done.
    """
    t = problem.t
    nc = len(problem.classes)
    assign = list(prefix) + [0] * (nc - len(prefix))
    solutions = []
    nodes = 0
    base = len(prefix)
    frontier = None
    stop = False

    def rec(depth, on_start):
        nonlocal nodes, frontier, stop
        if depth == nc:
            solutions.append(list(assign))
            if first_only:
                stop = True
            return
        lo = start[depth] if on_start and depth < len(start) else 0
        for v in range(lo, t):
            if budget is not None and nodes >= budget:
                frontier = assign[:depth] + [v]
                stop = True
                return
            nodes += 1
            assign[depth] = v
            if problem.consistent(assign, depth):
                rec(depth + 1, on_start and v == lo and depth < len(start))
            if stop:
                return

    rec(base, bool(start))
    return solutions, nodes, frontier


def _plan(problem: RotationalProblem, depth: int):
    """Consistent prefixes of the given depth, in lexicographic order, plus nodes used."""
    t = problem.t
    prefixes = []
    nodes = 0
    assign = [0] * len(problem.classes)

    def rec(d):
        nonlocal nodes
        if d == depth:
            prefixes.append(tuple(assign[:d]))
            return
        for v in range(t):
            nodes += 1
            assign[d] = v
            if problem.consistent(assign, d):
                rec(d + 1)

    rec(0)
    return prefixes, nodes


def _split_depth(problem: RotationalProblem) -> int:
    nc = len(problem.classes)
    if problem.t == 1:
        return 0
    return min(nc, max(1, int(math.log(SPLIT_TASKS) / math.log(problem.t))))


def _task(args):
    key, prefix, start, budget, first_only = args
    problem = _problem(*key)
    return _explore(problem, prefix, start, budget, first_only)


def search_rotational(config: SearchConfig, resume: Checkpoint | None = None) -> SearchOutcome:
    """Enumerate admissible rotational word pairs for ``config``.

    The tree is split at a fixed depth into lexicographically ordered
    subtrees; results are merged in that order, so outcomes do not depend
    on the number of workers.
    """
    problem = problem_for(config)
    key = (config.q, config.m, config.palette_size, config.offsets)
    first_only = config.mode == "first"
    budget = config.node_budget
    nodes = resume.nodes if resume else 0
    raw: list[list[int]] = []
    count = resume.count if resume else 0
    carried = list(resume.solutions) if resume else []
    start = list(resume.prefix) if resume else []

    depth = _split_depth(problem)
    prefixes, plan_nodes = _plan(problem, depth)
    if not resume:
        nodes += plan_nodes
    if start:
        prefixes = [p for p in prefixes if list(p) >= start[:depth]]

    def task_args(p, remaining):
        s = start if start and list(p) == start[:depth] else []
        return (key, p, s, remaining, first_only)

    frontier = None
    done_first = False
    if config.thread_hint > 1 and len(prefixes) > 1:
        remaining = None if budget is None else max(budget - nodes, 0)
        with ProcessPoolExecutor(max_workers=config.thread_hint) as pool:
            results = list(pool.map(_task, [task_args(p, remaining) for p in prefixes]))
    else:
        results = None

    for i, p in enumerate(prefixes):
        remaining = None if budget is None else max(budget - nodes, 0)
        if results is not None:
            sols, used, fr = results[i]
            if remaining is not None and (used > remaining or fr is not None):
                # rerun with the exact remaining budget so the cut point matches a serial run
                sols, used, fr = _explore(problem, p, task_args(p, remaining)[2], remaining, first_only)
        else:
            sols, used, fr = _explore(problem, p, task_args(p, remaining)[2], remaining, first_only)
        nodes += used
        raw.extend(sols)
        count += len(sols)
        if fr is not None:
            frontier = fr
            break
        if first_only and sols:
            done_first = True
            break

    exhausted = frontier is None or done_first
    found = [problem.words(a) for a in raw]
    for w in found:
        _reverify(problem, w)
    words = carried + found
    checkpoint = None
    if frontier is not None:
        checkpoint = Checkpoint(
            config.q, config.m, config.palette_size, config.mode, problem.labeling.exponent,
            nodes, frontier, [] if config.mode == "count" else words, count,
        )
    if config.mode == "count":
        return SearchOutcome([], nodes, exhausted, count, checkpoint)
    if first_only:
        words = words[:1]
        exhausted = exhausted or bool(words)
    return SearchOutcome(words, nodes, exhausted, len(words), checkpoint)


def _reverify(problem: RotationalProblem, words: WordPair) -> None:
    sc = expand_words(problem.labeling, words, palette_size=problem.t)
    report = is_admissible(sc.base, problem.m)
    assert report.admissible, f"search emitted a non-admissible colouring {words}"
    assert sc.is_special() and sc.is_rotational()
    n_lq = (problem.q + 1) * (problem.q**2 + problem.q + 1)
    assert report.colour_count == n_lq + len(words.symbols_used())


def exhaustive_rotational(config: SearchConfig) -> list[WordPair]:
    """Unpruned reference: expand and check every assignment of the free classes."""
    problem = problem_for(config)
    out = []
    for assign in itertools.product(range(problem.t), repeat=len(problem.classes)):
        w = problem.words(assign)
        sc = expand_words(problem.labeling, w, palette_size=problem.t)
        if is_admissible(sc.base, problem.m).admissible:
            out.append(w)
    return out


@dataclass(frozen=True)
class WordsReport:
    report: AdmissibilityReport
    special: bool
    rotational: bool
    colour_count: int
    reverse_pair: bool
    colouring: SpecialColouring = field(repr=False)


def verify_words(q: int, words: WordPair, m: int = 4) -> WordsReport:
    """Expand a word pair on the matching rotational labeling and check it."""
    if words.q != q:
        raise ValueError(f"words are for q={words.q}, not {q}")
    words.validate()
    labeling = labeling_with_offsets(q, words.stars(0))
    sc = expand_words(labeling, words)
    report = is_admissible(sc.base, m)
    return WordsReport(report, sc.is_special(), sc.is_rotational(), colour_count(sc.base),
                       words.is_reverse_pair(), sc)
