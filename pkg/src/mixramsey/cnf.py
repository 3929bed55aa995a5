"""DIMACS export of the two-colour rotational search, and a small model counter."""

from __future__ import annotations

from itertools import combinations

from .colouring import WordPair
from .projective_plane import CyclicLabeling, rotational_cycle
from .search import RotationalProblem


def encode_sat(q: int, m: int = 4, palette_size: int = 2, labeling: CyclicLabeling | None = None) -> str:
    """CNF over the free position classes; variable true means symbol 1.

    Every m-set of K_n(q) whose edges all avoid L_q yields two clauses
    forbidding the all-0 and all-1 colourings of its classes.
    """
    if palette_size != 2:
        raise ValueError("CNF export supports a two-symbol palette only")
    labeling = labeling or rotational_cycle(q)
    problem = RotationalProblem(labeling, m, 2)
    n, ec = problem.n, problem.edge_class

    # with two palette symbols no K_4 can be rainbow as long as each K_4
    # keeps at least three palette edges; check rather than assume
    for S in combinations(range(n), 4):
        palette_edges = sum(ec[a][b] >= 0 for a, b in combinations(S, 2))
        if palette_edges < 3:
            raise AssertionError(f"K_4 on {S} has only {palette_edges} palette edges")

    clauses = set()
    for S in combinations(range(n), m):
        cls = set()
        for a, b in combinations(S, 2):
            c = ec[a][b]
            if c < 0:
                break
            cls.add(c + 1)
        else:
            lits = sorted(cls)
            clauses.add(tuple(lits))
            clauses.add(tuple(-v for v in lits))
    clauses = sorted(clauses, key=lambda c: (len(c), [abs(x) for x in c], c))
    rows = [f"c rotational words q={q} m={m} exponent={labeling.exponent}"]
    for v, members in enumerate(problem.classes, 1):
        rows.append(f"c class {v} " + " ".join(f"w{p}:{d}" for p, d in members))
    rows.append(f"p cnf {len(problem.classes)} {len(clauses)}")
    rows += [" ".join(map(str, c)) + " 0" for c in clauses]
    return "\n".join(rows) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    nvars, clauses, cur = None, [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            _, fmt, v, _c = line.split()
            if fmt != "cnf":
                raise ValueError("not a CNF problem line")
            nvars = int(v)
            continue
        for tok in line.split():
            x = int(tok)
            if x == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(x)
    if nvars is None:
        raise ValueError("missing problem line")
    return nvars, clauses


def class_map(text: str) -> dict[int, list[tuple[int, int]]]:
    """Variable -> word positions (parity, offset) from the ``c class`` comments."""
    out = {}
    for line in text.splitlines():
        if line.startswith("c class "):
            _, _, v, *members = line.split()
            out[int(v)] = [(int(w[1]), int(d)) for w, d in (x.split(":") for x in members)]
    return out


def words_to_model(text: str, words: WordPair) -> dict[int, bool]:
    model = {}
    for v, members in class_map(text).items():
        syms = {words.at(p, d) for p, d in members}
        if len(syms) != 1 or not syms <= {"0", "1"}:
            raise ValueError(f"words disagree on class {v}")
        model[v] = syms.pop() == "1"
    return model


def satisfies(clauses, model: dict[int, bool]) -> bool:
    return all(any(model[abs(x)] == (x > 0) for x in c) for c in clauses)


def count_models(text: str, max_vars: int = 30) -> int:
    """Exact model count by backtracking; each clause is checked once its last variable is set."""
    nvars, clauses = parse_dimacs(text)
    if nvars > max_vars:
        raise ValueError(f"{nvars} variables exceed the enumeration limit {max_vars}")
    if any(len(c) == 0 for c in clauses):
        return 0
    by_last = [[] for _ in range(nvars + 1)]
    for c in clauses:
        by_last[max(abs(x) for x in c)].append(c)
    value = [False] * (nvars + 1)

    def rec(v):
        if v > nvars:
            return 1
        total = 0
        for b in (False, True):
            value[v] = b
            if all(any(value[abs(x)] == (x > 0) for x in c) for c in by_last[v]):
                total += rec(v + 1)
        return total

    return rec(1)
