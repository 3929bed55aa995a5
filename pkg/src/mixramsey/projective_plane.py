"""PG(2, q), its Levi graph L_q, and rotational Hamilton cycles of L_q."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .finite_field import FieldTable, PrimePower, cached_field

PLANE_ORDER_CAP = 32


def normalize(field_: FieldTable, coords) -> tuple[int, ...]:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    for c in coords:
        if c:
            inv = field_.inv(c)
            return tuple(field_.mul(inv, x) for x in coords)
    raise ValueError("zero vector has no projective class")


def cross(field_: FieldTable, a, b) -> tuple[int, int, int]:
    mul, sub = field_.mul, field_.sub
    return (
        sub(mul(a[1], b[2]), mul(a[2], b[1])),
        sub(mul(a[2], b[0]), mul(a[0], b[2])),
        sub(mul(a[0], b[1]), mul(a[1], b[0])),
    )


def dot(field_: FieldTable, a, b) -> int:
    mul, add = field_.mul, field_.add
    return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]))


def det3(field_: FieldTable, a, b, c) -> int:
    return dot(field_, a, cross(field_, b, c))


@dataclass(frozen=True)
class ProjectiveLine:
    point_ids: tuple[int, ...]
    dual_coords: tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class IncidencePlane:
    q: int
    gf: FieldTable = field(repr=False)
    points: tuple[tuple[int, int, int], ...] = field(repr=False)
    lines: tuple[ProjectiveLine, ...] = field(repr=False)
    point_index: dict = field(repr=False, default_factory=dict)
    line_index: dict = field(repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        """Number of points (equal to the number of lines)."""
        return len(self.points)

    def lines_through(self, point: int) -> list[int]:
        return [j for j, ln in enumerate(self.lines) if point in ln.point_ids]


@lru_cache(maxsize=None)
def build_plane(q: int, cap: int = PLANE_ORDER_CAP) -> IncidencePlane:
    """Coordinatize PG(2, q) over GF(q).

    Points and lines both range over the normalized nonzero triples in
    lexicographic order; a point lies on a line when their dot product is 0.
    """
    pp = PrimePower.from_int(q)
    if q > cap:
        raise ValueError(f"plane order {q} exceeds cap {cap}")
    F = cached_field(pp.p, pp.k)
    triples = [
        t for t in itertools.product(range(q), repeat=3)
        if any(t) and t[next(i for i, c in enumerate(t) if c)] == 1
    ]
    point_index = {t: i for i, t in enumerate(triples)}
    lines = []
    for dual in triples:
        ids = tuple(i for i, t in enumerate(triples) if dot(F, t, dual) == 0)
        lines.append(ProjectiveLine(ids, dual))
    return IncidencePlane(q, F, tuple(triples), tuple(lines), point_index, dict(point_index))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with bitset adjacency."""

    adjacency: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbours(self, u: int) -> list[int]:
        a = self.adjacency[u]
        return [v for v in range(self.n) if a >> v & 1]

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbours(u) if u < v]

    def adjacency_matrix(self) -> np.ndarray:
        n = self.n
        A = np.zeros((n, n), dtype=bool)
        for u in range(n):
            for v in self.neighbours(u):
                A[u, v] = True
        return A

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj))


@dataclass(frozen=True, eq=False)
class LeviGraph(Graph):
    """Incidence graph: vertices 0..N-1 are points, N..2N-1 are lines."""

    q: int = 0
    side: tuple[str, ...] = ()

    @property
    def half(self) -> int:
        return self.n // 2


@lru_cache(maxsize=None)
def levi_graph(plane: IncidencePlane) -> LeviGraph:
    N = plane.size
    adj = [0] * (2 * N)
    for j, ln in enumerate(plane.lines):
        for i in ln.point_ids:
            adj[i] |= 1 << (N + j)
            adj[N + j] |= 1 << i
    return LeviGraph(tuple(adj), plane.q, ("point",) * N + ("line",) * N)


def levi_graph_for(q: int) -> LeviGraph:
    return levi_graph(build_plane(q))


@dataclass(frozen=True)
class CyclicLabeling:
    """Vertex order v_0..v_{n-1} of a Levi graph.

    ``offsets`` holds the residues d with v_0 adjacent to v_d.  ``exponent``
    records which power of the cubic-extension generator produced it.
    """

    q: int
    order: tuple[int, ...]
    offsets: tuple[int, ...]
    exponent: int = 1

    @property
    def n(self) -> int:
        return len(self.order)

    def odd_offsets(self) -> tuple[int, ...]:
        return tuple(sorted((self.n - d) % self.n for d in self.offsets))

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


class _CubicExtension:
    """GF(q^3) as a 3-dimensional vector space over GF(q), basis 1, a, a^2."""

    def __init__(self, q: int):
        pp = PrimePower.from_int(q)
        self.F = cached_field(pp.p, pp.k)
        self.V = cached_field(pp.p, 3 * pp.k)
        F, V = self.F, self.V
        self.q = q
        self.N = q * q + q + 1
        # embed GF(q) as the subfield of GF(q^3) generated by a^N: send F's
        # generator to a root of F's (primitive) modulus inside that subfield
        gamma_log = self.N
        e = next(
            e for e in range(1, q)
            if math.gcd(e, q - 1) == 1 and self._eval_prime_poly(F.modulus, V.power(gamma_log * e)) == 0
        ) if q > 2 else 1
        embed = [0] * q
        for t in range(q - 1):
            embed[F.exp[t]] = V.power(gamma_log * e * t)
        self.embed = embed
        a1 = V.alpha
        a2 = V.mul(a1, a1)
        coords = {}
        for c in itertools.product(range(q), repeat=3):
            z = V.add(V.add(embed[c[0]], V.mul(embed[c[1]], a1)), V.mul(embed[c[2]], a2))
            coords[z] = c
        assert len(coords) == q**3
        self.coords = coords

    def _eval_prime_poly(self, poly, x):
        # coefficients lie in GF(p), whose codes coincide in both fields
        V = self.V
        acc = 0
        for c in reversed(poly):
            acc = V.add(V.mul(acc, x), c)
        return acc

    def power_coords(self, i: int) -> tuple[int, int, int]:
        return self.coords[self.V.power(i)]


@lru_cache(maxsize=None)
def cubic_extension(q: int) -> _CubicExtension:
    return _CubicExtension(q)


def rotational_cycle(q: int, exponent: int = 1) -> CyclicLabeling:
    """Rotational Hamilton cycle (p_0, l_0, p_1, l_1, ...) of L_q.

    p_i is the projective class of b^i and l_i the line through b^i and
    b^(i+1), where b = a^exponent for the generator a of GF(q^3).  The
    exponent must be coprime to q^3 - 1.
    """
    plane = build_plane(q)
    ext = cubic_extension(q)
    F, N = ext.F, ext.N
    if math.gcd(exponent, q**3 - 1) != 1:
        raise ValueError(f"exponent {exponent} is not coprime to {q**3 - 1}")
    order = []
    for i in range(N):
        u = ext.power_coords(exponent * i)
        w = ext.power_coords(exponent * (i + 1))
        order.append(plane.point_index[normalize(F, u)])
        order.append(N + plane.line_index[normalize(F, cross(F, u, w))])
    graph = levi_graph(plane)
    offsets = tuple(d for d in range(1, 2 * N) if graph.has_edge(order[0], order[d]))
    return CyclicLabeling(q, tuple(order), offsets, exponent)


def incident_by_determinant(q: int, i: int, j: int, exponent: int = 1) -> bool:
    """p_i lies on l_j iff b^i, b^j, b^(j+1) are linearly dependent over GF(q)."""
    ext = cubic_extension(q)
    e = exponent
    return det3(ext.F, ext.power_coords(e * i), ext.power_coords(e * j), ext.power_coords(e * (j + 1))) == 0


def labeling_with_offsets(q: int, offsets) -> CyclicLabeling:
    """Smallest-exponent rotational labeling of L_q whose even offsets match."""
    want = tuple(sorted(offsets))
    for e in range(1, q**3 - 1):
        if math.gcd(e, q**3 - 1) != 1:
            continue
        lab = rotational_cycle(q, e)
        if lab.offsets == want:
            return lab
    raise ValueError(f"no rotational labeling of L_{q} has offsets {want}")


def verify_rotational(graph: Graph, labeling: CyclicLabeling) -> bool:
    n = graph.n
    order = labeling.order
    if len(order) != n:
        raise ValueError(f"labeling has {len(order)} vertices, graph has {n}")
    if sorted(order) != list(range(n)):
        return False
    A = graph.adjacency_matrix()[np.ix_(order, order)]
    if not all(A[i, (i + 1) % n] for i in range(n)):
        return False
    if isinstance(graph, LeviGraph) and graph.side:
        sides = [graph.side[v] for v in order]
        if len(set(sides[0::2])) != 1 or len(set(sides[1::2])) != 1:
            return False
    return bool(np.array_equal(A, np.roll(A, (2, 2), axis=(0, 1))))


def offsets_to_residues(offsets, modulus: int) -> set[int]:
    """Map odd offsets d to (d - 1) / 2 mod modulus."""
    return {((d - 1) // 2) % modulus for d in offsets}


def is_planar_difference_set(modulus: int, residues) -> bool:
    residues = set(residues)
    if any(not 0 <= r < modulus for r in residues):
        raise ValueError("residues must lie in [0, modulus)")
    seen = [0] * modulus
    for a in residues:
        for b in residues:
            if a != b:
                seen[(a - b) % modulus] += 1
    return all(c == 1 for c in seen[1:])


def _bfs(graph: Graph, src: int) -> list[float]:
    dist = [math.inf] * graph.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in graph.neighbours(u):
            if dist[v] == math.inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def girth(graph: Graph) -> float:
    best = math.inf
    for s in range(graph.n):
        dist = [math.inf] * graph.n
        parent = [-1] * graph.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in graph.neighbours(u):
                if dist[v] == math.inf:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_bipartite(graph: Graph) -> bool:
    colour = [-1] * graph.n
    for s in range(graph.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in graph.neighbours(u):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    edges: int
    regularity: int | None
    bipartite: bool
    girth: float
    diameter: float


def graph_stats(graph: Graph) -> GraphStats:
    degrees = [graph.degree(u) for u in range(graph.n)]
    diameter = max(max(_bfs(graph, s)) for s in range(graph.n)) if graph.n else 0
    return GraphStats(
        vertices=graph.n,
        edges=sum(degrees) // 2,
        regularity=degrees[0] if len(set(degrees)) == 1 else None,
        bipartite=is_bipartite(graph),
        girth=girth(graph),
        diameter=diameter,
    )


def dump_plane(plane: IncidencePlane) -> str:
    rows = [f"plane q={plane.q}"]
    rows += [" ".join(map(str, sorted(ln.point_ids))) for ln in plane.lines]
    return "\n".join(rows) + "\n"


def dump_graph(graph: Graph) -> str:
    rows = [f"graph n={graph.n}"]
    rows += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(rows) + "\n"


def dump_labeling(labeling: CyclicLabeling) -> str:
    return (
        f"cycle q={labeling.q} exponent={labeling.exponent}\n"
        f"order {' '.join(map(str, labeling.order))}\n"
        f"offsets {' '.join(map(str, labeling.offsets))}\n"
    )
