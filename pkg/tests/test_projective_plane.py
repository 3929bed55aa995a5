import itertools
import math

import pytest

from mixramsey.projective_plane import (
    CyclicLabeling,
    Graph,
    build_plane,
    dump_graph,
    dump_plane,
    graph_stats,
    incident_by_determinant,
    is_planar_difference_set,
    labeling_with_offsets,
    levi_graph,
    levi_graph_for,
    offsets_to_residues,
    rotational_cycle,
    verify_rotational,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", ORDERS)
def test_plane_axioms(q):
    plane = build_plane(q)
    N = q * q + q + 1
    assert len(plane.points) == N and len(plane.lines) == N
    line_sets = [set(ln.point_ids) for ln in plane.lines]
    assert all(len(s) == q + 1 for s in line_sets)
    for a, b in itertools.combinations(range(N), 2):
        assert sum(a in s and b in s for s in line_sets) == 1
    for s, t in itertools.combinations(line_sets, 2):
        assert len(s & t) == 1
    for pt in range(N):
        assert len(plane.lines_through(pt)) == q + 1


def test_plane_sizes_examples():
    assert build_plane(2).size == 7 and len(build_plane(2).lines[0].point_ids) == 3
    assert build_plane(3).size == 13 and len(build_plane(3).lines[0].point_ids) == 4
    with pytest.raises(ValueError):
        build_plane(6)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_levi_no_four_cycle(q):
    g = levi_graph_for(q)
    for u, v in itertools.combinations(range(g.n), 2):
        assert (g.adjacency[u] & g.adjacency[v]).bit_count() <= 1


def test_levi_examples():
    g2 = levi_graph_for(2)
    assert (g2.n, len(g2.edges())) == (14, 21)
    assert all(g2.degree(v) == 3 for v in range(14))
    g3 = levi_graph_for(3)
    assert (g3.n, len(g3.edges())) == (26, 52) == (26, 4 * 13)


def _has_six_cycle(g):
    def dfs(path):
        if len(path) == 6:
            return g.has_edge(path[-1], path[0])
        return any(dfs(path + [v]) for v in g.neighbours(path[-1]) if v not in path)
    return dfs([0])


def test_graph_stats_examples():
    s2 = graph_stats(levi_graph_for(2))
    assert (s2.vertices, s2.edges, s2.regularity, s2.bipartite, s2.girth, s2.diameter) == (14, 21, 3, True, 6, 3)
    s3 = graph_stats(levi_graph_for(3))
    assert (s3.vertices, s3.edges, s3.regularity, s3.bipartite, s3.girth, s3.diameter) == (26, 52, 4, True, 6, 3)
    k2 = graph_stats(Graph.from_edges(2, [(0, 1)]))
    assert (k2.vertices, k2.edges, k2.regularity, k2.bipartite, k2.girth, k2.diameter) == (2, 1, 1, True, math.inf, 1)
    # girth 6 independently: no 4-cycle (checked above) and an explicit 6-cycle
    assert _has_six_cycle(levi_graph_for(2))


def test_graph_stats_odd_cycle():
    c5 = graph_stats(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert (c5.bipartite, c5.girth, c5.diameter, c5.regularity) == (False, 5, 2, 2)


def _rotational_brute(g, order):
    n = len(order)
    if any(not g.has_edge(order[i], order[(i + 1) % n]) for i in range(n)):
        return False
    return all(
        g.has_edge(order[i], order[j]) == g.has_edge(order[(i + 2) % n], order[(j + 2) % n])
        for i in range(n) for j in range(n) if i != j
    )


@pytest.mark.parametrize("q", ORDERS)
def test_rotational_cycle_verifies(q):
    lab = rotational_cycle(q)
    g = levi_graph_for(q)
    assert verify_rotational(g, lab)
    assert sorted(lab.order) == list(range(g.n))
    assert lab.offsets[0] == 1
    if q <= 5:
        assert _rotational_brute(g, lab.order)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_offsets_form_difference_set(q):
    N = q * q + q + 1
    lab = rotational_cycle(q)
    assert len(lab.offsets) == q + 1
    assert is_planar_difference_set(N, offsets_to_residues(lab.offsets, N))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_determinant_incidence_matches_membership(q):
    N = q * q + q + 1
    lab = rotational_cycle(q)
    g = levi_graph_for(q)
    for i in range(N):
        for j in range(N):
            assert incident_by_determinant(q, i, j) == g.has_edge(lab.order[2 * i], lab.order[2 * j + 1])


def test_default_q3_labeling():
    lab = rotational_cycle(3)
    assert lab.offsets == (1, 5, 17, 25)
    assert verify_rotational(levi_graph_for(3), lab)


def test_word_labeling_for_q3():
    lab = labeling_with_offsets(3, {1, 7, 11, 25})
    assert lab.offsets == (1, 7, 11, 25)
    assert verify_rotational(levi_graph_for(3), lab)
    with pytest.raises(ValueError):
        labeling_with_offsets(3, {1, 2, 3, 4})


def test_swapped_labeling_fails():
    lab = rotational_cycle(2)
    order = list(lab.order)
    order[3], order[4] = order[4], order[3]
    bad = CyclicLabeling(2, tuple(order), lab.offsets)
    assert not verify_rotational(levi_graph_for(2), bad)
    with pytest.raises(ValueError):
        verify_rotational(levi_graph_for(3), lab)


def test_difference_set_examples():
    assert is_planar_difference_set(7, {0, 2, 6})
    assert is_planar_difference_set(13, {0, 3, 5, 12})
    assert not is_planar_difference_set(7, {0, 1, 2})
    assert offsets_to_residues({1, 5, 13}, 7) == {0, 2, 6}
    assert offsets_to_residues({1, 7, 11, 25}, 13) == {0, 3, 5, 12}


def test_other_exponents_are_rotational():
    g = levi_graph_for(3)
    for e in (5, 7, 25):
        assert verify_rotational(g, rotational_cycle(3, e))
    with pytest.raises(ValueError):
        rotational_cycle(3, 2)


def test_dumps():
    plane = build_plane(2)
    text = dump_plane(plane)
    lines = text.splitlines()
    assert lines[0] == "plane q=2" and len(lines) == 8
    assert all(len(row.split()) == 3 for row in lines[1:])
    gtext = dump_graph(levi_graph(plane))
    glines = gtext.splitlines()
    assert glines[0] == "graph n=14" and len(glines) == 22
    edges = [tuple(map(int, row.split())) for row in glines[1:]]
    assert edges == sorted(edges) and all(u < v for u, v in edges)
    assert dump_plane(build_plane(2)) == text
