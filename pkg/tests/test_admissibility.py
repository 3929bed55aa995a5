import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import Q2_WORDS
from mixramsey.admissibility import (
    AdmissibilityReport,
    NotAdmissibleError,
    base_case_check,
    check_lemma_bound,
    find_mono_clique,
    find_rainbow_k4,
    is_admissible,
    lemma_sweep,
    sigma,
    theorem_bound,
    within_theorem_bound,
)
from mixramsey.colouring import EdgeColouring, expand_words, fano_colouring
from mixramsey.projective_plane import rotational_cycle


def k14():
    return expand_words(rotational_cycle(2), Q2_WORDS).base


def brute_mono(c, m):
    for S in combinations(range(c.n), m):
        if len({c.colour(a, b) for a, b in combinations(S, 2)}) == 1:
            return S
    return None


def brute_rainbow(c):
    for S in combinations(range(c.n), 4):
        if len({c.colour(a, b) for a, b in combinations(S, 2)}) == 6:
            return S
    return None


colourings = st.integers(4, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, 5)).flatmap(
        lambda nk: st.lists(st.integers(0, nk[1] - 1), min_size=nk[0] * (nk[0] - 1) // 2,
                            max_size=nk[0] * (nk[0] - 1) // 2).map(lambda cs: EdgeColouring.from_upper(nk[0], cs))
    )
)


@settings(max_examples=300, deadline=None)
@given(colourings, st.integers(3, 5))
def test_witness_search_matches_brute_force(c, m):
    assert find_mono_clique(c, m) == brute_mono(c, m)
    assert find_rainbow_k4(c) == brute_rainbow(c)


@settings(max_examples=200, deadline=None)
@given(colourings, st.integers(3, 5))
def test_admissibility_monotone_in_m(c, m):
    if is_admissible(c, m).admissible:
        for m2 in range(m, 8):
            assert is_admissible(c, m2).admissible


def test_witness_examples():
    mono = EdgeColouring.constant(4, 7)
    assert find_mono_clique(mono, 4) == (0, 1, 2, 3)
    assert find_mono_clique(k14(), 4) is None
    assert find_mono_clique(EdgeColouring.rainbow(4), 3) is None
    assert find_rainbow_k4(EdgeColouring.rainbow(4)) == (0, 1, 2, 3)
    assert find_rainbow_k4(k14()) is None
    with pytest.raises(ValueError):
        find_mono_clique(mono, 2)
    with pytest.raises(ValueError):
        find_rainbow_k4(EdgeColouring.rainbow(3))


def test_witnesses_are_sound():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(6, 12)
        c = EdgeColouring.from_upper(n, [rng.randrange(3) for _ in range(n * (n - 1) // 2)])
        w = find_mono_clique(c, 3)
        if w:
            assert len({c.colour(a, b) for a, b in combinations(w, 2)}) == 1
        c6 = EdgeColouring.from_upper(n, [rng.randrange(12) for _ in range(n * (n - 1) // 2)])
        r = find_rainbow_k4(c6)
        if r:
            assert len({c6.colour(a, b) for a, b in combinations(r, 2)}) == 6


def test_is_admissible_examples():
    rep = is_admissible(k14(), 4)
    assert rep.admissible and rep.colour_count == 23
    bad = is_admissible(EdgeColouring.constant(5, 0), 4)
    assert not bad.admissible and bad.mono_witness == (0, 1, 2, 3)
    # golden: colour 0 of this colouring contains a triangle
    rep3 = is_admissible(k14(), 3)
    assert not rep3.admissible and rep3.mono_witness == (0, 2, 9) and rep3.rainbow_witness is None


def test_small_n():
    rep = is_admissible(EdgeColouring.rainbow(3), 3)
    assert rep.admissible and rep.colour_count == 3
    assert is_admissible(EdgeColouring.constant(1), 3).admissible


def test_report_text_round_trip():
    rep = is_admissible(EdgeColouring.constant(5, 0), 4)
    text = rep.to_text()
    assert text.splitlines()[:3] == ["admissible false", "colours 1", "bound 31.622777"]
    assert "mono 0 1 2 3" in text
    back = AdmissibilityReport.from_text(text, 4)
    assert back.mono_witness == rep.mono_witness and back.admissible is False


def test_sigma_examples():
    c = k14()
    q = sigma(c, range(0, 14, 2), range(1, 14, 2), m=4)
    assert q.sigma == 21 and q.k == 7
    assert q.lemma_bound == pytest.approx(37.0405, abs=1e-3)
    assert check_lemma_bound(c, range(0, 14, 2), range(1, 14, 2), 4)
    # two-colour K_5: every colour also appears inside A or B
    two = EdgeColouring.from_upper(5, [0, 1, 0, 1, 0, 1, 0, 1, 0, 1])
    assert sigma(two, [0, 1], [2, 3, 4]).sigma == 0
    with pytest.raises(ValueError):
        sigma(c, [0, 1], [1, 2])


def test_sigma_by_direct_count():
    c = k14()
    A, B = [0, 3, 5], [2, 7, 8, 12]
    across = [c.colour(a, b) for a in A for b in B]
    other = [c.colour(i, j) for i, j in combinations(range(14), 2)
             if not ((i in A and j in B) or (i in B and j in A))]
    assert sigma(c, A, B).sigma == len(set(across) - set(other))


def test_lemma_sweep_q2_words():
    queries = lemma_sweep(k14(), 4, samples=200, seed=1)
    assert len(queries) == 200
    assert all(q.holds for q in queries)
    assert all(q.sigma <= q.lemma_bound for q in queries)


def test_cut_bound_precondition():
    with pytest.raises(NotAdmissibleError):
        check_lemma_bound(EdgeColouring.constant(6, 0), [0, 1], [2, 3], 4)


def test_theorem_bound_examples():
    assert theorem_bound(14, 4) == pytest.approx(148.16, abs=0.01)
    assert theorem_bound(21, 3) == pytest.approx(235.73, abs=0.01)
    assert theorem_bound(21, 3) > math.comb(21, 2) == 210
    assert theorem_bound(1, 3) == pytest.approx(math.sqrt(6))
    with pytest.raises(ValueError):
        theorem_bound(5, 2)
    assert within_theorem_bound(148, 14, 4) and not within_theorem_bound(149, 14, 4)


@pytest.mark.parametrize("m", [3, 4, 5, 100])
def test_base_case(m):
    assert base_case_check(m)
    assert all(math.comb(n, 2) < n**1.5 * math.sqrt(2 * m) for n in range(1, 22))


def test_base_case_boundary():
    # for m = 3 the pair count first overtakes the bound at n = 26
    first = next(n for n in range(1, 100) if math.comb(n, 2) >= n**1.5 * math.sqrt(6))
    assert first == 26


def test_fano_colouring_admissible():
    rep = is_admissible(fano_colouring().base, 4)
    assert rep.admissible and rep.colour_count == 23
