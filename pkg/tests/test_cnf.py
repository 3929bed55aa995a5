import pytest

from conftest import Q2_WORDS, Q3_WORDS
from mixramsey.cnf import class_map, count_models, encode_sat, parse_dimacs, satisfies, words_to_model
from mixramsey.projective_plane import labeling_with_offsets
from mixramsey.search import SearchConfig, search_rotational


def test_header_and_comments():
    text = encode_sat(2)
    lines = text.splitlines()
    assert lines[0] == "c rotational words q=2 m=4 exponent=1"
    header = next(line for line in lines if line.startswith("p "))
    assert header == "p cnf 10 26"
    assert all(line.endswith(" 0") for line in lines if not line.startswith(("c", "p")))
    assert len(class_map(text)) == 10


def test_model_count_matches_search_q2():
    assert count_models(encode_sat(2)) == 426
    assert count_models(encode_sat(2, m=3)) == search_rotational(SearchConfig(2, m=3, mode="count")).count


def test_model_count_matches_search_q3():
    lab = labeling_with_offsets(3, Q3_WORDS.stars(0))
    text = encode_sat(3, labeling=lab)
    nvars, clauses = parse_dimacs(text)
    assert (nvars, len(clauses)) == (21, 604)
    assert count_models(text) == 968


def test_q2_words_satisfies_every_clause():
    text = encode_sat(2)
    _, clauses = parse_dimacs(text)
    assert satisfies(clauses, words_to_model(text, Q2_WORDS))


def test_q3_words_satisfy_their_cnf():
    text = encode_sat(3, labeling=labeling_with_offsets(3, Q3_WORDS.stars(0)))
    _, clauses = parse_dimacs(text)
    assert satisfies(clauses, words_to_model(text, Q3_WORDS))


def test_every_search_solution_is_a_model():
    text = encode_sat(2)
    _, clauses = parse_dimacs(text)
    for w in search_rotational(SearchConfig(2, mode="all")).solutions:
        assert satisfies(clauses, words_to_model(text, w))


def test_errors():
    with pytest.raises(ValueError):
        encode_sat(2, palette_size=3)
    with pytest.raises(ValueError):
        parse_dimacs("1 2 0\n")
    with pytest.raises(ValueError):
        count_models(encode_sat(2), max_vars=5)
