import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supergrading.weylgroupoid import (Label, LabeledDiagram, Move, ParityWord, SimpleRootInfo,
                                       all_words, apply_move, degree_function,
                                       equivalence_search, even_reflection, legal_moves,
                                       odd_reflection, potential, reflect_degree_map, replay,
                                       same_grading, simple_root_vectors, simple_roots)


def D(word, degrees):
    return LabeledDiagram.parse(word, degrees)


def test_parity_word_parse():
    w = ParityWord.parse("ede")
    assert w.labels == (Label("e", 1), Label("d", 1), Label("e", 2))
    assert (w.m, w.n, w.symbols, str(Label("d", 1))) == (2, 1, "ede", "d1")
    with pytest.raises(ValueError):
        ParityWord.parse("eax")
    with pytest.raises(ValueError):
        ParityWord((Label("e", 2),))


def test_simple_roots_examples():
    assert simple_roots(ParityWord.parse("eed")) == [SimpleRootInfo(0, False), SimpleRootInfo(1, True)]
    assert simple_roots(ParityWord.parse("e")) == []


def test_reflections_examples():
    w = ParityWord.parse("ed")
    assert odd_reflection(w, 0).symbols == "de"
    assert odd_reflection(odd_reflection(w, 0), 0) == w
    with pytest.raises(ValueError):
        even_reflection(w, 0)
    w = ParityWord.parse("ee")
    swapped = even_reflection(w, 0)
    assert swapped.labels == (Label("e", 2), Label("e", 1))
    assert even_reflection(swapped, 0) == w
    with pytest.raises(ValueError):
        odd_reflection(w, 0)
    with pytest.raises(IndexError):
        odd_reflection(w, 1)


def test_root_transformation_rule():
    """alpha_k -> -alpha_k, neighbours beta -> beta + alpha_k, others fixed."""
    for word in ("eded", "edde", "eedd", "deed"):
        base = ParityWord.parse(word)
        old = simple_root_vectors(base)
        for k in range(len(old)):
            new = simple_root_vectors(odd_reflection(base, k) if simple_roots(base)[k].isotropic
                                      else even_reflection(base, k))
            for j, beta in enumerate(new):
                if j == k:
                    expect = {lb: -c for lb, c in old[k].items()}
                elif abs(j - k) == 1:
                    expect = dict(old[j])
                    for lb, c in old[k].items():
                        expect[lb] = expect.get(lb, 0) + c
                    expect = {lb: c for lb, c in expect.items() if c}
                else:
                    expect = old[j]
                assert beta == expect


def test_reflect_degree_map_examples():
    d = D("ede", "0,2")
    r = reflect_degree_map(d, 0)
    assert r.base.symbols == "dee" and r.degrees == (0, 2)
    with pytest.raises(ValueError):
        reflect_degree_map(d, 1)
    with pytest.raises(IndexError):
        reflect_degree_map(d, 2)
    with pytest.raises(ValueError):
        D("ed", "-1")


def test_potential_and_degree_function():
    d = D("ede", "1,2")
    assert potential(d) == {Label("e", 1): 0, Label("d", 1): -1, Label("e", 2): -3}
    g = degree_function(d)
    # order e1, e2, d1
    assert g[0, 1] == 3 and g[0, 2] == 1 and g[1, 2] == -2
    assert degree_function(D("ed", "0")).degrees() == {0}


def test_same_grading_examples():
    assert same_grading(D("ed", "0"), D("de", "0"))
    assert not same_grading(D("ed", "2"), D("de", "2"))
    with pytest.raises(ValueError):
        same_grading(D("ed", "0"), D("ee", "0"))


def test_equivalence_search_examples():
    assert equivalence_search(D("ed", "0"), D("ed", "0")) == []
    assert equivalence_search(D("ed", "0"), D("de", "0")) == [Move("odd", 0)]
    assert equivalence_search(D("ed", "2"), D("de", "2")) is None
    # two even labels with degree 0 can be swapped back into canonical order
    w = equivalence_search(D("ede", "0,0"), D("eed", "0,0"))
    assert w is not None and replay(D("ede", "0,0"), w).base == ParityWord.parse("eed")
    assert equivalence_search(D("ede", "0,0"), D("dee", "0,0"), max_depth=0) is None


def test_apply_move_checks_kind():
    with pytest.raises(ValueError):
        apply_move(D("ed", "0"), Move("even", 0))
    assert apply_move(D("ee", "0"), Move("even", 0)).degrees == (0,)


def test_all_words_counts():
    assert len(all_words(2, 2)) == 6
    assert {w.symbols for w in all_words(1, 1)} == {"ed", "de"}


@st.composite
def diagrams(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(0, 3))
    if m + n < 2:
        n = 1
    word = draw(st.sampled_from(all_words(m, n)))
    degrees = draw(st.lists(st.integers(0, 2), min_size=m + n - 1, max_size=m + n - 1))
    return LabeledDiagram(word, tuple(degrees))


@settings(max_examples=200, deadline=None)
@given(diagrams(), st.data())
def test_moves_preserve_degree_function(d, data):
    moves = legal_moves(d)
    if not moves:
        return
    mv = data.draw(st.sampled_from(moves))
    d2 = apply_move(d, mv)
    assert degree_function(d2) == degree_function(d)
    assert apply_move(d2, mv) == d


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_search_iff_same_grading(m, n):
    words = all_words(m, n)
    for w1, w2 in itertools.product(words, repeat=2):
        for degs in itertools.product(range(3), repeat=m + n - 1):
            d1, d2 = LabeledDiagram(w1, degs), LabeledDiagram(w2, degs)
            witness = equivalence_search(d1, d2)
            assert (witness is not None) == same_grading(d1, d2)
            if witness is not None:
                assert replay(d1, witness).base == w2.canonical()
