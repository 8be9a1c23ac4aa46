from collections import deque
from itertools import combinations
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from gcwords.word_poset import (
    WordPoset,
    braid_triples,
    canonical_form,
    count_linear_extensions,
    enumerate_commutation_classes,
    ideal_from_counts,
    ideals,
    is_ideal,
    is_isomorphic,
    lexmin_word,
    linear_extensions,
    poset_of_word,
    render_dot,
    top_elements,
    words_of_class,
)
from gcwords.words import (
    DomainError,
    apply_2move,
    legal_2moves,
    parse_word,
    standard_word,
)

from test_words import random_braid_walk

STANDARD3 = parse_word("1,2,1,3,2,1")
OTHER3 = parse_word("1,3,2,1,3,2")


def test_poset_of_standard3():
    P = poset_of_word(STANDARD3)
    assert P.covers == ((1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6))
    assert P.columns == (1, 2, 1, 3, 2, 1)


def test_poset_of_other3():
    # the six Hasse edges of the second worked example
    P = poset_of_word(OTHER3)
    assert P.covers == ((1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6))


def test_poset_singleton():
    P = poset_of_word(parse_word("1"))
    assert P.size == 1 and P.covers == ()


def test_poset_rejects_non_reduced():
    with pytest.raises(DomainError, match="not reduced"):
        poset_of_word(parse_word("1,1"))


def test_invalid_covers_rejected():
    with pytest.raises(DomainError):
        WordPoset((1, 3), ((1, 2),))  # non-adjacent columns
    with pytest.raises(DomainError):
        WordPoset((1, 2), ((1, 3),))  # label out of range


def test_cycle_rejected():
    P = WordPoset((1, 2, 1), ((1, 2), (2, 3), (3, 2)))
    with pytest.raises(DomainError, match="cycle"):
        P.less(1, 2)


def test_canonical_form_identifies_classes():
    a = canonical_form(poset_of_word(STANDARD3))
    b = canonical_form(poset_of_word(parse_word("1,2,3,1,2,1")))
    c = canonical_form(poset_of_word(OTHER3))
    assert a == b
    assert a != c
    assert canonical_form(a) == a  # idempotent
    assert is_isomorphic(poset_of_word(STANDARD3), poset_of_word(parse_word("1,2,3,1,2,1")))
    assert not is_isomorphic(poset_of_word(STANDARD3), poset_of_word(OTHER3))


def test_two_move_closure_matches_canonical(words_of_rank):
    # words are 2-move connected iff their posets are isomorphic
    for n in (2, 3):
        for start in words_of_rank(n):
            seen = {start}
            queue = deque([start])
            while queue:
                w = queue.popleft()
                for p in legal_2moves(w):
                    v = apply_2move(w, p)
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
            key = canonical_form(poset_of_word(start))
            same = {
                w
                for w in words_of_rank(n)
                if canonical_form(poset_of_word(w)) == key
            }
            assert seen == same


def test_linear_extension_counts():
    assert count_linear_extensions(poset_of_word(STANDARD3)) == 2
    assert count_linear_extensions(poset_of_word(OTHER3)) == 4
    chain = WordPoset((1, 2, 3, 4, 5), tuple((i, i + 1) for i in range(1, 5)))
    assert count_linear_extensions(chain) == 1


def test_linear_extensions_stream_matches_count(classes_of_rank):
    for n in (2, 3, 4):
        for P in classes_of_rank(n):
            exts = list(linear_extensions(P))
            assert len(exts) == count_linear_extensions(P)
            assert len(set(exts)) == len(exts)


def test_extension_count_sums_to_word_count(classes_of_rank):
    from gcwords.words import count_reduced_words, longest_element

    for n in (3, 4, 5):
        total = sum(count_linear_extensions(P) for P in classes_of_rank(n))
        assert total == count_reduced_words(longest_element(n + 1))


def test_words_of_class_golden():
    got = sorted(str(w) for w in words_of_class(poset_of_word(STANDARD3)))
    assert got == ["1,2,1,3,2,1", "1,2,3,1,2,1"]


def test_words_of_class_properties():
    P = poset_of_word(OTHER3)
    ws = list(words_of_class(P))
    assert len(ws) == count_linear_extensions(P)
    for w in ws:
        assert is_isomorphic(poset_of_word(w), P)


def test_words_of_class_is_two_move_closure(words_of_rank):
    for n in (2, 3):
        for start in words_of_rank(n):
            P = poset_of_word(start)
            closure = {start}
            queue = deque([start])
            while queue:
                w = queue.popleft()
                for p in legal_2moves(w):
                    v = apply_2move(w, p)
                    if v not in closure:
                        closure.add(v)
                        queue.append(v)
            assert set(words_of_class(P)) == closure


def test_lexmin_word():
    assert str(lexmin_word(poset_of_word(parse_word("2,1,2")))) == "2,1,2"
    assert str(lexmin_word(poset_of_word(STANDARD3))) == "1,2,1,3,2,1"
    # least under 2-moves, for every class at small rank
    for n in (2, 3):
        for P in enumerate_commutation_classes(n):
            assert lexmin_word(P) == min(words_of_class(P), key=lambda w: w.letters)


def test_ideal_from_counts():
    P = poset_of_word(STANDARD3)
    assert ideal_from_counts(P, (2, 1, 0)) == frozenset({1, 2, 3})
    assert ideal_from_counts(P, (0, 0, 0)) == frozenset()
    with pytest.raises(DomainError, match="cover 2<4"):
        ideal_from_counts(P, (1, 0, 1))


def test_ideals_unique_per_counts(classes_of_rank):
    # per-column sizes determine an ideal; cross-check against the
    # brute-force enumeration of downward-closed subsets
    for n in (2, 3, 4):
        for P in classes_of_rank(n):
            by_dp = set(ideals(P))
            elements = list(range(1, P.size + 1))
            brute = {
                frozenset(sub)
                for r in range(P.size + 1)
                for sub in combinations(elements, r)
                if is_ideal(P, frozenset(sub))
            }
            assert by_dp == brute
            counts_seen = set()
            for ideal in by_dp:
                counts = tuple(
                    sum(1 for k in ideal if P.columns[k - 1] == col)
                    for col in sorted(P.column_chains)
                )
                assert counts not in counts_seen
                counts_seen.add(counts)
            assert len(by_dp) <= prod(
                len(chain) + 1 for chain in P.column_chains.values()
            )


def test_top_elements():
    assert top_elements(poset_of_word(STANDARD3)) == (6, 5, 4)
    assert top_elements(poset_of_word(parse_word("1"))) == (1,)
    assert top_elements(poset_of_word(parse_word("2,1,2"))) == (2, 3)


def test_column_chains_are_chains(classes_of_rank):
    for n in (2, 3, 4):
        for P in classes_of_rank(n):
            for chain in P.column_chains.values():
                for a, b in zip(chain, chain[1:]):
                    assert P.less(a, b)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 62)])
def test_class_counts(n, count, classes_of_rank):
    assert len(classes_of_rank(n)) == count


def test_classes_are_canonical_and_distinct(classes_of_rank):
    for n in (2, 3, 4):
        reps = classes_of_rank(n)
        assert len(set(reps)) == len(reps)
        for P in reps:
            assert canonical_form(P) == P


def test_braid_triples_match_word_level_3moves(words_of_rank):
    # every class-level triple realizes a 3-move and vice versa
    from gcwords.words import legal_3moves

    for n in (2, 3):
        for P in enumerate_commutation_classes(n):
            has_triple = bool(braid_triples(P))
            has_move = any(legal_3moves(w) for w in words_of_class(P))
            assert has_triple == has_move


def test_render_dot_deterministic():
    P = poset_of_word(STANDARD3)
    text = render_dot(P)
    assert text == render_dot(poset_of_word(STANDARD3))
    assert 'n4 [label="4", pos="3,' in text
    assert "n5 -> n6;" in text
    assert "style=dotted" not in text
    guided = render_dot(P, column_guides=True)
    assert "n3 -> n6 [style=dotted, arrowhead=none, constraint=false];" in guided


@settings(deadline=None, max_examples=40)
@given(
    n=st.integers(min_value=2, max_value=5),
    choices=st.lists(st.integers(min_value=0, max_value=10**6), max_size=20),
)
def test_canonical_form_idempotent_on_random_classes(n, choices):
    w = random_braid_walk(standard_word(n), choices)
    P = canonical_form(poset_of_word(w))
    assert canonical_form(P) == P
