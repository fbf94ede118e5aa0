from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftedq.amenability import (
    checklist_context,
    checklist_failures,
    find_phi_matching,
    is_amenable,
    is_fitting,
    is_k_amenable,
    is_k_amenable_checklist,
    is_k_amenable_word,
    k_amenable_codes,
    satisfies_sufficient,
)
from shiftedq.canonical import canonical_tableau
from shiftedq.shapes import SkewShape, basic_shapes
from shiftedq.tableaux import (
    Tableau,
    Word,
    enumerate_tableaux,
    letter,
    parse_tableau,
    reading_word,
    value_of,
    word_from_str,
)

CHECKLIST_TEXT = """\
. . . . . . . . 1' 1 1
. . . . . . . 1' 2' 2
. . . . . . . 1
. . . . . . . 2'
. . . . . 1' 1 2
. . . . . 1 2'
. . . . . . 2"""


@pytest.fixture
def checklist_example():
    return parse_tableau(CHECKLIST_TEXT)


def test_checklist_example_shape(checklist_example):
    t = checklist_example
    assert t.cells == SkewShape((11, 9, 6, 5, 4, 2, 1), (8, 6, 5, 4, 1)).cells
    assert t.is_valid()


def test_checklist_example_counts(checklist_example):
    ctx = checklist_context(checklist_example, 2)
    twos = sorted(c for c, code in checklist_example.entries.items() if code == letter(2))
    assert twos == [(2, 10), (5, 8), (7, 7)]
    got = [(ctx.s_box(c, 1), ctx.s_box(c, 2)) for c in twos]
    assert got == [(2, 1), (3, 2), (4, 3)]
    assert set(ctx.B) == {(2, 9), (4, 8)}
    assert [(ctx.s_box(c, 1), ctx.s_box(c, 2)) for c in [(2, 9), (4, 8)]] == [(2, 1), (3, 1)]
    assert ctx.d == 1


def test_checklist_example_matching(checklist_example):
    ctx = checklist_context(checklist_example, 2)
    assert ctx.prefix() == ((2, 9),)
    phi = find_phi_matching(ctx)
    assert phi is not None and phi[(2, 9)] in {(2, 8), (1, 9)}
    assert {(1, 9), (2, 8)} <= set(ctx.B_hat)


def test_checklist_example_is_2_amenable(checklist_example):
    t = checklist_example
    assert checklist_failures(t, 2) == []
    assert is_k_amenable_checklist(t, 2)
    assert is_k_amenable_word(reading_word(t), 2)
    assert is_fitting(t, 1) and is_fitting(t, 2)


def test_word_definition_small_cases():
    assert is_k_amenable_word(word_from_str("1 2"), 2) is False
    assert is_k_amenable_word(word_from_str("2 1 1"), 2) is True
    assert is_k_amenable_word(word_from_str("1 1'"), 2) is True
    assert is_k_amenable_word(word_from_str("1' 1"), 2) is False
    # the first 1 in the word must be unmarked
    assert is_k_amenable_word(word_from_str("1'"), 2) is False
    with pytest.raises(ValueError):
        is_k_amenable_word(word_from_str("1"), 1)


ALPHABET = [letter(1, True), letter(1), letter(2, True), letter(2), letter(3)]


@pytest.mark.parametrize("n", range(0, 7))
def test_counter_form_equals_word_definition(n):
    for codes in product(ALPHABET, repeat=n):
        w = Word(codes, ())
        assert k_amenable_codes(codes, 2) == is_k_amenable_word(w, 2), codes


@given(st.lists(st.integers(1, 10), max_size=12), st.integers(2, 6))
def test_counter_form_random_words(codes, k):
    assert k_amenable_codes(codes, k) == is_k_amenable_word(Word(tuple(codes), ()), k)


@pytest.mark.parametrize("shape", basic_shapes(4), ids=lambda s: s.literal())
def test_fast_checklist_equals_full_checklist(shape):
    for t in enumerate_tableaux(shape, 4):
        for k in range(2, 6):
            assert is_k_amenable_checklist(t, k) == (not checklist_failures(t, k))


def _restrict(t: Tableau, k: int) -> Tableau:
    """Keep only the letters k-1 and k, relabelled to 1 and 2."""
    shift = 2 * (k - 2)
    return Tableau({c: code - shift for c, code in t.entries.items()
                    if value_of(code) in (k - 1, k)})


@given(st.sampled_from(basic_shapes(5)), st.integers(2, 5), st.data())
def test_predicates_read_only_two_letters(shape, k, data):
    tableaux = list(enumerate_tableaux(shape, 5))
    t = data.draw(st.sampled_from(tableaux))
    r = _restrict(t, k)
    assert is_k_amenable_word(reading_word(t), k) == is_k_amenable_word(reading_word(r), 2)
    assert is_k_amenable_checklist(t, k) == is_k_amenable_checklist(r, 2)
    assert (not checklist_failures(t, k)) == (not checklist_failures(r, 2))


@given(st.sampled_from(basic_shapes(5)), st.integers(2, 4), st.integers(0, 3), st.data())
def test_predicates_ignore_translation(shape, k, shift, data):
    t = data.draw(st.sampled_from(list(enumerate_tableaux(shape, 4))))
    moved = Tableau({(x + shift, y + shift + 1): c for (x, y), c in t.entries.items()})
    assert is_k_amenable_checklist(t, k) == is_k_amenable_checklist(moved, k)
    assert is_k_amenable_word(reading_word(t), k) == is_k_amenable_word(reading_word(moved), k)


@pytest.mark.parametrize("shape", basic_shapes(4), ids=lambda s: s.literal())
def test_sufficient_conditions_imply_amenability(shape):
    for t in enumerate_tableaux(shape, 4):
        for k in range(2, 6):
            if satisfies_sufficient(t, k):
                assert is_k_amenable(t, k)


@given(st.sampled_from(basic_shapes(7)))
def test_canonical_tableau_passes_sufficient_test(shape):
    t = canonical_tableau(shape).tableau
    for k in range(2, t.max_value + 2):
        assert satisfies_sufficient(t, k)
    assert is_amenable(t)
