from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftedq.errors import InvalidTableau, ParseError
from shiftedq.shapes import SkewShape, basic_shapes
from shiftedq.tableaux import (
    Tableau,
    content,
    enumerate_tableaux,
    enumerate_tableaux_with_content,
    format_tableau,
    letter,
    letter_str,
    m_stats,
    parse_letter,
    parse_tableau,
    reading_order,
    reading_word,
    word_from_str,
)

EXAMPLE_TEXT = """\
. . . . . 1' 1 2
. . . 2' 2 2 4
. . . 2 4 5 5
. . . 4 6' 6
. . . . 6 7"""


def test_letter_codes_follow_alphabet_order():
    order = [letter(1, True), letter(1), letter(2, True), letter(2)]
    assert order == sorted(order) == [1, 2, 3, 4]
    assert letter_str(letter(3, True)) == "3'"
    assert parse_letter("3'") == letter(3, True)
    with pytest.raises(ParseError):
        parse_letter("0")


def test_example_tableau_content_and_shape():
    t = parse_tableau(EXAMPLE_TEXT)
    assert t.cells == SkewShape((8, 6, 5, 3, 2), (5, 2, 1)).cells
    assert t.is_valid()
    assert content(t).total == (2, 5, 0, 3, 2, 3, 1)


def test_format_round_trip_example():
    t = parse_tableau(EXAMPLE_TEXT)
    assert format_tableau(t) == EXAMPLE_TEXT
    assert parse_tableau(format_tableau(t)) == t


def test_reading_word_bottom_row_first():
    t = parse_tableau(EXAMPLE_TEXT)
    assert str(reading_word(t)).startswith("6 7 4 6' 6 2 4 5 5")


def test_violations_detected():
    # two unmarked 1 in a column
    t = Tableau({(1, 1): letter(1), (1, 2): letter(1), (2, 2): letter(1)})
    assert not t.is_valid()
    with pytest.raises(InvalidTableau):
        t.validate()
    # two marked 2' in a row
    t = Tableau({(1, 1): letter(2, True), (1, 2): letter(2, True)})
    assert not t.is_valid()


def test_m_stats_small_word():
    w = word_from_str("1 2' 2 1'")
    # right to left over unmarked 1, then left to right over 1'
    assert m_stats(w, 1) == (0, 0, 0, 0, 1, 1, 1, 1, 2)


def _brute_force(shape, max_value):
    order = reading_order(shape.cells)
    found = set()
    for codes in product(range(1, 2 * max_value + 1), repeat=len(order)):
        t = Tableau(dict(zip(order, codes)))
        if t.is_valid():
            found.add(t)
    return found


@pytest.mark.parametrize("shape", [s for s in basic_shapes(4)], ids=lambda s: s.literal())
def test_enumeration_matches_filtering(shape):
    listed = list(enumerate_tableaux(shape, 3))
    assert len(listed) == len(set(listed))
    assert set(listed) == _brute_force(shape, 3)


@given(st.sampled_from(basic_shapes(5)), st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_enumeration_with_content(shape, target):
    if sum(target) != shape.size:
        assert list(enumerate_tableaux_with_content(shape, target)) == []
        return
    got = list(enumerate_tableaux_with_content(shape, target))
    top = len(target)

    def padded(t):
        c = content(t).total
        return c + (0,) * (top - len(c))

    expected = [t for t in enumerate_tableaux(shape, top) if padded(t) == tuple(target)]
    assert set(got) == set(expected)


@given(st.sampled_from(basic_shapes(5)))
def test_every_enumerated_tableau_is_valid(shape):
    for t in enumerate_tableaux(shape, 2):
        assert t.is_valid()
        assert parse_tableau(format_tableau(t)) == t
