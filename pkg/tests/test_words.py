import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetgroups import Word, parse_word
from tetgroups.words import _free_reduce

NAMES = ("P", "Q", "R", "S")

letters = st.lists(
    st.tuples(st.integers(min_value=0, max_value=3), st.sampled_from([1, -1])),
    max_size=30,
)
words = letters.map(Word.from_letters)


def test_empty_word_basics():
    w = Word.empty()
    assert len(w) == 0
    assert w.is_empty()
    assert w.render(NAMES) == ""
    assert list(w) == []


def test_gen_builds_single_letter():
    assert Word.gen(2).letters == ((2, 1),)
    assert Word.gen(0, -1).letters == ((0, -1),)


def test_from_letters_cancels_adjacent_inverses():
    assert Word.from_letters([(0, 1), (0, -1)]).is_empty()
    # cancellation cascades through the middle
    w = Word.from_letters([(1, 1), (0, 1), (0, -1), (1, -1)])
    assert w.is_empty()


def test_bad_sign_rejected():
    with pytest.raises(ValueError):
        Word.from_letters([(0, 2)])


def test_concatenation_reduces_at_the_seam():
    left = Word.from_letters([(0, 1), (1, 1)])
    right = Word.from_letters([(1, -1), (2, 1)])
    assert (left * right).letters == ((0, 1), (2, 1))


def test_power_and_inverse():
    w = Word.from_letters([(0, 1), (1, 1)])
    assert w ** 0 == Word.empty()
    assert w ** 3 == w * w * w
    assert w ** -2 == (~w) * (~w)
    assert (~w).letters == ((1, -1), (0, -1))
    assert w.inverse() == ~w


def test_reduce_involutions_flattens_and_cancels():
    inv = frozenset({0, 3})
    assert Word.gen(3, -1).reduce_involutions(inv).letters == ((3, 1),)
    assert Word.from_letters([(3, 1), (3, 1)]).reduce_involutions(inv).is_empty()
    # P S S Q with S an involution collapses to P Q
    w = Word.from_letters([(0, 1), (3, 1), (3, 1), (1, 1)])
    assert w.reduce_involutions(inv).letters == ((0, 1), (1, 1))
    # non-involutions keep their signs and never cancel against equals
    w = Word.from_letters([(1, 1), (1, 1)])
    assert w.reduce_involutions(inv).letters == ((1, 1), (1, 1))


def test_render_folds_exponents():
    assert Word.from_letters([(3, 1), (2, 1), (3, 1)]).render(NAMES) == "SRS"
    w = Word.from_letters([(0, -1), (1, 1), (1, 1)])
    assert w.render(("a", "b", "c")) == "a^-1b^2"


def test_parse_word_examples():
    assert parse_word("SRS", NAMES).letters == ((3, 1), (2, 1), (3, 1))
    assert parse_word("a^-1b^2", ("a", "b")).letters == ((0, -1), (1, 1), (1, 1))
    assert parse_word("", NAMES).is_empty()
    assert parse_word(" P Q ", NAMES).letters == ((0, 1), (1, 1))


def test_parse_word_longest_name_wins():
    # with names x and xy the two-letter name must be tried first
    assert parse_word("xyx", ("x", "xy")).letters == ((1, 1), (0, 1))


def test_parse_word_errors():
    with pytest.raises(ValueError):
        parse_word("PZ", NAMES)
    with pytest.raises(ValueError):
        parse_word("P^", NAMES)
    with pytest.raises(ValueError):
        parse_word("P^-", NAMES)


@given(letters)
def test_from_letters_output_is_freely_reduced(raw):
    out = Word.from_letters(raw).letters
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(out, out[1:]))
    assert _free_reduce(out) == out


@given(words, words, words)
def test_concatenation_is_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words)
def test_word_times_inverse_is_empty(w):
    assert (w * ~w).is_empty()
    assert (~w * w).is_empty()


@given(words)
def test_render_parse_round_trip(w):
    assert parse_word(w.render(NAMES), NAMES) == w


@given(words)
def test_involution_reduction_is_idempotent(w):
    inv = frozenset({0, 2})
    once = w.reduce_involutions(inv)
    assert once.reduce_involutions(inv) == once
