import pytest

from lyndonarrays import oracle
from lyndonarrays.errors import InvalidInput, ModeMismatch, OutOfBounds
from lyndonarrays.text import SentinelMode, frame

from conftest import AABABBAA_LAMBDA_INV, AABABBAA_NEXT_INV, BANANA_LAMBDA, BANANA_NEXT


@pytest.mark.parametrize("w, expected", [
    ("a", True), ("ab", True), ("aab", True), ("abb", True), ("aabab", True),
    ("ba", False), ("aa", False), ("abab", False),
])
def test_is_lyndon(w, expected):
    assert oracle.is_lyndon(w) is expected


@pytest.mark.parametrize("w, expected", [
    ("a", True), ("ba", True), ("bab", True), ("baba", True), ("bbab", True),
    ("aa", True), ("ab", False), ("aab", False),
])
def test_is_inverse_lyndon(w, expected):
    assert oracle.is_inverse_lyndon(w) is expected


def test_empty_word_rejected():
    with pytest.raises(InvalidInput):
        oracle.is_lyndon("")


@pytest.mark.parametrize("w, border", [
    ("a", 0), ("aa", 1), ("abab", 2), ("abcab", 2), ("aabaa", 2), ("abc", 0), ("aaaa", 3),
])
def test_longest_border(w, border):
    assert oracle.longest_border(w) == border


def test_naive_arrays_on_known_words():
    assert oracle.naive_lyndon_array(frame("banana")) == BANANA_LAMBDA
    t = frame("aababbaa", mode=SentinelMode.INVERSE)
    assert oracle.naive_inverse_lyndon_array(t) == AABABBAA_LAMBDA_INV
    assert oracle.naive_edges(t).next == AABABBAA_NEXT_INV


def test_mode_is_checked():
    with pytest.raises(ModeMismatch):
        oracle.naive_lyndon_array(frame("ab", mode=SentinelMode.INVERSE))
    with pytest.raises(ModeMismatch):
        oracle.naive_inverse_lyndon_array(frame("ab"))


def test_single_letter_edges():
    e = oracle.naive_edges(frame("a"))
    assert e.next == [4, 3, 4]
    assert e.prev == [0, 1, 1]


def test_banana_edges():
    assert oracle.naive_edges(frame("banana")).next == BANANA_NEXT


def test_suffix_order_tiny():
    table = oracle.naive_suffix_order(frame("a"))
    # '#' < '$' < 'a' puts "#a$" first, then "$", then "a$"
    assert table.sa == [1, 3, 2]
    assert table.isa == [1, 3, 2]


def test_naive_lce():
    t = frame("banana")
    assert oracle.naive_lce(t, 3, 5) == 3  # "anana$" and "ana$" share "ana"
    assert oracle.naive_lce(t, 2, 3) == 0


def test_nsv_matches_naive_on_small_words():
    for w in ("banana", "abracadabra", "aaaa", "mississippi", "abab"):
        t = frame(w)
        assert oracle.nsv_lyndon_array(t) == oracle.naive_lyndon_array(t)


def test_maximal_factor_positions():
    t = frame("babacbabaa", mode=SentinelMode.INVERSE)
    assert oracle.maximal_factor(t, 2) == b"baba"
    assert oracle.maximal_factor(t, 7) == b"babaa"
    with pytest.raises(OutOfBounds):
        oracle.maximal_factor(t, 1)
    with pytest.raises(OutOfBounds):
        oracle.maximal_factor(t, 12)
