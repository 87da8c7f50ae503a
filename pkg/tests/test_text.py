import pytest

from lyndonarrays.errors import InvalidInput, OutOfBounds, UnknownSymbol
from lyndonarrays.text import AlphabetOrder, Ordering, SentinelMode, as_symbols, cmp_symbols, frame


def test_strings_become_utf8_bytes():
    assert as_symbols("ab") == b"ab"
    assert as_symbols([3, 1]) == (3, 1)
    with pytest.raises(InvalidInput):
        as_symbols([1, -1])


def test_empty_word_rejected():
    with pytest.raises(InvalidInput):
        frame("")


def test_standard_sentinels_sit_below_alphabet():
    t = frame("ba")
    assert t.framed_len == 4
    assert t.symbol_at(1) < t.symbol_at(4) < min(t.symbol_at(2), t.symbol_at(3))


def test_inverse_sentinels_sit_above_alphabet():
    t = frame("ba", mode=SentinelMode.INVERSE)
    assert t.symbol_at(1) > t.symbol_at(4) > max(t.symbol_at(2), t.symbol_at(3))


def test_symbol_at_bounds():
    t = frame("abc")
    with pytest.raises(OutOfBounds):
        t.symbol_at(0)
    with pytest.raises(OutOfBounds):
        t.symbol_at(6)


def test_explicit_order_and_unknown_symbol():
    order = AlphabetOrder.from_symbols("ba")
    t = frame("ab", order)
    assert t.ranks[1:3] == (1, 0)
    assert cmp_symbols(t, 2, 3) is Ordering.GREATER
    with pytest.raises(UnknownSymbol):
        frame("abc", order)


def test_duplicate_symbol_in_order_rejected():
    with pytest.raises(InvalidInput):
        AlphabetOrder.from_symbols("aba")


def test_reversed_natural_flips_comparisons():
    t = frame("ab", AlphabetOrder.reversed_natural("ab"))
    assert cmp_symbols(t, 2, 3) is Ordering.GREATER


def test_integer_alphabet_ranks_are_values():
    t = frame((300, 7, 300))
    assert t.ranks == (-2, 300, 7, 300, -1)
    assert t.raw_at(1) == "#" and t.raw_at(5) == "$" and t.raw_at(2) == 300


def test_subword_and_interior_slice():
    t = frame("banana")
    assert t.subword(2, 4) == b"ban"
    assert t.interior_slice(list(range(8))) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(OutOfBounds):
        t.subword(1, 3)
    with pytest.raises(InvalidInput):
        t.interior_slice([1, 2])


def test_padded_ranks_negation():
    t = frame("ab")
    assert t.padded_ranks()[0] is None
    assert t.padded_ranks(negate=True)[1:] == [-v for v in t.ranks]


def test_display():
    assert frame("banana").display() == "#banana$"
