import pytest

from lyndonarrays import oracle
from lyndonarrays.errors import InputMismatch, InvalidInput, OutOfBounds
from lyndonarrays.rules import (COUNTEREXAMPLE_WORD, ComparisonVerdict, Outcome, build_joint,
                                compare_pairs, compatibility_counterexample, compatibility_violations,
                                resolved_fraction, shortcut_compare)
from lyndonarrays.verify import all_words, check_rules


def test_known_pairs():
    verdicts = compare_pairs("aababbaa", [(4, 6), (6, 8)])
    assert verdicts == [ComparisonVerdict(Outcome.LESS, 2), ComparisonVerdict(Outcome.GREATER, 3)]


def test_verdict_validation():
    with pytest.raises(ValueError):
        ComparisonVerdict(Outcome.LESS)
    with pytest.raises(ValueError):
        ComparisonVerdict(Outcome.UNKNOWN, 1)


def test_argument_checks():
    j = build_joint("abab")
    with pytest.raises(InvalidInput):
        shortcut_compare(j.std, j.inv, 3, 3)
    with pytest.raises(OutOfBounds):
        shortcut_compare(j.std, j.inv, 2, 9)
    other = build_joint("abba")
    with pytest.raises(InputMismatch):
        shortcut_compare(j.std, other.inv, 1, 2)


def test_terminal_edge_guard():
    # on "aa" the inverse edge 3 -> 4 ends at '$'; with '$' smallest, "a$" > "$"
    j = build_joint("aa")
    assert j.inv.next_inv[2] == 4
    truth = oracle.naive_suffix_order(j.std.text).isa
    assert truth[2] > truth[3]
    assert shortcut_compare(j.std, j.inv, 3, 4).outcome is Outcome.GREATER


def test_sound_on_all_short_binary_words():
    for w in all_words(2, 7):
        j = build_joint(w)
        check_rules(j.std, j.inv)


def test_resolved_fraction_in_range():
    f = resolved_fraction(build_joint("abaababaab"))
    assert 0 < f <= 1


def test_counterexample():
    demo = compatibility_counterexample()
    assert demo.word == COUNTEREXAMPLE_WORD
    assert (demo.factor_i, demo.factor_j) == (b"baba", b"babaa")
    assert demo.factors_ordered and not demo.suffixes_ordered


def test_violations_only_in_inverse_setting():
    bad = compatibility_violations(COUNTEREXAMPLE_WORD)
    assert (2, 7) in bad
    assert compatibility_violations(COUNTEREXAMPLE_WORD, inverse=False) == []
