"""Property tests: fast checks against brute force on generated words."""

from hypothesis import given, settings
from hypothesis import strategies as st

from lyndonarrays import oracle
from lyndonarrays.invariants import (border_length, find_crossing, find_crossing_brute,
                                     inverse_lyndon_scan, lyndon_scan, run_identity_suite)
from lyndonarrays.ngs import build_inverse
from lyndonarrays.nss import build_standard
from lyndonarrays.rules import build_joint
from lyndonarrays.text import SentinelMode, frame
from lyndonarrays.verify import check_rules

words = st.binary(min_size=1, max_size=40).map(lambda b: bytes(97 + c % 3 for c in b))
int_words = st.lists(st.integers(0, 5), min_size=1, max_size=40)


@given(words)
def test_linear_scans_match_naive(w):
    assert lyndon_scan(w) == oracle.is_lyndon(w)
    assert inverse_lyndon_scan(w) == oracle.is_inverse_lyndon(w)
    assert border_length(w) == oracle.longest_border(w)


@given(words)
def test_builders_match_oracles(w):
    ts = frame(w)
    ti = frame(w, mode=SentinelMode.INVERSE)
    assert build_standard(ts, shadow=True).lam == oracle.naive_lyndon_array(ts)
    assert build_inverse(ti, shadow=True).lam_inv == oracle.naive_inverse_lyndon_array(ti)


@given(int_words)
def test_integer_alphabets(w):
    ts = frame(w)
    assert build_standard(ts).lam == oracle.nsv_lyndon_array(ts)


def smaller_than_suffixes(w):
    return all(w < w[k:] for k in range(1, len(w)))


@given(words)
def test_factors_are_longest(w):
    # the factor at i is Lyndon and one symbol more is not
    t = frame(w)
    lam = build_standard(t).lam
    for i in range(2, t.framed_len):
        end = i - 1 + lam[i - 1]
        assert smaller_than_suffixes(t.ranks[i - 1 : end])
        assert not smaller_than_suffixes(t.ranks[i - 1 : end + 1])


@given(words)
def test_identity_suite_holds(w):
    run_identity_suite(w)


@given(words)
def test_shortcut_rules_sound(w):
    j = build_joint(w)
    check_rules(j.std, j.inv)


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(1, 30), st.integers(1, 30)), max_size=25))
def test_crossing_sweep_agrees_with_brute_force(pairs):
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    assert (find_crossing(edges) is None) == (find_crossing_brute(edges) is None)
