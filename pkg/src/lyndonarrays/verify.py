"""Oracle cross-checks over single words and exhaustive word sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import oracle
from .errors import InvalidInput, VerificationFailure
from .invariants import run_identity_suite
from .ngs import build_inverse
from .nss import build_standard
from .rules import Outcome, shortcut_compare
from .text import AlphabetOrder, SentinelMode, frame

DEFAULT_MAX_N = 300
DEFAULT_MAX_WORDS = 250_000


@dataclass
class VerifyStats:
    words: int = 0
    positions: int = 0
    pairs_decided: int = 0
    pairs_total: int = 0
    checks: dict[str, int] = field(default_factory=dict)

    def add(self, name, count=1):
        self.checks[name] = self.checks.get(name, 0) + count


def _expect(name, got, want, word):
    if got != want:
        raise VerificationFailure(f"{name} on {word!r}: got {got}, expected {want}")


def check_oracles(word, order: AlphabetOrder | None = None, stats: VerifyStats | None = None):
    """Builders against the brute-force arrays (both oracles for the Lyndon array)."""
    stats = stats if stats is not None else VerifyStats()
    ts = frame(word, order, SentinelMode.STANDARD)
    ti = frame(word, order, SentinelMode.INVERSE)
    std = build_standard(ts, shadow=True)
    inv = build_inverse(ti, shadow=True)
    _expect("lambda vs naive", std.lam, oracle.naive_lyndon_array(ts), word)
    _expect("lambda vs NSV over ISA", std.lam, oracle.nsv_lyndon_array(ts), word)
    _expect("lambda_inv vs naive", inv.lam_inv, oracle.naive_inverse_lyndon_array(ti), word)
    for res, t, arrays in ((std, ts, (std.next, std.prev, std.nlce, std.plce)),
                           (inv, ti, (inv.next_inv, inv.prev_inv, inv.nlce, inv.plce))):
        ref = oracle.naive_edges(t)
        _expect(f"{t.mode.value} edges vs naive", arrays, (ref.next, ref.prev, ref.nlce, ref.plce), word)
    stats.words += 1
    stats.positions += ts.framed_len
    for name in ("lambda vs naive", "lambda vs NSV", "lambda_inv vs naive", "edges vs naive", "shadowed LCE"):
        stats.add(name)
    return std, inv


def check_rules(std, inv, stats: VerifyStats | None = None):
    """Every decided verdict agrees with the brute-force suffix order."""
    isa = oracle.naive_suffix_order(std.text).isa
    N = len(isa)
    decided = 0
    for i in range(1, N):
        for j in range(i + 1, N + 1):
            v = shortcut_compare(std, inv, i, j)
            if v.outcome is Outcome.UNKNOWN:
                continue
            truth = Outcome.LESS if isa[i - 1] < isa[j - 1] else Outcome.GREATER
            if v.outcome is not truth:
                raise VerificationFailure(
                    f"rule {v.rule} says {v.outcome.value} for ({i}, {j}) on {std.text.interior!r}")
            decided += 1
    if stats is not None:
        stats.pairs_decided += decided
        stats.pairs_total += N * (N - 1) // 2
        stats.add("suffix rules sound")
    return decided


def verify_word(word, order: AlphabetOrder | None = None, max_n: int = DEFAULT_MAX_N,
                stats: VerifyStats | None = None) -> VerifyStats:
    stats = stats if stats is not None else VerifyStats()
    n = len(frame(word, order).interior)
    if n > max_n:
        raise InvalidInput(
            f"word has {n} symbols; brute-force verification is limited to {max_n} "
            "(raise --max-n, or use `bench` for large inputs)")
    std, inv = check_oracles(word, order, stats)
    for name, count in run_identity_suite(word, order).items():
        stats.add(name, count)
    check_rules(std, inv, stats)
    return stats


def all_words(sigma: int, n_max: int):
    letters = bytes(range(ord("a"), ord("a") + sigma))
    for n in range(1, n_max + 1):
        for w in itertools.product(letters, repeat=n):
            yield bytes(w)


def count_words(sigma: int, n_max: int) -> int:
    return sum(sigma**n for n in range(1, n_max + 1))


def verify_exhaustive(sigma: int, n_max: int, max_words: int = DEFAULT_MAX_WORDS,
                      rules: bool = True, identities: bool = True) -> VerifyStats:
    if not 2 <= sigma <= 26 or n_max < 1:
        raise InvalidInput("need 2 <= sigma <= 26 and n_max >= 1")
    total = count_words(sigma, n_max)
    if total > max_words:
        raise InvalidInput(
            f"{total} words exceed the limit of {max_words}; lower n_max or raise --max-words")
    stats = VerifyStats()
    for w in all_words(sigma, n_max):
        std, inv = check_oracles(w, None, stats)
        if identities:
            for name, count in run_identity_suite(w).items():
                stats.add(name, count)
        if rules:
            check_rules(std, inv, stats)
    return stats
