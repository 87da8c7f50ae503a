"""Brute-force reference implementations.

Everything here compares suffixes or prefixes directly and is at least
quadratic.  These functions are ground truth for the tests and for the
``verify`` command; keep inputs to a few hundred symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, ModeMismatch, OutOfBounds
from .text import AlphabetOrder, FramedText, SentinelMode, as_symbols


@dataclass(frozen=True)
class EdgeArrays:
    """Nearest-suffix arrays over framed positions (0-based storage of 1-based values).

    In standard mode these are NSS/PSS; in inverse mode NGS/PGS.
    """

    next: list[int]
    prev: list[int]
    nlce: list[int]
    plce: list[int]


@dataclass(frozen=True)
class SuffixOrderTable:
    sa: list[int]  # framed positions, smallest suffix first
    isa: list[int]  # isa[i - 1] is the 1-based rank of suffix i


def _ranked(w, order: AlphabetOrder | None) -> list[int]:
    syms = as_symbols(w)
    if len(syms) == 0:
        raise InvalidInput("word must be non-empty")
    return (order or AlphabetOrder.natural()).ranks_of(syms)


def _is_lyndon_ranks(w) -> bool:
    return all(w < w[k:] for k in range(1, len(w)))


def _is_inverse_lyndon_ranks(w) -> bool:
    return all(w[k:] < w for k in range(1, len(w)))


def is_lyndon(w, order: AlphabetOrder | None = None) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper non-empty suffixes."""
    return _is_lyndon_ranks(_ranked(w, order))


def is_inverse_lyndon(w, order: AlphabetOrder | None = None) -> bool:
    """True iff every proper non-empty suffix of ``w`` is strictly smaller than ``w``."""
    return _is_inverse_lyndon_ranks(_ranked(w, order))


def longest_border(w) -> int:
    """Length of the longest proper prefix of ``w`` that is also a suffix."""
    syms = as_symbols(w)
    if len(syms) == 0:
        raise InvalidInput("word must be non-empty")
    for k in range(len(syms) - 1, 0, -1):
        if syms[:k] == syms[-k:]:
            return k
    return 0


def _require(t: FramedText, mode: SentinelMode):
    if t.mode is not mode:
        raise ModeMismatch(f"expected a {mode.value}-mode text, got {t.mode.value}")


def _longest_prefix(x: tuple, test) -> list[int]:
    N = len(x)
    out = []
    for i in range(N):
        best = 1
        for m in range(2, N - i + 1):
            if test(x[i : i + m]):
                best = m
        out.append(best)
    return out


def naive_lyndon_array(t: FramedText) -> list[int]:
    """Lyndon array by testing every prefix of every framed suffix."""
    _require(t, SentinelMode.STANDARD)
    return _longest_prefix(t.ranks, _is_lyndon_ranks)


def naive_inverse_lyndon_array(t: FramedText) -> list[int]:
    _require(t, SentinelMode.INVERSE)
    return _longest_prefix(t.ranks, _is_inverse_lyndon_ranks)


def lce_ranks(x, i: int, j: int) -> int:
    """Character-scan LCE on a 1-based rank sequence (``x[0]`` unused).

    Positions past the end of ``x`` are empty suffixes.
    """
    end = len(x)
    k = 0
    while i + k < end and j + k < end and x[i + k] == x[j + k]:
        k += 1
    return k


def naive_lce(t: FramedText, i: int, j: int) -> int:
    N = t.framed_len
    for p in (i, j):
        if not 1 <= p <= N + 1:
            raise OutOfBounds(f"position {p} outside 1..{N + 1}")
    x = t.ranks
    return lce_ranks((None, *x), i, j)


def naive_edges(t: FramedText) -> EdgeArrays:
    """Nearest smaller (standard) or greater (inverse) suffixes by pairwise comparison."""
    x = t.ranks
    N = len(x)
    suffix = [x[i:] for i in range(N)]
    if t.mode is SentinelMode.STANDARD:
        beats = lambda a, b: suffix[a] < suffix[b]  # noqa: E731
    else:
        beats = lambda a, b: suffix[a] > suffix[b]  # noqa: E731
    nxt, prv = [], []
    for i in range(N):
        nxt.append(next((j + 1 for j in range(i + 1, N) if beats(j, i)), N + 1))
        prv.append(next((j + 1 for j in range(i - 1, -1, -1) if beats(j, i)), 0))
    padded = (None, *x)
    nlce = [lce_ranks(padded, i, nxt[i - 1]) if nxt[i - 1] <= N else 0 for i in range(1, N + 1)]
    plce = [lce_ranks(padded, prv[i - 1], i) if prv[i - 1] >= 1 else 0 for i in range(1, N + 1)]
    return EdgeArrays(nxt, prv, nlce, plce)


def naive_suffix_order(t: FramedText) -> SuffixOrderTable:
    x = t.ranks
    N = len(x)
    sa = sorted(range(1, N + 1), key=lambda i: x[i - 1 :])
    isa = [0] * N
    for k, i in enumerate(sa, start=1):
        isa[i - 1] = k
    return SuffixOrderTable(sa, isa)


def nsv_lyndon_array(t: FramedText) -> list[int]:
    """Lyndon array as next-smaller-value distances over the inverse suffix array."""
    _require(t, SentinelMode.STANDARD)
    isa = naive_suffix_order(t).isa
    N = len(isa)
    out = []
    for i in range(N):
        j = next((j for j in range(i + 1, N) if isa[j] < isa[i]), None)
        out.append(N - i if j is None else j - i)
    return out


def maximal_factor(t: FramedText, i: int):
    """Longest Lyndon (standard) or inverse Lyndon (inverse) factor at interior position ``i``."""
    N = t.framed_len
    if not 2 <= i <= N - 1:
        raise OutOfBounds(f"maximal factors are reported for interior positions 2..{N - 1}")
    if t.mode is SentinelMode.STANDARD:
        test = _is_lyndon_ranks
    else:
        test = _is_inverse_lyndon_ranks
    x = t.ranks
    best = 1
    for m in range(2, N - i + 2):
        if test(x[i - 1 : i - 1 + m]):
            best = m
    return t.subword(i, i + best - 1)
