"""Constant-time suffix comparisons from the joint use of both arrays.

Verdicts are stated for the standard framing of the word, which is the
ordinary order on interior suffixes (a proper prefix is smaller).  Clauses are
tried in order and the first match wins:

1. ``j < i + lam[i]`` -> Less.
2. ``j == next_inv[i]`` -> Less, unless the edge's mismatch is the terminal
   ``$`` (``j + nlce[i] == N``).  In that case the suffix at ``j`` is a proper
   prefix of the suffix at ``i``; the inverse framing calls it greater but the
   standard order calls it smaller, so the verdict is Greater.
3. ``j < next_inv[i]`` -> Greater.
4. ``i == prev[j]`` -> Less; ``i == prev_inv[j]`` -> Greater.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InputMismatch, InvalidInput, OutOfBounds
from .ngs import InverseResult, build_inverse
from .nss import StandardResult, build_standard
from .oracle import maximal_factor
from .text import AlphabetOrder, SentinelMode, frame


class Outcome(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ComparisonVerdict:
    outcome: Outcome
    rule: int | None = None

    def __post_init__(self):
        if (self.outcome is Outcome.UNKNOWN) != (self.rule is None):
            raise ValueError("a decided verdict needs a rule id, an unknown one must not have one")


@dataclass(frozen=True)
class JointArrays:
    std: StandardResult
    inv: InverseResult


def build_joint(word, order: AlphabetOrder | None = None) -> JointArrays:
    return JointArrays(build_standard(frame(word, order, SentinelMode.STANDARD)),
                       build_inverse(frame(word, order, SentinelMode.INVERSE)))


UNKNOWN = ComparisonVerdict(Outcome.UNKNOWN)


def shortcut_compare(std: StandardResult, inv: InverseResult, i: int, j: int) -> ComparisonVerdict:
    """Order of the suffixes at framed positions ``i < j``, when a clause decides it."""
    if std.text is not inv.text and not std.text.same_word(inv.text):
        raise InputMismatch("standard and inverse results were built from different words")
    N = std.text.framed_len
    if i >= j:
        raise InvalidInput(f"need i < j, got i={i}, j={j}")
    if i < 1 or j > N:
        raise OutOfBounds(f"positions must lie in 1..{N}")
    if j < i + std.lam[i - 1]:
        return ComparisonVerdict(Outcome.LESS, 1)
    nxt = inv.next_inv[i - 1]
    if j == nxt:
        if j + inv.nlce[i - 1] == N:
            return ComparisonVerdict(Outcome.GREATER, 2)
        return ComparisonVerdict(Outcome.LESS, 2)
    if j < nxt:
        return ComparisonVerdict(Outcome.GREATER, 3)
    if std.prev[j - 1] == i:
        return ComparisonVerdict(Outcome.LESS, 4)
    if inv.prev_inv[j - 1] == i:
        return ComparisonVerdict(Outcome.GREATER, 4)
    return UNKNOWN


def compare_pairs(word, pairs, order: AlphabetOrder | None = None) -> list[ComparisonVerdict]:
    joint = build_joint(word, order)
    return [shortcut_compare(joint.std, joint.inv, i, j) for i, j in pairs]


def resolved_fraction(joint: JointArrays) -> float:
    """Share of all pairs i < j that some clause decides (reported, never asserted)."""
    N = joint.std.text.framed_len
    decided = sum(
        shortcut_compare(joint.std, joint.inv, i, j).outcome is not Outcome.UNKNOWN
        for i in range(1, N) for j in range(i + 1, N + 1)
    )
    return decided / (N * (N - 1) // 2)


@dataclass(frozen=True)
class CompatibilityDemo:
    word: bytes
    i: int  # framed positions
    j: int
    factor_i: bytes
    factor_j: bytes
    factors_ordered: bool  # factor_i < factor_j
    suffixes_ordered: bool  # suffix_i < suffix_j


COUNTEREXAMPLE_WORD = b"babacbabaa"


def compatibility_counterexample() -> CompatibilityDemo:
    """The word whose maximal inverse factors order the opposite way to its suffixes.

    Interior positions 1 and 6 (framed 2 and 7) carry the factors ``baba`` and
    ``babaa``: ``baba < babaa`` yet the suffix ``babacbabaa`` is greater than
    ``babaa``.
    """
    t = frame(COUNTEREXAMPLE_WORD, mode=SentinelMode.INVERSE)
    inv = build_inverse(t)
    i, j = 2, 7
    fi, fj = maximal_factor(t, i), maximal_factor(t, j)
    for pos, f in ((i, fi), (j, fj)):
        if len(f) != inv.lam_inv[pos - 1]:
            raise AssertionError(f"built lambda_inv[{pos}] disagrees with the brute-force factor {f!r}")
    demo = CompatibilityDemo(COUNTEREXAMPLE_WORD, i, j, fi, fj,
                             factors_ordered=fi < fj,
                             suffixes_ordered=t.interior[i - 2:] < t.interior[j - 2:])
    if not demo.factors_ordered or demo.suffixes_ordered:
        raise AssertionError("compatibility counterexample no longer holds")
    return demo


def compatibility_violations(word, order: AlphabetOrder | None = None, inverse=True):
    """All interior pairs i < j with factor_i < factor_j but suffix_i > suffix_j.

    With ``inverse=False`` this checks the classical property on Lyndon factors,
    which must come back empty.
    """
    mode = SentinelMode.INVERSE if inverse else SentinelMode.STANDARD
    t = frame(word, order, mode)
    x = t.ranks
    N = t.framed_len
    factors = {i: tuple(x[i - 1 : i - 1 + len(maximal_factor(t, i))]) for i in range(2, N)}
    bad = []
    for i in range(2, N):
        for j in range(i + 1, N):
            # interior suffix order; a proper prefix is smaller
            if factors[i] < factors[j] and x[i - 1 : -1] > x[j - 1 : -1]:
                bad.append((i, j))
    return bad
