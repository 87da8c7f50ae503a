"""Nearest smaller suffixes and the Lyndon array (standard sentinel mode)."""

from __future__ import annotations

from dataclasses import dataclass

from .edges import nearest_greater_edges
from .errors import ModeMismatch
from .lce import DEFAULT_SHADOW_LIMIT, LceCounters
from .text import FramedText, SentinelMode


@dataclass(frozen=True)
class StandardResult:
    """NSS/PSS arrays, their edge LCEs and the Lyndon array.

    Every array has one entry per framed position; entry ``k`` describes
    position ``k + 1`` and holds 1-based positions.
    """

    text: FramedText
    next: list[int]
    prev: list[int]
    nlce: list[int]
    plce: list[int]
    lam: list[int]
    counters: LceCounters


def standard_ranks(t: FramedText) -> list:
    if t.mode is not SentinelMode.STANDARD:
        raise ModeMismatch("build_standard needs a standard-mode text")
    return t.padded_ranks(negate=True)


def lyndon_from_next(next_: list[int]) -> list[int]:
    """lambda[i] = next[i] - i over 0-based storage of framed positions."""
    return [v - i for i, v in enumerate(next_, start=1)]


def build_standard(t: FramedText, *, shadow=False, shadow_limit=DEFAULT_SHADOW_LIMIT,
                   trace=False, return_engine=False):
    x = standard_ranks(t)
    N = t.framed_len
    nxt, prv, nlce, plce, engine = nearest_greater_edges(
        x, shadow=shadow, shadow_limit=shadow_limit, trace=trace)
    nxt = nxt[1 : N + 1]
    result = StandardResult(t, nxt, prv[1 : N + 1], nlce[1 : N + 1], plce[1 : N + 1],
                            lyndon_from_next(nxt), engine.counters())
    if return_engine:
        return result, engine
    return result
