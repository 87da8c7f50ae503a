"""Nearest greater suffixes and the inverse Lyndon array (inverse sentinel mode).

The inverse Lyndon array is recovered from the NGS array and the LCE stored
on each NGS edge; that LCE equals the longest border of the maximal inverse
Lyndon factor, so no border is ever computed separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .edges import nearest_greater_edges
from .errors import InvalidInput, ModeMismatch
from .lce import DEFAULT_SHADOW_LIMIT, LceCounters
from .text import FramedText, SentinelMode


@dataclass(frozen=True)
class InverseResult:
    text: FramedText
    next_inv: list[int]
    prev_inv: list[int]
    nlce: list[int]
    plce: list[int]
    lam_inv: list[int]
    counters: LceCounters


def inverse_ranks(t: FramedText) -> list:
    if t.mode is not SentinelMode.INVERSE:
        raise ModeMismatch("build_inverse needs an inverse-mode text")
    return t.padded_ranks()


def recover_lambda_inv(next_inv, nlce) -> list[int]:
    """lambda_inv[i] = next_inv[i] - i + nlce[i], positionwise."""
    if len(next_inv) != len(nlce):
        raise InvalidInput(f"length mismatch: {len(next_inv)} vs {len(nlce)}")
    return [v - i + c for i, (v, c) in enumerate(zip(next_inv, nlce), start=1)]


def build_inverse(t: FramedText, *, shadow=False, shadow_limit=DEFAULT_SHADOW_LIMIT,
                  trace=False, return_engine=False):
    x = inverse_ranks(t)
    N = t.framed_len
    nxt, prv, nlce, plce, engine = nearest_greater_edges(
        x, shadow=shadow, shadow_limit=shadow_limit, trace=trace)
    nxt, nlce = nxt[1 : N + 1], nlce[1 : N + 1]
    result = InverseResult(t, nxt, prv[1 : N + 1], nlce, plce[1 : N + 1],
                           recover_lambda_inv(nxt, nlce), engine.counters())
    if return_engine:
        return result, engine
    return result
