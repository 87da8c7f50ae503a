"""Framed words: an interior symbol sequence between two virtual sentinels.

Positions are framed and 1-based: position 1 holds ``#``, positions
``2..n+1`` hold the interior and position ``n+2`` holds ``$``.  Sentinels are
never materialized in the interior; :meth:`FramedText.symbol_at` returns their
reserved ranks on demand.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidInput, OutOfBounds, UnknownSymbol

Symbols = bytes | tuple[int, ...]


class SentinelMode(enum.Enum):
    STANDARD = "standard"  # '#' < '$' < every symbol
    INVERSE = "inverse"  # '#' > '$' > every symbol


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def as_symbols(word) -> Symbols:
    """Normalize ``str``/``bytes``/integer sequences to ``bytes`` or a tuple of ints.

    Strings are taken as their UTF-8 bytes; no multi-byte decoding is attempted.
    """
    if isinstance(word, str):
        return word.encode("utf-8")
    if isinstance(word, (bytes, bytearray, memoryview)):
        return bytes(word)
    out = tuple(int(s) for s in word)
    if any(s < 0 for s in out):
        raise InvalidInput("integer symbols must be non-negative")
    return out


@dataclass(frozen=True)
class AlphabetOrder:
    """Total order on raw symbols, given as a symbol -> rank mapping.

    ``rank=None`` is the natural order: every non-negative integer (or byte)
    is its own rank.
    """

    rank: Mapping[int, int] | None = None

    @classmethod
    def natural(cls) -> AlphabetOrder:
        return cls(None)

    @classmethod
    def from_symbols(cls, symbols) -> AlphabetOrder:
        """Order listed smallest first, e.g. ``from_symbols("abn")`` for a < b < n."""
        syms = as_symbols(symbols)
        if len(set(syms)) != len(syms):
            raise InvalidInput("alphabet order lists a symbol twice")
        return cls({s: k for k, s in enumerate(syms)})

    @classmethod
    def reversed_natural(cls, symbols) -> AlphabetOrder:
        syms = sorted(set(as_symbols(symbols)), reverse=True)
        return cls({s: k for k, s in enumerate(syms)})

    def __post_init__(self):
        if self.rank is not None and len(set(self.rank.values())) != len(self.rank):
            raise InvalidInput("alphabet order must be injective")

    def rank_of(self, symbol: int) -> int:
        if self.rank is None:
            return symbol
        try:
            return self.rank[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} has no rank in the alphabet order") from None

    def ranks_of(self, symbols: Symbols) -> list[int]:
        if self.rank is None:
            return list(symbols)
        rank = self.rank
        try:
            return [rank[s] for s in symbols]
        except KeyError as exc:
            raise UnknownSymbol(
                f"symbol {exc.args[0]!r} has no rank in the alphabet order"
            ) from None

    def bounds(self, interior: Symbols) -> tuple[int, int]:
        """Smallest and largest rank the order can assign within this text."""
        if self.rank is None:
            return 0, max(interior)
        values = self.rank.values()
        return min(values), max(values)


@dataclass(frozen=True)
class FramedText:
    interior: Symbols
    order: AlphabetOrder
    mode: SentinelMode
    hash_rank: int
    dollar_rank: int
    _interior_ranks: list[int] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.interior)

    @property
    def framed_len(self) -> int:
        return len(self.interior) + 2

    def symbol_at(self, i: int) -> int:
        """Rank of the symbol at framed position ``i``."""
        N = self.framed_len
        if not 1 <= i <= N:
            raise OutOfBounds(f"position {i} outside 1..{N}")
        if i == 1:
            return self.hash_rank
        if i == N:
            return self.dollar_rank
        return self._interior_ranks[i - 2]

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Ranks of framed positions 1..N, stored 0-based."""
        return (self.hash_rank, *self._interior_ranks, self.dollar_rank)

    def padded_ranks(self, negate: bool = False) -> list:
        """1-based working copy for the builders: index 0 is an unreadable ``None``."""
        if negate:
            body = [-v for v in self.ranks]
        else:
            body = list(self.ranks)
        body.insert(0, None)
        return body

    def raw_at(self, i: int) -> int | str:
        """Raw symbol at position ``i``; the sentinels come back as ``'#'`` and ``'$'``."""
        if i == 1:
            return "#"
        if i == self.framed_len:
            return "$"
        if not 1 <= i <= self.framed_len:
            raise OutOfBounds(f"position {i} outside 1..{self.framed_len}")
        return self.interior[i - 2]

    def subword(self, i: int, j: int) -> Symbols:
        """Raw interior symbols of framed positions ``i..j`` (both interior)."""
        if not (2 <= i and j <= self.framed_len - 1 and i <= j + 1):
            raise OutOfBounds(f"subword {i}..{j} is not inside the interior")
        return self.interior[i - 2 : j - 1]

    def interior_slice(self, values: Sequence) -> Sequence:
        """Drop the two sentinel entries from an array over framed positions."""
        if len(values) != self.framed_len:
            raise InvalidInput(f"expected {self.framed_len} values, got {len(values)}")
        return values[1:-1]

    def same_word(self, other: FramedText) -> bool:
        return self.interior == other.interior and self.order == other.order

    def display(self) -> str:
        return "".join(_display_symbol(self.raw_at(i)) for i in range(1, self.framed_len + 1))


def _display_symbol(s) -> str:
    if isinstance(s, str):
        return s
    if 32 < s < 127:
        return chr(s)
    return f"<{s}>"


def frame(interior, order: AlphabetOrder | None = None,
          mode: SentinelMode = SentinelMode.STANDARD) -> FramedText:
    """Install sentinels around ``interior`` under ``order`` in the given mode."""
    syms = as_symbols(interior)
    if len(syms) == 0:
        raise InvalidInput("interior word must be non-empty")
    if order is None:
        order = AlphabetOrder.natural()
    ranks = order.ranks_of(syms)
    lo, hi = order.bounds(syms)
    mode = SentinelMode(mode)
    if mode is SentinelMode.STANDARD:
        hash_rank, dollar_rank = lo - 2, lo - 1
    else:
        hash_rank, dollar_rank = hi + 2, hi + 1
    return FramedText(syms, order, mode, hash_rank, dollar_rank, ranks)


def cmp_symbols(t: FramedText, i: int, j: int) -> Ordering:
    a, b = t.symbol_at(i), t.symbol_at(j)
    if a < b:
        return Ordering.LESS
    if a > b:
        return Ordering.GREATER
    return Ordering.EQUAL
