"""Amortized longest-common-extension queries for the nearest-suffix builders.

All character comparisons made by the builders happen in :meth:`SmartLce.query`.
The engine keeps a frontier ``rhs``: the rightmost position on the right-hand
side of any query that has been inspected so far, together with the anchor
pair ``(a, b)`` whose scan reached it.  Because ``x[b..rhs-1]`` equals
``x[a..a+rhs-1-b]``, a later query ``(l, r)`` with ``b <= l < r`` and
``r + m < rhs`` can be mirrored to ``(l-d, r-d)`` with ``d = b - a``.  That
mirrored pair is an edge that was already fixed, so its exact LCE is read from
the builder's ``nlce``/``plce`` arrays:

* if the stored value is below ``rhs - r`` it is the answer (a reuse hit);
* otherwise the answer is at least ``rhs - r`` and the scan resumes at the
  frontier, so only one already-inspected position is read again.

A query whose mirror is not a stored edge falls back to a scan from ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, InvalidQuery
from .oracle import lce_ranks

DEFAULT_SHADOW_LIMIT = 4096


@dataclass(frozen=True)
class LceCounters:
    explicit_comparisons: int = 0
    reuse_hits: int = 0
    extension_calls: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "explicit_comparisons": self.explicit_comparisons,
            "reuse_hits": self.reuse_hits,
            "extension_calls": self.extension_calls,
        }


class SmartLce:
    """LCE state for one build over the 1-based rank list ``x``.

    ``next_``, ``nlce``, ``prev`` and ``plce`` are the builder's live arrays;
    the engine only reads them.  With ``shadow=True`` (and ``len(x) - 1 <=
    shadow_limit``) every answer is checked against a plain character scan.
    With ``trace=True`` the frontier after each query is appended to
    ``self.frontier``.
    """

    def __init__(self, x, next_, nlce, prev, plce, *, shadow=False,
                 shadow_limit=DEFAULT_SHADOW_LIMIT, trace=False):
        self.x = x
        self.next = next_
        self.nlce = nlce
        self.prev = prev
        self.plce = plce
        self.rhs = 0
        self.anchor = (0, 0)
        self.explicit_comparisons = 0
        self.reuse_hits = 0
        self.extension_calls = 0
        self.shadow = shadow and len(x) - 1 <= shadow_limit
        self.frontier = [] if trace else None

    def counters(self) -> LceCounters:
        return LceCounters(self.explicit_comparisons, self.reuse_hits, self.extension_calls)

    def stored(self, u: int, v: int) -> int | None:
        """Exact LCE of an already fixed edge ``u < v``, or None if it is not an edge."""
        if self.next[u] == v:
            return self.nlce[u]
        if self.prev[v] == u:
            return self.plce[v]
        return None

    def _scan(self, l, r, k):
        x = self.x
        self.extension_calls += 1
        start = k
        while x[l + k] == x[r + k]:
            k += 1
        self.explicit_comparisons += k - start + 1
        if r + k > self.rhs:
            self.rhs = r + k
            self.anchor = (l, r)
        return k

    def query(self, l: int, r: int, m: int = 0) -> int:
        """Return lce(l, r), given that it is at least ``m``."""
        if not 1 <= l < r:
            raise InvalidQuery(f"LCE query needs 1 <= l < r, got ({l}, {r})")
        if self.shadow:
            truth = lce_ranks(self.x, l, r)
            if m > truth:
                raise ContractViolation(f"lower bound {m} exceeds lce({l}, {r}) = {truth}")
        rhs = self.rhs
        if r + m < rhs:
            a, b = self.anchor
            if l >= b:
                d = b - a
                known = self.stored(l - d, r - d)
                if known is not None:
                    if known < rhs - r:
                        self.reuse_hits += 1
                        result = known
                    else:
                        result = self._scan(l, r, rhs - r)
                else:
                    result = self._scan(l, r, m)
            else:
                result = self._scan(l, r, m)
        else:
            result = self._scan(l, r, m)
        if self.shadow and result != truth:
            raise ContractViolation(f"lce({l}, {r}) returned {result}, scan gives {truth}")
        if self.frontier is not None:
            self.frontier.append(self.rhs)
        return result
