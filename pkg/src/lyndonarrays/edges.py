"""The nearest-greater-suffix loop shared by both builders.

The loop finds, for every position, the nearest suffix to the right and to
the left that is *greater* under the rank sequence it is given.  The inverse
builder feeds the inverse-framed ranks directly.  The standard builder feeds
negated ranks, which turns "greater" into "smaller" without touching the loop,
so both arrays come out of one code path.

Reads stay inside ``x[1..N]``: position 1 holds the unique maximum, so the
chain walk stops there, and the unique terminal symbol at ``N`` makes every
mismatch between suffixes ``l < r`` occur at some ``r + m <= N``.
"""

from __future__ import annotations

from .lce import DEFAULT_SHADOW_LIMIT, SmartLce


def nearest_greater_edges(x, *, shadow=False, shadow_limit=DEFAULT_SHADOW_LIMIT, trace=False):
    """Return ``(next, prev, nlce, plce, engine)`` for the 1-based rank list ``x``.

    Arrays are 1-based with length ``N + 2``; ``next`` defaults to ``N + 1``
    and ``prev``/``nlce``/``plce`` to 0 where no edge exists.
    """
    N = len(x) - 1
    nxt = [N + 1] * (N + 2)
    prv = [0] * (N + 2)
    nlce = [0] * (N + 2)
    plce = [0] * (N + 2)
    engine = SmartLce(x, nxt, nlce, prv, plce, shadow=shadow,
                      shadow_limit=shadow_limit, trace=trace)
    query = engine.query
    for r in range(2, N + 1):
        l = r - 1
        m = query(l, r, 0)
        while x[l + m] < x[r + m]:
            nxt[l] = r
            nlce[l] = m
            p = plce[l]
            if m == p:
                m = query(prv[l], r, m)
            elif m > p:
                m = p
            l = prv[l]
        prv[r] = l
        plce[r] = m
    return nxt, prv, nlce, plce, engine
