"""Executable invariants over built edge arrays.

Each ``check_*`` function raises :class:`VerificationFailure` with the first
counterexample it finds and returns the number of items it checked.  The
word-level predicates here (Duval-style scans, prefix-function borders) are
linear so the checks scale to a few thousand symbols; the brute-force
versions in :mod:`lyndonarrays.oracle` are what they are tested against.
"""

from __future__ import annotations

from .errors import VerificationFailure
from .ngs import InverseResult, build_inverse
from .nss import StandardResult, build_standard
from .oracle import lce_ranks
from .text import AlphabetOrder, SentinelMode, frame


def lyndon_scan(w) -> bool:
    i = 0
    for j in range(1, len(w)):
        if w[j] == w[i]:
            i += 1
        elif w[j] > w[i]:
            i = 0
        else:
            return False
    return i == 0


def inverse_lyndon_scan(w) -> bool:
    # Prefix of a Lyndon word under the reversed order.
    i = 0
    for j in range(1, len(w)):
        if w[j] == w[i]:
            i += 1
        elif w[j] < w[i]:
            i = 0
        else:
            return False
    return True


def border_length(w) -> int:
    """Longest proper border via the prefix function."""
    pi = [0] * len(w)
    k = 0
    for q in range(1, len(w)):
        while k and w[q] != w[k]:
            k = pi[k - 1]
        if w[q] == w[k]:
            k += 1
        pi[q] = k
    return pi[-1] if w else 0


def _fail(name, detail):
    raise VerificationFailure(f"{name}: {detail}")


def _edge_view(result):
    if isinstance(result, InverseResult):
        return result.next_inv, result.prev_inv, result.nlce, result.plce, False
    return result.next, result.prev, result.nlce, result.plce, True


def _ranks(result):
    # Builders compare negated ranks in standard mode; reproduce that view.
    return result.text.padded_ranks(negate=isinstance(result, StandardResult))


def check_lyndon_identity(std: StandardResult) -> int:
    for i, (nx, lam) in enumerate(zip(std.next, std.lam), start=1):
        if nx != i + lam:
            _fail("next = i + lambda", f"i={i}: next={nx}, lambda={lam}")
    return len(std.lam)


def check_recovery_identity(inv: InverseResult) -> int:
    for i, (nx, c, lam) in enumerate(zip(inv.next_inv, inv.nlce, inv.lam_inv), start=1):
        if lam != nx - i + c:
            _fail("lambda_inv recovery", f"i={i}: next_inv={nx}, nlce={c}, lambda_inv={lam}")
    return len(inv.lam_inv)


def check_border_identities(inv: InverseResult) -> int:
    """Maximal inverse factor z at i: next_inv = i + |z| - border(z) and nlce = border(z) = lce."""
    x = inv.text.padded_ranks()
    N = inv.text.framed_len
    for i in range(1, N + 1):
        lam = inv.lam_inv[i - 1]
        z = x[i : i + lam]
        if not inverse_lyndon_scan(z) or (i + lam <= N and inverse_lyndon_scan(x[i : i + lam + 1])):
            _fail("maximal inverse factor", f"i={i}: length {lam} is not the longest inverse Lyndon prefix")
        b = border_length(z)
        j = inv.next_inv[i - 1]
        if j != i + lam - b:
            _fail("next_inv = i + lambda_inv - border", f"i={i}: next_inv={j}, lambda_inv={lam}, border={b}")
        if inv.nlce[i - 1] != b or lce_ranks(x, i, j) != b:
            _fail("nlce = border = lce", f"i={i}: nlce={inv.nlce[i - 1]}, border={b}, lce={lce_ranks(x, i, j)}")
    return N


def check_prev_factors(result) -> int:
    """x[prev[i]..i-1] is Lyndon (standard) or inverse Lyndon (inverse) for i in 2..N."""
    _, prev, _, _, standard = _edge_view(result)
    x = result.text.padded_ranks()
    test = lyndon_scan if standard else inverse_lyndon_scan
    for i in range(2, len(prev) + 1):
        p = prev[i - 1]
        if not test(x[p:i]):
            kind = "Lyndon" if standard else "inverse Lyndon"
            _fail("prev factor", f"x[{p}..{i - 1}] is not {kind}")
    return len(prev) - 1


def edge_list(result) -> list[tuple[int, int]]:
    nxt, prv, _, _, _ = _edge_view(result)
    N = len(nxt)
    edges = {(i, j) for i, j in enumerate(nxt, start=1) if j <= N}
    edges |= {(j, i) for i, j in enumerate(prv, start=1) if j >= 1}
    return sorted(edges)


def find_crossing(edges) -> tuple | None:
    """First pair with l1 < l2 < r1 < r2, by a nesting sweep in O(E log E)."""
    stack = []
    for l, r in sorted(edges, key=lambda e: (e[0], -e[1])):
        while stack and stack[-1][1] <= l:
            stack.pop()
        if stack and stack[-1][0] < l and stack[-1][1] < r:
            return stack[-1], (l, r)
        stack.append((l, r))
    return None


def find_crossing_brute(edges) -> tuple | None:
    for a in edges:
        for b in edges:
            if a[0] < b[0] < a[1] < b[1]:
                return a, b
    return None


def check_non_crossing(result, brute=False) -> int:
    edges = edge_list(result)
    found = find_crossing_brute(edges) if brute else find_crossing(edges)
    if found:
        _fail("non-crossing edges", f"{found[0]} crosses {found[1]}")
    return len(edges)


def check_lce_cases(result) -> int:
    """Case analysis for every k with l = prev[k] and r = next[k] both real edges."""
    nxt, prv, nlce, plce, _ = _edge_view(result)
    x = result.text.padded_ranks()
    N = len(nxt)
    checked = 0
    for k in range(1, N + 1):
        l, r = prv[k - 1], nxt[k - 1]
        if l < 1 or r > N:
            continue
        lk, kr, lr = lce_ranks(x, l, k), lce_ranks(x, k, r), lce_ranks(x, l, r)
        if plce[k - 1] != lk or nlce[k - 1] != kr:
            _fail("stored edge lce", f"k={k}: plce={plce[k - 1]} vs {lk}, nlce={nlce[k - 1]} vs {kr}")
        if lk == kr:
            ok = lr >= kr and (prv[r - 1] == l or nxt[l - 1] == r)
        elif lk < kr:
            ok = lr == lk and prv[r - 1] == l
        else:
            ok = lr == kr and nxt[l - 1] == r
        if not ok:
            _fail("lce case analysis", f"(l,k,r)=({l},{k},{r}) lce(l,k)={lk} lce(k,r)={kr} lce(l,r)={lr}")
        checked += 1
    return checked


def check_mismatch_direction(result) -> int:
    """At j = next[i] the suffix at j wins at offset nlce[i]."""
    nxt, _, nlce, _, _ = _edge_view(result)
    x = _ranks(result)
    N = len(nxt)
    for i in range(1, N + 1):
        j = nxt[i - 1]
        if j > N:
            continue
        c = nlce[i - 1]
        if not x[j + c] > x[i + c]:
            _fail("mismatch direction", f"i={i}, j={j}, offset {c}")
    return N


def check_chain(result) -> int:
    """prev[r] lies on the prev-chain that starts at r - 1."""
    _, prv, _, _, _ = _edge_view(result)
    for r in range(2, len(prv) + 1):
        target, k = prv[r - 1], r - 1
        while k > target:
            k = prv[k - 1]
        if k != target:
            _fail("chain iteration", f"prev[{r}]={target} not on the chain from {r - 1}")
    return len(prv) - 1


def check_boundaries(result) -> int:
    nxt, prv, _, _, _ = _edge_view(result)
    N = len(nxt)
    if nxt[0] != N + 1 or nxt[-1] != N + 1 or prv[0] != 0 or prv[-1] != 1:
        _fail("boundary conventions", f"next[1]={nxt[0]}, next[N]={nxt[-1]}, prev[1]={prv[0]}, prev[N]={prv[-1]}")
    for i in range(2, N):
        if not prv[i - 1] < i < nxt[i - 1]:
            _fail("prev < i < next", f"i={i}")
    return N


STANDARD_CHECKS = {
    "boundaries": check_boundaries,
    "next = i + lambda": check_lyndon_identity,
    "prev factors are Lyndon": check_prev_factors,
    "non-crossing": check_non_crossing,
    "chain iteration": check_chain,
    "lce case analysis": check_lce_cases,
    "mismatch direction": check_mismatch_direction,
}

INVERSE_CHECKS = {
    "boundaries": check_boundaries,
    "lambda_inv recovery": check_recovery_identity,
    "border = nlce = lce": check_border_identities,
    "prev factors are inverse Lyndon": check_prev_factors,
    "non-crossing": check_non_crossing,
    "chain iteration": check_chain,
    "lce case analysis": check_lce_cases,
    "mismatch direction": check_mismatch_direction,
}


def run_identity_suite(word, order: AlphabetOrder | None = None) -> dict[str, int]:
    """Build both arrays for ``word`` and run every invariant; raise on the first failure."""
    std = build_standard(frame(word, order, SentinelMode.STANDARD))
    inv = build_inverse(frame(word, order, SentinelMode.INVERSE))
    counts = {}
    for name, check in STANDARD_CHECKS.items():
        counts[f"standard: {name}"] = check(std)
    for name, check in INVERSE_CHECKS.items():
        counts[f"inverse: {name}"] = check(inv)
    return counts
