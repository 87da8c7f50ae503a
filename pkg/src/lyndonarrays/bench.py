"""Timing and counter benchmarks for the two builders.

Timing policy: ``time.perf_counter_ns``, one discarded warm-up build per
algorithm, then ``reps`` timed builds with NSS and NGS interleaved, garbage
collection paused while timing; the reported time is the median (or mean) of
the reps.  Framing the input and converting it to ranks is not timed.  The
core phase is the nearest-suffix loop; the recovery phase turns its output
into the Lyndon or inverse Lyndon array.

Counters are deterministic per input, so they are taken from the first timed
run and checked to be identical on the others.
"""

from __future__ import annotations

import csv
import gc
import io
import json
import platform
import statistics
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .edges import nearest_greater_edges
from .errors import InvalidInput, LinearityViolation, VerificationFailure
from .gen import GENERATOR_NAME, Family, FamilySpec, generate
from .lce import LceCounters
from .ngs import inverse_ranks, recover_lambda_inv
from .nss import lyndon_from_next, standard_ranks
from .text import SentinelMode, as_symbols, frame

ALGORITHMS = ("NSS", "NGS")
CSV_COLUMNS = (
    "input_id", "family", "algorithm", "n", "core_us", "recovery_us",
    "explicit_comparisons", "reuse_hits", "extension_calls", "repetitions", "statistic",
)
SPOT_CHECK_SAMPLES = 64


@dataclass(frozen=True)
class BenchRecord:
    input_id: str
    family: str
    algorithm: str
    n: int
    elapsed_core: float  # seconds
    elapsed_recovery: float
    counters: LceCounters
    repetitions: int
    statistic: str = "median"
    spec: FamilySpec | None = field(default=None, compare=False)

    def row(self) -> dict:
        return {
            "input_id": self.input_id,
            "family": self.family,
            "algorithm": self.algorithm,
            "n": self.n,
            "core_us": round(self.elapsed_core * 1e6, 1),
            "recovery_us": round(self.elapsed_recovery * 1e6, 1),
            **self.counters.as_dict(),
            "repetitions": self.repetitions,
            "statistic": self.statistic,
        }


@dataclass(frozen=True)
class RatioSummary:
    mean: float
    median: float
    min: float
    max: float
    count: int

    def describe(self) -> str:
        return (f"NGS/NSS core-time ratio over {self.count} inputs: mean {self.mean:.4f}, "
                f"median {self.median:.4f}, range [{self.min:.4f}, {self.max:.4f}]")


@dataclass
class BenchReport:
    records: list[BenchRecord]
    ratios: RatioSummary | None
    metadata: dict


@dataclass(frozen=True)
class BenchInput:
    input_id: str
    family: str
    symbols: bytes | tuple
    spec: FamilySpec | None = None


def load_input(item, int_width: int | None = None) -> BenchInput:
    """A FamilySpec, a path to a raw file, or an already loaded BenchInput."""
    if isinstance(item, BenchInput):
        return item
    if isinstance(item, FamilySpec):
        return BenchInput(f"{item.label}:n={item.n}", item.label, generate(item), item)
    path = Path(item)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise OSError(f"cannot read benchmark input {path}: {exc}") from exc
    return BenchInput(path.name, path.name, decode_records(data, int_width))


def decode_records(data: bytes, int_width: int | None = None):
    """Raw bytes, or fixed-width little-endian unsigned integers when ``int_width`` is set."""
    if not int_width:
        return data
    dtypes = {1: "<u1", 2: "<u2", 4: "<u4", 8: "<u8"}
    if int_width not in dtypes:
        raise InvalidInput("integer record width must be 1, 2, 4 or 8 bytes")
    if len(data) % int_width:
        raise InvalidInput(f"file length {len(data)} is not a multiple of {int_width}")
    return tuple(np.frombuffer(data, dtype=dtypes[int_width]).tolist())


def spot_check_inverse(x, nxt, nlce, lam_inv, samples=SPOT_CHECK_SAMPLES, seed=0):
    """Check the recovery identity everywhere and exact edge LCEs at sampled positions.

    ``x``, ``nxt`` and ``nlce`` are the builder's 1-based arrays.
    """
    N = len(x) - 1
    for i, lam in enumerate(lam_inv, start=1):
        if lam != nxt[i] - i + nlce[i]:
            raise VerificationFailure(f"recovery identity fails at i={i}")
    rng = np.random.default_rng(seed)
    for i in rng.integers(2, max(N, 3), size=min(samples, N)).tolist():
        i = min(i, N)
        j, c = nxt[i], nlce[i]
        if j > N:
            continue
        if x[i : i + c] != x[j : j + c] or not x[j + c] > x[i + c]:
            raise VerificationFailure(f"stored nlce[{i}]={c} is not the edge LCE to {j}")


def _time_once(algorithm, x):
    t0 = time.perf_counter_ns()
    nxt, prv, nlce, plce, engine = nearest_greater_edges(x)
    t1 = time.perf_counter_ns()
    N = len(x) - 1
    if algorithm == "NSS":
        lam = lyndon_from_next(nxt[1 : N + 1])
    else:
        lam = recover_lambda_inv(nxt[1 : N + 1], nlce[1 : N + 1])
    t2 = time.perf_counter_ns()
    return (t1 - t0) / 1e9, (t2 - t1) / 1e9, engine.counters(), (nxt, nlce, lam)


def bench_input(inp: BenchInput, reps: int = 3, warmup: bool = True,
                statistic: str = "median") -> list[BenchRecord]:
    if reps < 1:
        raise InvalidInput("reps must be at least 1")
    reduce = {"median": statistics.median, "mean": statistics.fmean}[statistic]
    xs = {
        "NSS": standard_ranks(frame(inp.symbols, mode=SentinelMode.STANDARD)),
        "NGS": inverse_ranks(frame(inp.symbols, mode=SentinelMode.INVERSE)),
    }
    core = defaultdict(list)
    recovery = defaultdict(list)
    counters = {}
    if warmup:
        for algo in ALGORITHMS:
            _time_once(algo, xs[algo])
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for rep in range(reps):
            for algo in ALGORITHMS:
                tc, tr, ctr, arrays = _time_once(algo, xs[algo])
                core[algo].append(tc)
                recovery[algo].append(tr)
                if rep == 0:
                    counters[algo] = ctr
                    if algo == "NGS":
                        spot_check_inverse(xs[algo], *arrays)
                elif ctr != counters[algo]:
                    raise VerificationFailure(f"{algo} counters changed between reps on {inp.input_id}")
                del arrays
    finally:
        if gc_was_enabled:
            gc.enable()
    return [
        BenchRecord(inp.input_id, inp.family, algo, len(inp.symbols), reduce(core[algo]),
                    reduce(recovery[algo]), counters[algo], reps, statistic, inp.spec)
        for algo in ALGORITHMS
    ]


def summarize_ratios(records, min_n: int = 0) -> RatioSummary | None:
    """NGS/NSS core-time ratios per input, restricted to inputs with n >= min_n."""
    by_input = defaultdict(dict)
    for rec in records:
        if rec.n >= min_n:
            by_input[rec.input_id][rec.algorithm] = rec.elapsed_core
    ratios = [v["NGS"] / v["NSS"] for v in by_input.values() if "NGS" in v and "NSS" in v and v["NSS"] > 0]
    if not ratios:
        return None
    return RatioSummary(statistics.fmean(ratios), statistics.median(ratios),
                        min(ratios), max(ratios), len(ratios))


def run_suite(inputs, reps: int = 3, warmup: bool = True, statistic: str = "median",
              ratio_min_n: int = 50_000, int_width: int | None = None, progress=None) -> BenchReport:
    """Benchmark both builders on every input; return records plus the ratio summary."""
    records = []
    for item in inputs:
        inp = load_input(item, int_width)
        if progress:
            progress(inp)
        records.extend(bench_input(inp, reps, warmup, statistic))
    metadata = {
        "clock": "time.perf_counter_ns",
        "warmup_runs": 1 if warmup else 0,
        "repetitions": reps,
        "statistic": statistic,
        "gc": "disabled while timing",
        "ratio_min_n": ratio_min_n,
        "generator": GENERATOR_NAME,
        "python": platform.python_version(),
        "machine": platform.machine(),
    }
    return BenchReport(records, summarize_ratios(records, ratio_min_n), metadata)


def counter_records(inputs, algorithms=ALGORITHMS, trace=False) -> list[BenchRecord]:
    """Counter-only runs (one build per algorithm, no timing statistics)."""
    out = []
    for item in inputs:
        inp = load_input(item)
        for algo in algorithms:
            mode = SentinelMode.STANDARD if algo == "NSS" else SentinelMode.INVERSE
            t = frame(inp.symbols, mode=mode)
            x = standard_ranks(t) if algo == "NSS" else inverse_ranks(t)
            t0 = time.perf_counter()
            *_, engine = nearest_greater_edges(x, trace=trace)
            elapsed = time.perf_counter() - t0
            if trace:
                frontier = np.asarray(engine.frontier)
                if frontier.size and (np.any(np.diff(frontier) < 0) or frontier.max() > len(x) - 1):
                    raise VerificationFailure(f"{algo} frontier regressed on {inp.input_id}")
            out.append(BenchRecord(inp.input_id, inp.family, algo, len(inp.symbols),
                                   elapsed, 0.0, engine.counters(), 1, "single", inp.spec))
    return out


@dataclass
class LinearityReport:
    rows: list[dict]
    tolerance: float

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def render(self) -> str:
        lines = [f"{'family':<42} {'algo':<4} {'counter':<21} {'n1':>9} {'n2':>9} "
                 f"{'value1':>11} {'value2':>11} {'factor':>7} {'expected':>8}  ok"]
        for r in self.rows:
            lines.append(
                f"{r['family']:<42} {r['algorithm']:<4} {r['counter']:<21} {r['n1']:>9} {r['n2']:>9} "
                f"{r['value1']:>11} {r['value2']:>11} {r['factor']:>7.3f} {r['expected']:>8.3f}  "
                f"{'yes' if r['ok'] else 'NO'}")
        return "\n".join(lines)


LINEARITY_COUNTERS = ("explicit_comparisons", "extension_calls")


def linearity_check(small, large, tolerance: float = 0.2, raise_on_failure: bool = True) -> LinearityReport:
    """Counter growth between two sizes must lie within ``(1 ± tolerance) * n2/n1``.

    Records are paired by (family, algorithm); every pair needs n2/n1 >= 5.
    """
    first = {(r.family, r.algorithm): r for r in small}
    rows = []
    for rec in large:
        key = (rec.family, rec.algorithm)
        if key not in first:
            continue
        lo = first[key]
        if lo.n >= rec.n:
            raise InvalidInput(f"{rec.family}: need n1 < n2, got {lo.n} and {rec.n}")
        expected = rec.n / lo.n
        if expected < 5:
            raise InvalidInput(f"{rec.family}: size ratio {expected:.2f} is below 5")
        for name in LINEARITY_COUNTERS:
            v1, v2 = getattr(lo.counters, name), getattr(rec.counters, name)
            factor = v2 / v1 if v1 else float("inf")
            rows.append({
                "family": rec.family, "algorithm": rec.algorithm, "counter": name,
                "n1": lo.n, "n2": rec.n, "value1": v1, "value2": v2, "factor": factor,
                "expected": expected,
                "ok": (1 - tolerance) * expected <= factor <= (1 + tolerance) * expected,
            })
    if not rows:
        raise InvalidInput("no (family, algorithm) pair appears at both sizes")
    report = LinearityReport(rows, tolerance)
    if raise_on_failure and not report.ok:
        bad = next(r for r in rows if not r["ok"])
        raise LinearityViolation(
            f"{bad['algorithm']} {bad['counter']} on {bad['family']} grew {bad['factor']:.3f}x "
            f"for a {bad['expected']:.2f}x size increase", report)
    return report


# -- rendering ---------------------------------------------------------------

def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def read_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def to_json_lines(records, metadata=None) -> str:
    lines = []
    if metadata is not None:
        lines.append(json.dumps({"metadata": metadata}))
    lines.extend(json.dumps(rec.row()) for rec in records)
    return "\n".join(lines) + "\n"


def _aligned(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = []
    for idx, row in enumerate(cells):
        out.append("  ".join(c.ljust(w) if k == 0 else c.rjust(w) for k, (c, w) in enumerate(zip(row, widths))))
        if idx == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def to_table(records) -> str:
    rows = [[r[c] for c in CSV_COLUMNS[:-1]] for r in (rec.row() for rec in records)]
    return _aligned(CSV_COLUMNS[:-1], rows)


def random_table(records) -> str:
    """Rows are sizes; each alphabet size contributes an NSS and an NGS column (microseconds)."""
    cells = {}
    sigmas = set()
    for rec in records:
        if rec.spec is None or rec.spec.family is not Family.RANDOM:
            continue
        sigmas.add(rec.spec.sigma)
        cells[(rec.n, rec.spec.sigma, rec.algorithm)] = rec.elapsed_core * 1e6
    sigmas = sorted(sigmas)
    header = ["n"] + [f"{algo} s={s}" for s in sigmas for algo in ALGORITHMS]
    rows = []
    for n in sorted({k[0] for k in cells}):
        row = [n]
        for s in sigmas:
            for algo in ALGORITHMS:
                v = cells.get((n, s, algo))
                row.append("-" if v is None else f"{v:,.1f}")
        rows.append(row)
    return _aligned(header, rows)


def ratio_table(records) -> str:
    """One row per input: n, both core times (microseconds) and their ratio."""
    by_input = defaultdict(dict)
    sizes = {}
    for rec in records:
        by_input[rec.input_id][rec.algorithm] = rec.elapsed_core * 1e6
        sizes[rec.input_id] = rec.n
    rows = []
    for key, v in by_input.items():
        if "NSS" in v and "NGS" in v:
            rows.append([key, sizes[key], f"{v['NSS']:,.1f}", f"{v['NGS']:,.1f}", f"{v['NGS'] / v['NSS']:.4f}"])
    return _aligned(["input", "n", "NSS", "NGS", "ratio"], rows)


def _family_title(rec) -> str:
    if rec.spec is not None and rec.spec.family is Family.BORDER_HEAVY:
        pct = rec.spec.border_fraction * 100
        pct = int(pct) if pct == int(pct) else float(pct)
        return f"{pct}% border"
    return rec.family


def counters_table(records) -> str:
    """Per family and size: comparisons, reuse hits and extension calls for both builders."""
    grid = defaultdict(dict)
    for rec in records:
        grid[(_family_title(rec), rec.n)][rec.algorithm] = rec.counters
    header = ["family", "n", "NSS cmp", "NGS cmp", "NSS reuse", "NGS reuse", "NSS ext", "NGS ext"]
    rows = []
    for (fam, n), c in sorted(grid.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if "NSS" not in c or "NGS" not in c:
            continue
        rows.append([fam, f"{n:,}",
                     f"{c['NSS'].explicit_comparisons:,}", f"{c['NGS'].explicit_comparisons:,}",
                     f"{c['NSS'].reuse_hits:,}", f"{c['NGS'].reuse_hits:,}",
                     f"{c['NSS'].extension_calls:,}", f"{c['NGS'].extension_calls:,}"])
    return _aligned(header, rows)


def parse_sizes(text: str) -> list[int]:
    """``"1000,5000"`` or a decade range ``"1e3..1e6"`` (mantissas 1 and 5)."""
    text = text.strip()
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(float(lo_s)), int(float(hi_s))
        if lo < 1 or hi < lo:
            raise InvalidInput(f"bad size range {text!r}")
        sizes = []
        base = 1
        while base <= hi:
            for mant in (1, 5):
                v = mant * base
                if lo <= v <= hi:
                    sizes.append(v)
            base *= 10
        return sizes
    try:
        sizes = [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InvalidInput(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise InvalidInput(f"bad size list {text!r}")
    return sizes


def border_specs(sizes, betas=(Fraction(1, 4), Fraction(2, 5)), sigma=2, seed=0):
    return [FamilySpec(Family.BORDER_HEAVY, n, sigma, seed, beta) for beta in betas for n in sizes]


def random_specs(sizes, sigmas=(2, 4, 26), seed=0):
    return [FamilySpec(Family.RANDOM, n, s, seed) for s in sigmas for n in sizes]


def structured_specs(sizes):
    return [FamilySpec(f, n) for f in (Family.FIBONACCI, Family.THUE_MORSE, Family.RUN_RICH) for n in sizes]


def inline_input(word, name="inline") -> BenchInput:
    syms = as_symbols(word)
    return BenchInput(name, name, syms)
