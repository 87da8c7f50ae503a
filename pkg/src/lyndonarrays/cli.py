"""Command-line front end: build, verify, gen, bench, compare.

Exit status: 0 success, 1 verification or linearity failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import bench, gen, plots
from .errors import LinearityViolation, LyndonArrayError, VerificationFailure
from .ngs import build_inverse
from .nss import build_standard
from .oracle import maximal_factor
from .rules import compare_pairs, compatibility_counterexample, compatibility_violations
from .text import AlphabetOrder, SentinelMode, as_symbols, frame
from .verify import DEFAULT_MAX_N, DEFAULT_MAX_WORDS, verify_exhaustive, verify_word

OUTDIR_ENV = "LYNDONARRAYS_OUTDIR"
RESERVED_BYTES = (0x00, 0x01)


class UsageError(Exception):
    pass


def default_outdir() -> Path:
    return Path(os.environ.get(OUTDIR_ENV, "."))


# -- input -------------------------------------------------------------------

def add_input_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--inline", metavar="TEXT", help="word given on the command line (bytes, natural order)")
    src.add_argument("--file", type=Path, help="raw input file")
    p.add_argument("--int-width", type=int, choices=(1, 2, 4, 8),
                   help="read --file as little-endian unsigned integers of this many bytes")
    p.add_argument("--order", metavar="SYMBOLS",
                   help="explicit alphabet order for --inline, smallest first (e.g. abn)")
    p.add_argument("--materialized-sentinels", action="store_true",
                   help="reject byte inputs containing 0x00 or 0x01, the reserved sentinel bytes")


def read_word(args):
    if args.inline is not None:
        if args.int_width:
            raise UsageError("--int-width applies to --file input only")
        word = as_symbols(args.inline)
    else:
        try:
            data = args.file.read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None
        word = bench.decode_records(data, args.int_width)
    if args.materialized_sentinels and isinstance(word, bytes):
        bad = sorted({b for b in RESERVED_BYTES if b in word})
        if bad:
            raise UsageError(f"input contains reserved sentinel byte(s) {', '.join(f'0x{b:02x}' for b in bad)}")
    order = AlphabetOrder.from_symbols(args.order) if args.order else None
    return word, order


def emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
        print(f"wrote {out}", file=sys.stderr)


# -- build -------------------------------------------------------------------

def symbol_label(t, i) -> str:
    s = t.raw_at(i)
    if isinstance(s, str):
        return s
    if isinstance(t.interior, bytes) and 32 < s < 127 and chr(s) not in "#$":
        return chr(s)
    return str(s)


def build_columns(word, order, mode) -> tuple[list, dict[str, list]]:
    """Framed positions, symbols and every array requested by ``mode``."""
    columns = {}
    text = None
    if mode in ("standard", "both"):
        std = build_standard(frame(word, order, SentinelMode.STANDARD))
        text = std.text
        columns.update({"next": std.next, "prev": std.prev, "nlce": std.nlce,
                        "plce": std.plce, "lambda": std.lam})
    if mode in ("inverse", "both"):
        inv = build_inverse(frame(word, order, SentinelMode.INVERSE))
        text = text or inv.text
        columns.update({"lambda_inv": inv.lam_inv, "next_inv": inv.next_inv,
                        "prev_inv": inv.prev_inv, "nlce_inv": inv.nlce, "plce_inv": inv.plce})
    symbols = [symbol_label(text, i) for i in range(1, text.framed_len + 1)]
    return symbols, columns


def format_arrays(symbols, columns, fmt) -> str:
    N = len(symbols)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["framed_pos", "symbol", *columns])
        for k in range(N):
            w.writerow([k + 1, symbols[k], *(col[k] for col in columns.values())])
        return buf.getvalue()
    if fmt == "json-lines":
        lines = [json.dumps({"positions": "framed, 1-based; 1 is '#', N is '$'", "N": N, "x": symbols})]
        lines += [json.dumps({"array": name, "values": vals}) for name, vals in columns.items()]
        return "\n".join(lines) + "\n"
    rows = [["i", *range(1, N + 1)], ["x", *symbols]] + [[name, *vals] for name, vals in columns.items()]
    widths = [max(len(str(r[k])) for r in rows) for k in range(N + 1)]
    out = []
    for idx, r in enumerate(rows):
        out.append(" ".join(str(c).rjust(w) if k else str(c).ljust(w) for k, (c, w) in enumerate(zip(r, widths))))
        if idx == 1:
            out.append("-" * len(out[-1]))
    return "\n".join(out) + "\n"


def parse_array_csv(text: str) -> dict[str, list]:
    """Inverse of the CSV build output: column name -> values (ints where numeric)."""
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    cols = {h: [r[k] for r in body] for k, h in enumerate(header)}
    return {h: (v if h == "symbol" else [int(s) for s in v]) for h, v in cols.items()}


def cmd_build(args) -> int:
    word, order = read_word(args)
    symbols, columns = build_columns(word, order, args.mode)
    emit(format_arrays(symbols, columns, args.format), args.out)
    return 0


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        if args.exhaustive:
            sigma, n_max = args.exhaustive
            stats = verify_exhaustive(sigma, n_max, max_words=args.max_words)
            print(f"exhaustive sigma={sigma}, n<={n_max}: {stats.words} words, "
                  f"{stats.positions} framed positions: all checks passed")
        else:
            word, order = read_word(args)
            stats = verify_word(word, order, max_n=args.max_n)
            print(f"{len(word)} symbols: oracle equivalence, identities and suffix rules passed")
            print(f"suffix rules decided {stats.pairs_decided} of {stats.pairs_total} pairs")
            report_compatibility(word, order)
    except VerificationFailure as exc:
        print(f"FAILED: {exc}", file=sys.stderr)
        return 1
    for name, count in sorted(stats.checks.items()):
        print(f"  ok  {name} ({count})")
    return 0


def report_compatibility(word, order):
    bad = compatibility_violations(word, order)
    if not bad:
        print("inverse compatibility: no inverted pair in this word")
        return
    t = frame(word, order, SentinelMode.INVERSE)
    i, j = bad[0]
    print(f"inverse compatibility fails on {len(bad)} pair(s); first at framed ({i}, {j}): "
          f"factor {maximal_factor(t, i)!r} < {maximal_factor(t, j)!r} "
          f"but suffix {t.interior[i - 2:]!r} > {t.interior[j - 2:]!r}")
    if t.interior == b"babacbabaa":
        demo = compatibility_counterexample()
        print(f"known pair ({demo.i}, {demo.j}): {demo.factor_i!r} < {demo.factor_j!r}, "
              f"suffixes inverted")


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = gen.FamilySpec(args.family, args.n, args.sigma, args.seed,
                          Fraction(args.beta) if args.beta is not None else None)
    out = args.out or default_outdir() / f"{spec.family.value}_n{spec.n}_s{spec.seed}.bin"
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    data_path, desc_path = gen.write_family(spec, out)
    print(f"wrote {data_path} ({spec.n} bytes) and {desc_path}", file=sys.stderr)
    return 0


# -- bench -------------------------------------------------------------------

def _floats(text):
    return [Fraction(s) for s in text.split(",") if s.strip()]


def bench_inputs(args):
    sizes = bench.parse_sizes(args.sizes)
    if args.suite == "random":
        return bench.random_specs(sizes, [int(s) for s in args.sigmas.split(",")], args.seed)
    if args.suite == "structured":
        return bench.structured_specs(sizes)
    if args.suite == "border":
        return bench.border_specs(sizes, _floats(args.betas), args.sigma, args.seed)
    if not args.files:
        raise UsageError("--suite files needs at least one --files path")
    return list(args.files)


def cmd_bench(args) -> int:
    inputs = bench_inputs(args)
    progress = (lambda inp: print(f"bench {inp.input_id}", file=sys.stderr)) if args.verbose else None
    if args.counters_only:
        records = bench.counter_records(inputs, trace=args.trace_frontier)
        report = bench.BenchReport(records, None, {"mode": "counters only"})
    else:
        report = bench.run_suite(inputs, reps=args.reps, warmup=not args.no_warmup,
                                 statistic=args.statistic, ratio_min_n=args.ratio_min_n,
                                 int_width=args.int_width, progress=progress)
    records = report.records
    if args.format == "csv":
        text = bench.to_csv(records)
    elif args.format == "json-lines":
        text = bench.to_json_lines(records, report.metadata)
    else:
        parts = [bench.to_table(records)]
        if args.suite == "random" and not args.counters_only:
            parts.append("core construction time (us) on random words\n" + bench.random_table(records))
        if args.suite in ("files", "structured") and not args.counters_only:
            parts.append(bench.ratio_table(records))
        if args.suite == "border":
            parts.append("profiling counters\n" + bench.counters_table(records))
        if report.ratios is not None:
            parts.append(report.ratios.describe())
        elif not args.counters_only:
            parts.append(f"no input reached n >= {args.ratio_min_n} for the ratio summary")
        parts.append("timing: " + ", ".join(f"{k}={v}" for k, v in report.metadata.items()))
        text = "\n\n".join(parts) + "\n"
    emit(text, args.out)
    if args.figures:
        for path in plots.write_figures(records, args.figures, stem=f"bench_{args.suite}"):
            print(f"wrote {path}", file=sys.stderr)
    status = 0
    if args.suite == "border":
        sizes = sorted({r.n for r in records})
        if len(sizes) >= 2 and sizes[-1] / sizes[0] >= 5:
            small = [r for r in records if r.n == sizes[0]]
            large = [r for r in records if r.n == sizes[-1]]
            try:
                lin = bench.linearity_check(small, large)
            except LinearityViolation as exc:
                lin = exc.report
                status = 1
            print(lin.render(), file=sys.stderr)
    return status


# -- compare -----------------------------------------------------------------

def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in text.split(","):
        a, sep, b = item.strip().partition(":")
        if not sep:
            raise UsageError(f"pair {item!r} is not of the form i:j")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"pair {item!r} is not of the form i:j") from None
    return pairs


def cmd_compare(args) -> int:
    word, order = read_word(args)
    pairs = parse_pairs(args.pairs)
    verdicts = compare_pairs(word, pairs, order)
    rows = [{"i": i, "j": j, "outcome": v.outcome.value, "rule": v.rule} for (i, j), v in zip(pairs, verdicts)]
    if args.format == "json-lines":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["i", "j", "outcome", "rule"], lineterminator="\n")
        w.writeheader()
        w.writerows({**r, "rule": "" if r["rule"] is None else r["rule"]} for r in rows)
        text = buf.getvalue()
    else:
        text = "".join(f"({r['i']}, {r['j']}): {r['outcome']}"
                       + (f" (rule {r['rule']})" if r["rule"] else "") + "\n" for r in rows)
    emit(text, args.out)
    return 0


# -- parser ------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lyndonarrays",
                                description="Lyndon and inverse Lyndon arrays in linear time.")
    sub = p.add_subparsers(dest="command", required=True)
    formats = ("csv", "table", "json-lines")

    b = sub.add_parser("build", help="compute the arrays of one word")
    add_input_args(b)
    b.add_argument("--mode", choices=("standard", "inverse", "both"), default="both")
    b.add_argument("--format", choices=formats, default="table")
    b.add_argument("--out", type=Path)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="cross-check builders against brute-force oracles")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--inline", metavar="TEXT")
    src.add_argument("--file", type=Path)
    src.add_argument("--exhaustive", nargs=2, type=int, metavar=("SIGMA", "N_MAX"),
                     help="every word over SIGMA letters of length 1..N_MAX")
    v.add_argument("--int-width", type=int, choices=(1, 2, 4, 8))
    v.add_argument("--order")
    v.add_argument("--materialized-sentinels", action="store_true")
    v.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help="largest word accepted for brute force (default: %(default)s)")
    v.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS,
                   help="largest exhaustive sweep accepted (default: %(default)s)")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a seeded input family to a raw file plus descriptor")
    g.add_argument("--family", choices=[f.value for f in gen.Family] + ["border"], required=True)
    g.add_argument("--n", type=lambda s: int(float(s)), required=True)
    g.add_argument("--sigma", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--beta", help="border fraction for border-heavy inputs, e.g. 0.25 or 2/5")
    g.add_argument("--out", type=Path, help=f"output file (default: ${OUTDIR_ENV} or the current directory)")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("bench", help="time both builders and report counters")
    r.add_argument("--suite", choices=("random", "structured", "border", "files"), default="random")
    r.add_argument("--sizes", default="1e3..1e5", help="comma list or decade range like 1e3..1e6")
    r.add_argument("--sigmas", default="2,4,26")
    r.add_argument("--sigma", type=int, default=2, help="alphabet size for the border suite")
    r.add_argument("--betas", default="1/4,2/5")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--files", nargs="*", type=Path)
    r.add_argument("--int-width", type=int, choices=(1, 2, 4, 8))
    r.add_argument("--reps", type=int, default=3)
    r.add_argument("--statistic", choices=("median", "mean"), default="median")
    r.add_argument("--no-warmup", action="store_true")
    r.add_argument("--ratio-min-n", type=int, default=50_000)
    r.add_argument("--counters-only", action="store_true", help="one untimed-statistics build per algorithm")
    r.add_argument("--trace-frontier", action="store_true", help="check the LCE frontier never moves left")
    r.add_argument("--format", choices=formats, default="table")
    r.add_argument("--out", type=Path)
    r.add_argument("--figures", type=Path, help="directory for PNG figures")
    r.add_argument("--verbose", action="store_true")
    r.set_defaults(func=cmd_bench)

    c = sub.add_parser("compare", help="constant-time suffix comparisons for given pairs")
    add_input_args(c)
    c.add_argument("--pairs", required=True, help="framed position pairs, e.g. 4:6,6:8")
    c.add_argument("--format", choices=formats, default="table")
    c.add_argument("--out", type=Path)
    c.set_defaults(func=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family", None) == "border":
        args.family = gen.Family.BORDER_HEAVY.value
    try:
        return args.func(args)
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LinearityViolation, VerificationFailure) as exc:
        print(f"FAILED: {exc}", file=sys.stderr)
        return 1
    except LyndonArrayError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
