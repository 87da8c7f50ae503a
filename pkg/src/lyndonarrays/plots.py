"""Figures for benchmark reports, written next to the delimited output."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

from matplotlib.figure import Figure

STYLE = {"NSS": dict(marker="o", linestyle="-"), "NGS": dict(marker="s", linestyle="--")}


def _series(records, value):
    lines = defaultdict(list)
    for rec in records:
        lines[(rec.family, rec.algorithm)].append((rec.n, value(rec)))
    return {k: sorted(v) for k, v in lines.items()}


def _save(fig: Figure, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    return path


def plot_core_times(records, path) -> Path:
    fig = Figure(figsize=(7, 4.5))
    ax = fig.add_subplot()
    for (family, algo), pts in sorted(_series(records, lambda r: r.elapsed_core * 1e6).items()):
        ns, ts = zip(*pts)
        ax.plot(ns, ts, label=f"{algo} {family}", **STYLE.get(algo, {}))
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("core construction time (µs)")
    ax.legend(fontsize=7)
    ax.grid(True, which="both", alpha=0.3)
    return _save(fig, path)


def plot_counters_per_symbol(records, path) -> Path:
    """Each counter divided by n; flat lines mean linear growth."""
    fig = Figure(figsize=(10, 3.6))
    names = ("explicit_comparisons", "reuse_hits", "extension_calls")
    axes = fig.subplots(1, len(names), sharex=True)
    for ax, name in zip(axes, names):
        series = _series(records, lambda r, name=name: getattr(r.counters, name) / max(r.n, 1))
        for (family, algo), pts in sorted(series.items()):
            ns, vs = zip(*pts)
            ax.plot(ns, vs, label=f"{algo} {family}", **STYLE.get(algo, {}))
        ax.set_xscale("log")
        ax.set_title(name.replace("_", " ") + " / n", fontsize=9)
        ax.grid(True, alpha=0.3)
    axes[0].legend(fontsize=6)
    return _save(fig, path)


def plot_ratios(records, path) -> Path:
    per_input = defaultdict(dict)
    for rec in records:
        per_input[(rec.family, rec.n)][rec.algorithm] = rec.elapsed_core
    fig = Figure(figsize=(7, 4))
    ax = fig.add_subplot()
    by_family = defaultdict(list)
    for (family, n), v in per_input.items():
        if "NSS" in v and "NGS" in v and v["NSS"] > 0:
            by_family[family].append((n, v["NGS"] / v["NSS"]))
    for family, pts in sorted(by_family.items()):
        ns, rs = zip(*sorted(pts))
        ax.plot(ns, rs, marker="o", label=family)
    ax.axhline(1.0, color="k", linewidth=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("NGS / NSS core time")
    ax.legend(fontsize=7)
    ax.grid(True, alpha=0.3)
    return _save(fig, path)


def write_figures(records, directory, stem="bench") -> list[Path]:
    directory = Path(directory)
    return [
        plot_core_times(records, directory / f"{stem}_core_times.png"),
        plot_counters_per_symbol(records, directory / f"{stem}_counters.png"),
        plot_ratios(records, directory / f"{stem}_ratios.png"),
    ]
