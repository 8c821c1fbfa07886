"""Figures for CLI reports, rendered off-screen to PNG files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-identical
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path.name


def degree_bars(dims, title: str, path: Path, ylabel: str = "dimension"):
    """Bar chart of ``[[degree, value], ...]`` pairs."""
    degrees = [int(n) for n, _ in dims]
    values = [v for _, v in dims]
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(degrees, values, color="#4c72b0")
    ax.set_xlabel("degree")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.set_xticks(degrees)
    fig.tight_layout()
    return _save(fig, path)


def valuation_plot(entries: list, p: int, path: Path):
    """Values ht/h per nilradical root against the window (1/(p-1), 1]."""
    from fractions import Fraction

    xs = list(range(1, len(entries) + 1))
    ys = [float(Fraction(e["value"])) for e in entries]
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.scatter(xs, ys, color="#55a868", zorder=3)
    ax.axhline(1.0, color="grey", linestyle="--", linewidth=1)
    ax.axhline(1.0 / (p - 1), color="#c44e52", linestyle=":", linewidth=1)
    ax.set_xlabel("root")
    ax.set_ylabel("ht / h")
    ax.set_ylim(0, 1.1)
    ax.set_title(f"valuation window, p = {p}")
    fig.tight_layout()
    return _save(fig, path)


def support_plot(supports: list, path: Path):
    """Number of support points and their degrees for each Levi subset."""
    fig, ax = plt.subplots(figsize=(6, 3))
    labels = []
    for x, s in enumerate(supports):
        labels.append("{" + ",".join(map(str, s["J"])) + "}")
        for pt in s["points"] or []:
            for n in pt["degrees"]:
                ax.scatter([x], [n], color="#8172b2", s=18)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, fontsize=7)
    ax.set_ylabel("degree n")
    ax.set_title("support points by J")
    fig.tight_layout()
    return _save(fig, path)
