"""Matplotlib renderings written next to the text reports.

Uses the object-oriented ``Figure`` API so no GUI backend is touched.
"""

from __future__ import annotations

from pathlib import Path

from matplotlib.figure import Figure

from .betti import BettiTable
from .report import RunReport

COLORS = {"pass": "#4c9a4c", "fail": "#c0392b", "skip": "#b0b0b0"}


def _save(fig: Figure, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    return path


def plot_betti_diagram(table: BettiTable, path, title: str | None = None) -> Path:
    """Graded Betti diagram: column ``q``, row ``j - q``, cell ``beta_{q,j}``."""
    if not table.graded:
        return plot_betti_totals({"betti": table}, path, title)
    qs = [q for q, _ in table.graded]
    shifts = [j - q for q, j in table.graded]
    lo, hi = min(shifts), max(shifts)
    ncols, nrows = max(qs) + 1, hi - lo + 1
    grid = [[0] * ncols for _ in range(nrows)]
    for (q, j), b in table.graded.items():
        grid[j - q - lo][q] = b

    fig = Figure(figsize=(1.0 + 0.7 * ncols, 1.0 + 0.5 * nrows))
    ax = fig.add_subplot()
    ax.imshow(grid, cmap="Blues", aspect="auto", vmin=0)
    for row in range(nrows):
        for q in range(ncols):
            b = grid[row][q]
            ax.text(q, row, str(b) if b else ".", ha="center", va="center")
    ax.set_xticks(range(ncols))
    ax.set_yticks(range(nrows), [str(lo + i) for i in range(nrows)])
    ax.set_xlabel("homological degree q")
    ax.set_ylabel("j - q")
    ax.set_title(title or "graded Betti numbers")
    return _save(fig, path)


def plot_betti_totals(tables: dict[str, BettiTable], path, title: str | None = None) -> Path:
    """Side-by-side bars of total Betti numbers, one series per method."""
    fig = Figure(figsize=(5, 3))
    ax = fig.add_subplot()
    width = 0.8 / max(len(tables), 1)
    for k, (label, table) in enumerate(tables.items()):
        xs = [q + k * width for q in range(len(table.total))]
        ax.bar(xs, table.total, width=width, label=label)
    ax.set_xlabel("q")
    ax.set_ylabel("beta_q")
    if len(tables) > 1:
        ax.legend()
    ax.set_title(title or "total Betti numbers")
    return _save(fig, path)


def plot_run_summary(report: RunReport, path, title: str | None = None) -> Path:
    """Stacked pass / fail / skip counts per check."""
    counts = report.counts()
    names = list(counts)
    fig = Figure(figsize=(6, 0.6 + 0.45 * max(len(names), 1)))
    ax = fig.add_subplot()
    left = [0] * len(names)
    for verdict in ("pass", "fail", "skip"):
        vals = [counts[n][verdict] for n in names]
        ax.barh(names, vals, left=left, color=COLORS[verdict], label=verdict)
        left = [a + b for a, b in zip(left, vals)]
    ax.invert_yaxis()
    ax.set_xlabel("ideals")
    ax.legend(loc="lower right", fontsize="small")
    s = report.summary
    ax.set_title(title or f"checked {s['checked']}, failed {s['failed']}, skipped {s['skipped']}")
    return _save(fig, path)
