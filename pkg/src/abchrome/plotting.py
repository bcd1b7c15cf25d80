"""Matplotlib renderings of coloured graphs and batch summaries (written to files, Agg backend)."""

from __future__ import annotations

import math
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .coloring import Coloring  # noqa: E402
from .families import NamedGraph  # noqa: E402

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def _layout(named: NamedGraph) -> dict[int, tuple[float, float]]:
    """Two concentric rings when labels split into two rims, otherwise one circle."""
    names = named.names
    n = len(names)
    rings: dict[str, list[int]] = {}
    for v, label in enumerate(names):
        if label[0] in "xy" and label[1:].isdigit():
            rings.setdefault(label[0], []).append(v)
        elif label.startswith("v_") and "^" in label:
            rings.setdefault(label.rsplit("^", 1)[1], []).append(v)
    pos = {}
    if len(rings) == 2 and sum(len(r) for r in rings.values()) == n:
        for radius, key in zip((1.0, 0.6), sorted(rings)):
            ring = rings[key]
            for t, v in enumerate(ring):
                angle = math.pi / 2 - 2 * math.pi * t / len(ring)
                pos[v] = (radius * math.cos(angle), radius * math.sin(angle))
        return pos
    for v in range(n):
        angle = math.pi / 2 - 2 * math.pi * v / n
        pos[v] = (math.cos(angle), math.sin(angle))
    return pos


def draw_coloring(named: NamedGraph, c: Coloring, path, anchors=(), title: str | None = None) -> Path:
    """Draw ``named`` with vertex fill by colour; anchors get a thick black outline."""
    g = named.graph
    pos = _layout(named)
    size = 4 + g.n / 10
    fig, ax = plt.subplots(figsize=(size, size))
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="#999999", linewidth=1, zorder=1)
    anchors = set(anchors)
    for v in range(g.n):
        x, y = pos[v]
        fill = PALETTE[(c[v] - 1) % len(PALETTE)]
        ax.scatter([x], [y], s=220, color=fill, edgecolors="black", linewidths=2.5 if v in anchors else 0.5, zorder=2)
        ax.annotate(str(c[v]), (x, y), ha="center", va="center", fontsize=7, color="white", zorder=3)
        if g.n <= 60:
            ax.annotate(named.names[v], (x * 1.09, y * 1.09), ha="center", va="center", fontsize=6)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_batch_summary(records: list[dict], path, target: str = "Ab") -> Path:
    """Bar chart of how often each value of ``target`` occurs, split by vertex count."""
    counts = Counter((r["n"], r.get(target)) for r in records if r.get("status") == "ok" and r.get(target) is not None)
    ns = sorted({n for n, _ in counts})
    values = sorted({val for _, val in counts})
    fig, ax = plt.subplots(figsize=(6, 4))
    width = 0.8 / max(len(values), 1)
    for i, val in enumerate(values):
        xs = [t + i * width for t in range(len(ns))]
        ax.bar(xs, [counts[(n, val)] for n in ns], width=width, label=f"{target} = {val}", color=PALETTE[i % len(PALETTE)])
    ax.set_xticks([t + width * (len(values) - 1) / 2 for t in range(len(ns))])
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    if values:
        ax.legend()
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
