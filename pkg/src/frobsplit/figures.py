"""Matplotlib rendering of the Hasse diagram to an image file.

Members are laid out in layers by dimension, the zero ideal at the bottom
and the unit ideal on top, with cover edges drawn between layers. Works
from the JSON document, so saved outputs can be re-rendered offline.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_hasse_figure(doc: dict, path: str, figsize=None) -> None:
    members = doc["members"]
    edges = doc["hasse"]
    # higher-dimensional members sit lower in the picture
    layers: dict = {}
    for i, m in enumerate(members):
        layers.setdefault(-m["dim"], []).append(i)
    ys = {}
    xs = {}
    for row, level in enumerate(sorted(layers)):
        indices = layers[level]
        indices.sort(key=lambda i: members[i]["gens"])
        for k, i in enumerate(indices):
            xs[i] = (k + 1) / (len(indices) + 1)
            ys[i] = row

    if figsize is None:
        figsize = (max(6.0, 2.2 * max(len(v) for v in layers.values())), 1.6 * len(layers) + 1)
    fig, ax = plt.subplots(figsize=figsize)
    for i, j in edges:
        ax.plot([xs[i], xs[j]], [ys[i], ys[j]], color="0.6", lw=1.2, zorder=1)
    for i, m in enumerate(members):
        label = "(" + (", ".join(m["gens"]) if m["gens"] else "0") + ")"
        face = "#f2f2f2" if m["is_trivial"] else ("#cfe8ff" if m["is_prime"] else "white")
        ax.text(
            xs[i],
            ys[i],
            label,
            ha="center",
            va="center",
            fontsize=9,
            family="monospace",
            zorder=2,
            bbox=dict(boxstyle="round,pad=0.35", fc=face, ec="0.3", lw=0.8),
        )
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.6, len(layers) - 0.4)
    ax.axis("off")
    title = f"compatible ideals, p={doc['p']}, f={doc['input']['f']}"
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
