"""Render the tabular CLI outputs as matplotlib figures.

Figures are written to files next to the delimited output; nothing here
affects the numbers. Rows arrive as the same dictionaries the CSV/JSON
writers consume, with None marking undefined cells.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _by_vertex_count(rows):
    groups: dict[int, list[dict]] = {}
    for row in rows:
        groups.setdefault(row["V"], []).append(row)
    return groups


def plot_grid(rows, quantities, path: str) -> None:
    """One panel per quantity, curves indexed by V, x-axis n."""
    fig, axes = plt.subplots(
        len(quantities), 1, figsize=(7, 3.2 * len(quantities)), squeeze=False
    )
    groups = _by_vertex_count(rows)
    for ax, quantity in zip(axes[:, 0], quantities):
        for V in sorted(groups):
            pts = [
                (r["n"], float(r[quantity]))
                for r in groups[V]
                if r.get(quantity) is not None
            ]
            if pts:
                ax.plot(*zip(*pts), marker=".", label=f"V={V}")
        ax.set_xlabel("n")
        ax.set_ylabel(quantity)
        ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_ratio(rows, path: str) -> None:
    """Exact/asymptotic class-count ratio against n, one curve per V."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    groups = _by_vertex_count(rows)
    for V in sorted(groups):
        pts = [(r["n"], float(r["ratio"])) for r in groups[V]]
        ax.plot(*zip(*pts), marker=".", label=f"V={V}")
    ax.axhline(1.0, color="gray", linewidth=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel("exact / asymptotic")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_spectrum(entries, path: str) -> None:
    """Stick plot of the length spectrum: degeneracy at each line."""
    fig, ax = plt.subplots(figsize=(8, 4))
    lengths = [float(e.length) for e in entries]
    degeneracies = [e.degeneracy for e in entries]
    ax.vlines(lengths, 0, degeneracies, linewidth=1.2)
    ax.set_xlabel("orbit length")
    ax.set_ylabel("degeneracy")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
