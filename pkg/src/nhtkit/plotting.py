"""Matplotlib figures written next to the CLI's delimited reports."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def plot_gram(matrix, m, path, title=None):
    """Heatmap of a Gram product; off-identity cells carry a red cross."""
    arr = np.array(matrix, dtype=np.int64)
    n = arr.shape[0]
    fig, ax = plt.subplots(figsize=(4.5, 4))
    im = ax.imshow(arr, cmap="viridis", vmin=0, vmax=m - 1)
    bad = np.argwhere(arr != np.eye(n, dtype=np.int64))
    if bad.size:
        ax.scatter(bad[:, 1], bad[:, 0], marker="x", s=18, c="red", linewidths=1)
    ax.set_xticks(range(n))
    ax.set_yticks(range(n))
    ax.tick_params(labelsize=7)
    ax.set_title(title or f"N N^T mod {m}", fontsize=9)
    fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_table(table, rows, path):
    """Printed vs recomputed outputs of one transform table, side by side."""
    printed = np.array([r.printed for r in rows], dtype=np.int64)
    computed = np.array([r.computed for r in rows], dtype=np.int64)
    vmax = max(int(printed.max()), table.m - 1)
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6), sharey=True)
    for ax, data, label in zip(axes, (printed, computed), ("printed", "computed")):
        ax.imshow(data, cmap="magma", vmin=0, vmax=vmax, aspect="auto")
        ax.set_title(f"Table {table.number} {label} g(n) mod {table.m}", fontsize=9)
        ax.set_xlabel("n")
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([str(r.row) for r in rows])
    for r in rows:
        for d in r.discrepancies:
            color = "orange" if d.kind == "unreduced" else "red"
            for ax in axes:
                ax.add_patch(plt.Rectangle((d.position - 0.5, r.row - 1.5), 1, 1,
                                           fill=False, ec=color, lw=1.5))
    axes[0].set_ylabel("row")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_orbit_sizes(sizes, path, title):
    """Bar chart of orbit sizes from a census (size -> number of orbits)."""
    keys = sorted(sizes)
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar([str(k) for k in keys], [sizes[k] for k in keys], color="tab:blue")
    ax.set_xlabel("orbit size")
    ax.set_ylabel("orbits")
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)
