"""Headless heatmap rendering for the report path of the CLI.

matplotlib is imported lazily so that library users never pay for it, and
the Agg backend plus pinned SVG metadata keep repeated renders of the same
data byte-identical.
"""

from __future__ import annotations


def render_grid(values, bound: int, title: str, out_path: str) -> None:
    """Save a heatmap of ``values[(a, b)]`` for 0 <= a, b <= bound."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "tiltnull"
    grid = [[values[(a, b)] for a in range(bound + 1)] for b in range(bound + 1)]
    fig, ax = plt.subplots(figsize=(6, 5))
    image = ax.imshow(grid, origin="lower", cmap="viridis", interpolation="nearest")
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(title)
    fig.colorbar(image, ax=ax)
    metadata = {"Date": None} if out_path.endswith(".svg") else None
    fig.savefig(out_path, metadata=metadata)
    plt.close(fig)
