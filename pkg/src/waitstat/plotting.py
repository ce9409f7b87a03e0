"""Histogram figures for the report path.

Rendering is byte-deterministic: fixed style, a fixed SVG hash salt, and
no embedded creation date, so re-rendering the same histogram yields an
identical file.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from .contacts import Histogram

_SVG_SALT = "waitstat"


def render_histogram(
    hist: Histogram,
    path: str | Path,
    title: str = "",
    xlabel: str = "inter-event time (s)",
    ylabel: str = "count",
) -> None:
    """Write a bar chart of the histogram, one bar per bin, linear axes.

    The output format follows the file extension; the CLI uses .svg.
    """
    starts = [s for s, _ in hist.bins]
    counts = [c for _, c in hist.bins]
    with matplotlib.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig = Figure(figsize=(8.0, 4.5))
        ax = fig.add_subplot()
        ax.bar(
            starts,
            counts,
            width=hist.bin_width,
            align="edge",
            color="#4878a8",
            edgecolor="black",
            linewidth=0.6,
        )
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        if title:
            ax.set_title(title)
        ax.margins(x=0.01)
        fig.tight_layout()
        save_args = {}
        if str(path).endswith(".svg"):
            save_args["metadata"] = {"Date": None}  # drop the timestamp for reproducible bytes
        fig.savefig(path, **save_args)
