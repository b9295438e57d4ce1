"""Deterministic multi-panel rendering.

Output bytes depend only on the spec and the CSV contents: the bundled
style sheet pins every visual default and the writers are stripped of
timestamps (SVG/PDF date metadata suppressed, fixed hash salt).
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .spec import FigureSpec, panel_data

STYLE_FILE = Path(__file__).with_name("default.mplstyle")

_METADATA = {
    ".png": {"Software": "figplot"},
    ".svg": {"Date": None},
    ".pdf": {"CreationDate": None},
}


def render(spec: FigureSpec) -> str:
    """Draw every panel and write the figure; returns the output path."""
    suffix = Path(spec.output).suffix.lower()
    rows, cols = spec.layout
    with plt.style.context(str(STYLE_FILE)):
        plt.rcParams["svg.hashsalt"] = "figplot"
        fig, axes = plt.subplots(rows, cols,
                                 figsize=(4.2 * cols, 2.8 * rows),
                                 squeeze=False)
        try:
            flat = axes.ravel()
            for ax in flat[len(spec.panels):]:
                ax.set_axis_off()
            for ax, panel in zip(flat, spec.panels):
                xs, curves = panel_data(panel)
                for name, ys in curves.items():
                    ax.plot(xs, ys, label=name)
                if panel.logx:
                    ax.set_xscale("log")
                if panel.title:
                    ax.set_title(panel.title)
                ax.set_xlabel(panel.xlabel or panel.x)
                if panel.ylabel:
                    ax.set_ylabel(panel.ylabel)
                ax.legend()
            fig.tight_layout()
            fig.savefig(spec.output, dpi=spec.dpi,
                        metadata=_METADATA.get(suffix, {}))
        finally:
            plt.close(fig)
    return spec.output
