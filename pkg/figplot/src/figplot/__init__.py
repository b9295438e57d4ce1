"""Multi-panel figures from correlation-scan CSVs."""
from .render import render
from .spec import FigureSpec, Panel, SpecError, load_spec, read_scan_csv, six_panel_spec

__all__ = ["FigureSpec", "Panel", "SpecError", "load_spec", "read_scan_csv",
           "render", "six_panel_spec"]

__version__ = "0.1.0"
