"""Figure specs and the scan-CSV reading contract.

A spec file is JSON:

    {
      "output": "figure.png",
      "layout": [3, 2],
      "panels": [
        {"csv": "daya-bay.csv",
         "x": "x_km",
         "curves": ["survival_prob", "mutual_info"],
         "title": "daya-bay",
         "logx": false},
        ...
      ]
    }

CSV inputs follow the scan contract: optional leading ``#`` comment lines,
a comma-separated header, one numeric row per grid point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


class SpecError(ValueError):
    """Invalid spec or CSV input; the message names what is missing."""


@dataclass(frozen=True)
class Panel:
    csv: str
    curves: tuple
    x: str = "x_km"
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""
    logx: bool = False

    def __post_init__(self):
        if not self.curves:
            raise SpecError(f"panel {self.title or self.csv!r}: no curves mapped")
        object.__setattr__(self, "curves", tuple(self.curves))


@dataclass(frozen=True)
class FigureSpec:
    output: str
    layout: tuple
    panels: tuple
    dpi: int = 110

    def __post_init__(self):
        rows, cols = self.layout
        if rows < 1 or cols < 1:
            raise SpecError(f"layout {self.layout} must be positive")
        if len(self.panels) > rows * cols:
            raise SpecError(f"{len(self.panels)} panels do not fit a "
                            f"{rows}x{cols} layout")
        if not self.panels:
            raise SpecError("spec has no panels")
        object.__setattr__(self, "layout", (rows, cols))
        object.__setattr__(self, "panels", tuple(self.panels))

    @property
    def input_csvs(self):
        return tuple(dict.fromkeys(p.csv for p in self.panels))


def load_spec(path) -> FigureSpec:
    """Parse and validate a JSON spec file."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: not valid JSON ({exc})") from exc
    return spec_from_dict(raw, base_dir=Path(path).parent)


def spec_from_dict(raw: dict, base_dir=None) -> FigureSpec:
    for key in ("output", "layout", "panels"):
        if key not in raw:
            raise SpecError(f"spec is missing the {key!r} field")
    base = Path(base_dir) if base_dir is not None else Path(".")
    panels = []
    for entry in raw["panels"]:
        if "csv" not in entry or "curves" not in entry:
            raise SpecError(f"panel {entry!r} needs 'csv' and 'curves'")
        panels.append(Panel(
            csv=str(base / entry["csv"]),
            curves=tuple(entry["curves"]),
            x=entry.get("x", "x_km"),
            title=entry.get("title", ""),
            xlabel=entry.get("xlabel", ""),
            ylabel=entry.get("ylabel", ""),
            logx=bool(entry.get("logx", False)),
        ))
    output = raw["output"]
    if base_dir is not None and not Path(output).is_absolute():
        output = str(base / output)
    return FigureSpec(output=output, layout=tuple(raw["layout"]),
                      panels=tuple(panels), dpi=int(raw.get("dpi", 110)))


def read_scan_csv(path) -> dict:
    """Read a scan CSV into {column: list of floats}; rejects empty files."""
    lines = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                lines.append(line)
    if not lines:
        raise SpecError(f"{path}: empty CSV")
    header = lines[0].split(",")
    if len(lines) < 2:
        raise SpecError(f"{path}: CSV has a header but no data rows")
    columns = {name: [] for name in header}
    for ln in lines[1:]:
        for name, cell in zip(header, ln.split(",")):
            columns[name].append(float(cell))
    return columns


def panel_data(panel: Panel):
    """Resolve a panel against its CSV; errors name any missing column."""
    columns = read_scan_csv(panel.csv)
    missing = [c for c in (panel.x, *panel.curves) if c not in columns]
    if missing:
        raise SpecError(f"{panel.csv}: missing column(s) {', '.join(missing)}; "
                        f"header has {', '.join(columns)}")
    return columns[panel.x], {c: columns[c] for c in panel.curves}


def six_panel_spec(csv_paths, output: str, dpi: int = 110) -> FigureSpec:
    """Left/right panel pair per scan: survival + mutual information on the
    left, conditional entropy + predictability on the right."""
    panels = []
    for path in csv_paths:
        name = Path(path).stem
        panels.append(Panel(csv=str(path), x="x_km",
                            curves=("survival_prob", "mutual_info"),
                            title=name, xlabel="x (km)"))
        panels.append(Panel(csv=str(path), x="x_km",
                            curves=("cond_entropy", "p_vn"),
                            title=name, xlabel="x (km)"))
    return FigureSpec(output=output, layout=(len(csv_paths), 2),
                      panels=tuple(panels), dpi=dpi)
