"""figplot <spec-file>: render a multi-panel figure from scan CSVs."""
from __future__ import annotations

import argparse
import sys

from .render import render
from .spec import SpecError, load_spec


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="figplot", description=__doc__)
    parser.add_argument("spec_file", help="JSON figure spec")
    args = parser.parse_args(argv)
    try:
        out = render(load_spec(args.spec_file))
    except (SpecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
