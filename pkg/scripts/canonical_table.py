#!/usr/bin/env python3
"""Print the verdict table for the six canonical systems side by side."""

import argparse

from shiftlab.classify import REPORT_PROPERTIES, classify_report
from shiftlab.presets import CANONICAL


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", type=float, default=2.0, help="exponent (default 2)")
    args = parser.parse_args()

    reports = {name: classify_report(factory(args.p), label=name) for name, factory in CANONICAL.items()}

    names = list(CANONICAL)
    rows = {
        prop: [
            f"{reports[name].verdicts[prop].status.value} [{reports[name].verdicts[prop].citation}]"
            for name in names
        ]
        for prop in REPORT_PROPERTIES
    }
    width = max(len(prop) for prop in REPORT_PROPERTIES) + 2
    col = max(len(cell) for cells in rows.values() for cell in cells) + 2
    print("".ljust(width) + "".join(n.ljust(col) for n in names))
    for prop, cells in rows.items():
        print(prop.ljust(width) + "".join(cell.ljust(col) for cell in cells))
    print()
    for name in names:
        r = reports[name]
        print(f"{name}: rates ({r.g_minus:.6g}, {r.g_plus:.6g}), violations {len(r.violations)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
