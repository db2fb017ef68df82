#!/usr/bin/env python3
"""Run the randomized self-audit sweep and print its summary as JSON."""

import argparse
import json

from shiftlab.cli import run_audit


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--horizon", type=int, default=200)
    parser.add_argument("--kspan", type=int, default=500)
    args = parser.parse_args()

    summary = run_audit(args.count, args.seed, horizon=args.horizon, k_span=args.kspan)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if not summary["violations"] else 3


if __name__ == "__main__":
    raise SystemExit(main())
