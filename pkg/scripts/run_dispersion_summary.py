#!/usr/bin/env python3
"""Aggregate the bundled dispersion tables and print the headline figures.

Reads the two pre-counted CSVs (helpfulness and clarity) and reports, for
each variable, the share of ratings that deviate from the per-instructor
mode by exactly 2 and by 3 or more.
"""

import argparse
import sys

from classrank import aggregate, read_dispersion_csv
from classrank.data import clarity_counts_path, helpfulness_counts_path


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--ratings-csv",
        action="append",
        metavar="NAME=PATH",
        help="extra variable to aggregate, e.g. easiness=path/to.csv "
        "(repeatable; bundled helpfulness and clarity always run)",
    )
    parser.add_argument("--min-n", type=int, default=5)
    return parser.parse_args()


def main():
    args = parse_args()
    tables = [
        ("helpfulness", helpfulness_counts_path()),
        ("clarity", clarity_counts_path()),
    ]
    for extra in args.ratings_csv or []:
        name, _, path = extra.partition("=")
        if not path:
            print(f"expected NAME=PATH, got {extra!r}", file=sys.stderr)
            return 2
        tables.append((name, path))

    print(f"{'variable':<14} {'courses':>7} {'ratings':>8} "
          f"{'dev2':>7} {'dev3+':>7} {'dev>=2':>7}")
    for name, path in tables:
        rows, excluded = read_dispersion_csv(path, min_n=args.min_n)
        pooled = aggregate(rows)
        note = f"  ({len(excluded)} below min_n)" if excluded else ""
        print(
            f"{name:<14} {len(rows):>7} {pooled.total_n:>8} "
            f"{pooled.pct_dev2:>6.2f}% {pooled.pct_dev3plus:>6.2f}% "
            f"{pooled.pct_dev2plus:>6.2f}%{note}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
