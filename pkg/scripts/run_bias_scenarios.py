#!/usr/bin/env python3
"""Run a biased-rating scenario bundle and print the weight tables.

Defaults to the bundled six-scenario fixture. The per-student table shows
both weight columns next to the ratings so the downweighting of the outlier
is visible directly.
"""

import argparse
import json
import sys

from classrank import error_reduction_summary, load_scenarios, run_scenario
from classrank.data import scenario_fixture_path
from classrank.report import scenario_report_dict


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--scenario-file",
        default=str(scenario_fixture_path()),
        help="scenario bundle JSON (default: bundled fixture)",
    )
    parser.add_argument("--alpha", type=float, default=0.85)
    parser.add_argument("--tol", type=float, default=1e-12)
    parser.add_argument("--max-iter", type=int, default=1000)
    parser.add_argument("--json", help="also write the full JSON report here")
    return parser.parse_args()


def main():
    args = parse_args()
    bundle = load_scenarios(args.scenario_file)
    results = [
        run_scenario(s, alpha=args.alpha, tol=args.tol, max_iter=args.max_iter)
        for s in bundle
    ]
    summary = error_reduction_summary(results)

    for scenario, result in zip(bundle, results):
        print(f"scenario {result.id}")
        print("  student  rating  degree_w  eigen_w")
        ratings = scenario.survey.ratings.values
        for j in range(scenario.n):
            dw = result.degree_weights[j] if result.degree_weights is not None else float("nan")
            ew = (
                result.eigenfactor_weights[j]
                if result.eigenfactor_weights is not None
                else float("nan")
            )
            marker = "  <- declared biased" if j == scenario.biased_index else ""
            print(f"  {j + 1:>7}  {ratings[j]:>6.1f}  {dw:>8.4f}  {ew:>7.4f}{marker}")
        print(
            f"  mean={result.arithmetic_mean:.4f} "
            f"unbiased={result.unbiased_mean:.4f} "
            f"degree={result.degree_rating:.4f} (err {result.err_degree:.4f}) "
            f"eigenfactor={result.eigenfactor_rating:.4f} "
            f"(err {result.err_eigenfactor:.4f})"
        )
        print()

    print(
        f"mean error reduction: degree {summary.mean_degree_reduction:.2f}%, "
        f"eigenfactor {summary.mean_eigenfactor_reduction:.2f}%"
    )
    winners = [entry.winner for entry in summary.per_scenario]
    print(f"winners: {winners}")

    if args.json:
        config = {
            "command": "scenarios",
            "alpha": args.alpha,
            "tol": args.tol,
            "max_iter": args.max_iter,
        }
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(scenario_report_dict(results, summary, config), handle, indent=2)
            handle.write("\n")
        print(f"report written to {args.json}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
