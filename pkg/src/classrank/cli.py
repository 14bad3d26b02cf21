"""Command line front end.

Three subcommands: ``rate`` scores one survey with both weighting methods,
``dispersion`` aggregates mode-deviation counts from a ratings CSV, and
``scenarios`` runs a biased-rating scenario bundle. JSON reports go to
stdout (or --output); short human summaries go to stderr.

Exit codes: 0 success, 2 invalid input, 3 degenerate network,
4 no convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import data as bundled_data
from .dispersion import DEFAULT_MIN_N, TIEBREAKS, aggregate, read_dispersion_csv
from .eigenfactor import DEFAULT_ALPHA, DEFAULT_MAX_ITER, DEFAULT_TOL
from .errors import ClassrankError, DegenerateNetwork, NoConvergence
from .report import (
    dispersion_report_dict,
    rate_survey,
    rating_report_dict,
    scenario_report_dict,
)
from .scenarios import error_reduction_summary, load_scenarios, run_scenario
from .survey import DIAGONAL_POLICIES, load_survey_csv, load_survey_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_NO_CONVERGENCE = 4


@dataclass
class RunConfig:
    """Effective settings of one run, embedded verbatim in the report."""

    command: str
    alpha: float = DEFAULT_ALPHA
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    diagonal_policy: str = "coerce"
    min_n: int = DEFAULT_MIN_N
    mode_tiebreak: str = "smallest"
    strict_likert: bool = False

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.min_n < 1:
            raise ValueError("min_n must be at least 1")
        if self.diagonal_policy not in DIAGONAL_POLICIES:
            raise ValueError(f"unknown diagonal policy {self.diagonal_policy!r}")
        if self.mode_tiebreak not in TIEBREAKS:
            raise ValueError(f"unknown tiebreak {self.mode_tiebreak!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classrank",
        description="Bias-robust weighted course ratings from peer "
        "competence-perception networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rate = sub.add_parser("rate", help="score one survey with both methods")
    rate.add_argument("--survey", help="survey JSON document")
    rate.add_argument(
        "--competence-csv", help="competence matrix CSV (with --ratings-csv)"
    )
    rate.add_argument(
        "--ratings-csv", help="single-column ratings CSV (with --competence-csv)"
    )
    rate.add_argument(
        "--scale",
        nargs=2,
        type=float,
        default=None,
        metavar=("MIN", "MAX"),
        help="rating scale for CSV input (default 1 5)",
    )
    _add_walk_flags(rate)
    rate.add_argument(
        "--diagonal-policy",
        choices=DIAGONAL_POLICIES,
        default="coerce",
        help="what to do with self-endorsements (default coerce to 0)",
    )
    rate.add_argument(
        "--strict-likert",
        action="store_true",
        help="reject non-integer ratings",
    )
    rate.add_argument("--output", help="write the JSON report here instead of stdout")

    dispersion = sub.add_parser(
        "dispersion", help="aggregate mode-deviation counts from a CSV"
    )
    dispersion.add_argument(
        "--ratings-csv",
        required=True,
        help="label,rating or label,n,mode,dev2,dev3plus CSV",
    )
    dispersion.add_argument(
        "--min-n",
        type=int,
        default=DEFAULT_MIN_N,
        help="exclude instructors with fewer ratings (default 5)",
    )
    dispersion.add_argument(
        "--mode-tiebreak",
        choices=TIEBREAKS,
        default="smallest",
        help="mode tie resolution for long-form input (default smallest)",
    )
    dispersion.add_argument("--output", help="write the JSON report here")

    scenarios = sub.add_parser(
        "scenarios", help="run a biased-rating scenario bundle"
    )
    scenarios.add_argument(
        "--scenario-file",
        default=str(bundled_data.scenario_fixture_path()),
        help="scenario bundle JSON (default: bundled six-scenario fixture)",
    )
    _add_walk_flags(scenarios)
    scenarios.add_argument(
        "--diagonal-policy",
        choices=DIAGONAL_POLICIES,
        default="coerce",
    )
    scenarios.add_argument("--output", help="write the JSON report here")

    return parser


def _add_walk_flags(parser) -> None:
    parser.add_argument(
        "--alpha",
        type=float,
        default=DEFAULT_ALPHA,
        help="walk-following probability, teleportation is 1-alpha "
        "(default 0.85)",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="L1 convergence tolerance (default 1e-12)",
    )
    parser.add_argument(
        "--max-iter",
        type=int,
        default=DEFAULT_MAX_ITER,
        help="power iteration cap (default 1000)",
    )


def _emit(document: dict, output: str | None) -> None:
    text = json.dumps(document, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _cmd_rate(args) -> int:
    config = RunConfig(
        command="rate",
        alpha=args.alpha,
        tol=args.tol,
        max_iter=args.max_iter,
        diagonal_policy=args.diagonal_policy,
        strict_likert=args.strict_likert,
    )
    if args.survey and (args.competence_csv or args.ratings_csv):
        raise ValueError("--survey excludes --competence-csv/--ratings-csv")
    if args.survey:
        survey = load_survey_json(
            args.survey,
            diagonal_policy=config.diagonal_policy,
            strict_likert=config.strict_likert,
        )
    elif args.competence_csv and args.ratings_csv:
        scale = tuple(args.scale) if args.scale else (1.0, 5.0)
        survey = load_survey_csv(
            args.competence_csv,
            args.ratings_csv,
            scale=scale,
            diagonal_policy=config.diagonal_policy,
            strict_likert=config.strict_likert,
        )
    else:
        raise ValueError("provide --survey, or --competence-csv with --ratings-csv")

    report = rate_survey(
        survey, alpha=config.alpha, tol=config.tol, max_iter=config.max_iter
    )
    _emit(rating_report_dict(report, asdict(config)), args.output)
    print(
        f"{survey.label or 'survey'}: n={survey.n} "
        f"mean={report.arithmetic_mean:.4f} "
        f"degree={report.degree_rating:.4f} "
        f"eigenfactor={report.eigenfactor_rating:.4f} "
        f"({report.influence.iterations} iterations)",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_dispersion(args) -> int:
    config = RunConfig(
        command="dispersion",
        min_n=args.min_n,
        mode_tiebreak=args.mode_tiebreak,
    )
    rows, excluded = read_dispersion_csv(
        args.ratings_csv, min_n=config.min_n, tiebreak=config.mode_tiebreak
    )
    pooled = aggregate(rows)
    _emit(dispersion_report_dict(rows, pooled, excluded, asdict(config)), args.output)
    note = f", {len(excluded)} excluded below n={config.min_n}" if excluded else ""
    print(
        f"{len(rows)} instructors, {pooled.total_n} ratings{note} | "
        f"dev2 {pooled.pct_dev2:.2f}% dev3+ {pooled.pct_dev3plus:.2f}% "
        f"dev>=2 {pooled.pct_dev2plus:.2f}%",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_scenarios(args) -> int:
    config = RunConfig(
        command="scenarios",
        alpha=args.alpha,
        tol=args.tol,
        max_iter=args.max_iter,
        diagonal_policy=args.diagonal_policy,
    )
    bundle = load_scenarios(
        args.scenario_file, diagonal_policy=config.diagonal_policy
    )
    results = [
        run_scenario(
            scenario, alpha=config.alpha, tol=config.tol, max_iter=config.max_iter
        )
        for scenario in bundle
    ]
    summary = error_reduction_summary(results)
    _emit(scenario_report_dict(results, summary, asdict(config)), args.output)
    for result, reduction in zip(results, summary.per_scenario):
        parts = [f"scenario {result.id}: mean={result.arithmetic_mean:.4f}"]
        if result.degree_rating is not None:
            parts.append(f"degree={result.degree_rating:.4f}")
        if result.eigenfactor_rating is not None:
            parts.append(f"eigenfactor={result.eigenfactor_rating:.4f}")
        if reduction.winner:
            parts.append(f"winner={reduction.winner}")
        print(" ".join(parts), file=sys.stderr)
    if summary.mean_degree_reduction is not None:
        print(
            f"mean error reduction: degree "
            f"{summary.mean_degree_reduction:.2f}%, eigenfactor "
            f"{summary.mean_eigenfactor_reduction:.2f}%",
            file=sys.stderr,
        )
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "rate": _cmd_rate,
        "dispersion": _cmd_dispersion,
        "scenarios": _cmd_scenarios,
    }
    try:
        return handlers[args.command](args)
    except DegenerateNetwork as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (ClassrankError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
