"""Command-line interface.

Subcommands: ``rank``, ``match``, ``compare``, ``subsets``,
``sensitivity``.  Exit codes: 0 success, 1 data or validation error,
2 usage error.  No environment variables are consulted.
"""
from __future__ import annotations

import argparse
import sys

from .bellinger import rank
from .combinatorics import count_subsets
from .loader import load_problem
from .matching import STRATEGIES, build_preferences, gale_shapley
from .report import FORMATS, SCALES, render_sensitivity, write_report
from .sensitivity import perturb_weights


def _add_problem_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--criteria", required=True, help="criteria CSV file")
    parser.add_argument("--alternatives", required=True, help="alternatives CSV file")
    parser.add_argument(
        "--clamp",
        action="store_true",
        help="snap out-of-range values to the nearest bound instead of failing",
    )


def _add_format_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--precision", type=int, default=2, help="display decimals")
    parser.add_argument("--scale", choices=SCALES, default="percent")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellmatch",
        description="Rank alternatives by weighted path fractions and match criteria to them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rank_p = sub.add_parser("rank", help="normalize, weight, and total a decision problem")
    _add_problem_args(rank_p)
    _add_format_args(rank_p)

    match_p = sub.add_parser("match", help="rank, then match criteria to alternatives")
    _add_problem_args(match_p)
    _add_format_args(match_p)
    match_p.add_argument("--strategy", choices=STRATEGIES, default="ratings-by-weight")
    match_p.add_argument(
        "--proposers", choices=("criteria", "alternatives"), default="criteria"
    )

    compare_p = sub.add_parser(
        "compare", help="show the ranking winner next to the stable matching"
    )
    _add_problem_args(compare_p)

    subsets_p = sub.add_parser("subsets", help="count k-element subsets of an n-element set")
    subsets_p.add_argument("--n", type=int, required=True)
    subsets_p.add_argument("--k", type=int, required=True)

    sens_p = sub.add_parser("sensitivity", help="perturb weights and tally winners")
    _add_problem_args(sens_p)
    sens_p.add_argument("--delta", type=float, required=True)
    sens_p.add_argument("--samples", type=int, required=True)
    sens_p.add_argument("--seed", type=int, required=True)

    return parser


def _cmd_rank(args: argparse.Namespace) -> int:
    problem = load_problem(args.criteria, args.alternatives, clamp=args.clamp)
    ranking = rank(problem)
    sys.stdout.write(
        write_report(ranking, fmt=args.format, precision=args.precision, scale=args.scale)
    )
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    problem = load_problem(args.criteria, args.alternatives, clamp=args.clamp)
    ranking = rank(problem)
    profile = build_preferences(problem, ranking, strategy=args.strategy)
    proposers = "a" if args.proposers == "criteria" else "b"
    matching = gale_shapley(profile, proposers=proposers)
    sys.stdout.write(
        write_report(
            ranking,
            matching=matching,
            fmt=args.format,
            precision=args.precision,
            scale=args.scale,
        )
    )
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    problem = load_problem(args.criteria, args.alternatives, clamp=args.clamp)
    ranking = rank(problem)
    profile = build_preferences(problem, ranking)
    matching = gale_shapley(profile, proposers="a")

    weight_of = {c.id: c.weight for c in problem.criteria}
    position = {c.id: i for i, c in enumerate(problem.criteria)}
    partner = matching.partner_of_a()
    top_criterion = max(profile.side_a, key=lambda cid: weight_of[cid])
    top_partner = partner[top_criterion]
    agrees = "yes" if top_partner == ranking.best else "no"

    lines = [f"best variant by total rating: {ranking.best}", "stable matching (criteria propose):"]
    for a, b in sorted(matching.pairs, key=lambda ab: (-weight_of[ab[0]], position[ab[0]])):
        lines.append(f"  {a} -> {b}")
    lines.append(f"top pair: {top_criterion}-{top_partner}")
    lines.append(f"top pair partner equals best variant: {agrees}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_subsets(args: argparse.Namespace) -> int:
    sys.stdout.write(f"{count_subsets(args.n, args.k)}\n")
    return 0


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    problem = load_problem(args.criteria, args.alternatives, clamp=args.clamp)
    report = perturb_weights(problem, delta=args.delta, samples=args.samples, seed=args.seed)
    sys.stdout.write(render_sensitivity(report))
    return 0


_COMMANDS = {
    "rank": _cmd_rank,
    "match": _cmd_match,
    "compare": _cmd_compare,
    "subsets": _cmd_subsets,
    "sensitivity": _cmd_sensitivity,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
