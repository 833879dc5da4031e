#!/usr/bin/env python3
"""Run the bundled 2019 career-survey dataset end to end.

Ranks the five job offers on the eleven weighted criteria, matches the
top-weighted criteria to offers through deferred acceptance, and probes
how stable the winner is under small weight jitter.
"""
from bellmatch.bellinger import rank
from bellmatch.loader import load_career2019
from bellmatch.matching import build_preferences, gale_shapley
from bellmatch.report import render_sensitivity, write_report
from bellmatch.sensitivity import perturb_weights


def main() -> None:
    problem = load_career2019()
    ranking = rank(problem)
    profile = build_preferences(problem, ranking)
    matching = gale_shapley(profile, proposers="a")

    print(write_report(ranking, matching=matching), end="")
    print()

    report = perturb_weights(problem, delta=0.01, samples=1000, seed=2019)
    print(render_sensitivity(report), end="")


if __name__ == "__main__":
    main()
