"""Shared builders, reference tables, and independent oracles for the suite.

The ``naive_*`` functions are deliberately separate implementations of the
definitions (plain double loops, direct formulas) so the library can be
checked against them rather than against itself.
"""
from __future__ import annotations

import random

from bellmatch.matching import Matching, PreferenceProfile
from bellmatch.model import Alternative, Criterion, DecisionProblem, Direction

# Two-decimal reference tabulation for the bundled career2019 dataset
# (normalized path fractions, criteria x alternatives p1..p5).
REFERENCE_NORMALIZED = {
    "c1": (1.0, 0.75, 0.5, 0.75, 0.0),
    "c2": (0.0, 0.67, 1.0, 0.53, 0.26),
    "c3": (0.25, 0.0, 0.25, 0.0, 0.0),
    "c4": (0.0, 0.5, 0.75, 0.75, 0.5),
    "c5": (0.25, 0.0, 0.75, 1.0, 0.5),
    "c6": (1.0, 0.0, 0.0, 1.0, 0.0),
    "c7": (1.0, 0.75, 0.0, 0.75, 0.75),
    "c8": (1.0, 0.75, 0.5, 0.75, 0.0),
    "c9": (0.5, 0.33, 1.0, 0.0, 0.16),
    "c10": (1.0, 0.93, 0.83, 0.0, 0.73),
    "c11": (0.0, 1.0, 0.66, 0.66, 0.66),
}

# Matching three-decimal reference for the weighted contributions.
REFERENCE_WEIGHTED = {
    "c1": (0.107, 0.080, 0.053, 0.080, 0.0),
    "c2": (0.0, 0.070, 0.105, 0.056, 0.028),
    "c3": (0.025, 0.0, 0.025, 0.0, 0.0),
    "c4": (0.0, 0.05, 0.075, 0.075, 0.05),
    "c5": (0.023, 0.0, 0.071, 0.095, 0.047),
    "c6": (0.092, 0.0, 0.0, 0.092, 0.0),
    "c7": (0.088, 0.066, 0.0, 0.066, 0.066),
    "c8": (0.086, 0.064, 0.043, 0.064, 0.0),
    "c9": (0.042, 0.028, 0.085, 0.0, 0.014),
    "c10": (0.083, 0.077, 0.069, 0.0, 0.061),
    "c11": (0.0, 0.059, 0.039, 0.039, 0.039),
}

# Two-decimal reference totals and full-precision totals recomputed
# independently (see naive_totals) for the same dataset.
REFERENCE_TOTALS = {"p1": 54.75, "p2": 49.65, "p3": 56.67, "p4": 56.87, "p5": 30.63}
RECOMPUTED_TOTALS = {
    "p1": 54.749999999999986,
    "p2": 49.65948533654984,
    "p3": 56.672499125568386,
    "p4": 56.876529239050654,
    "p5": 30.63628161208305,
}
REFERENCE_ORDER = ("p4", "p3", "p1", "p2", "p5")
REFERENCE_PAIRS = frozenset(
    [("c1", "p4"), ("c2", "p3"), ("c3", "p1"), ("c4", "p2"), ("c5", "p5")]
)


def make_criterion(
    cid: str,
    lower: float = 0.0,
    upper: float = 1.0,
    weight: float = 1.0,
    direction: Direction = Direction.INCREASE_DESIRED,
    name: str | None = None,
    unit: str = "units",
) -> Criterion:
    return Criterion(
        id=cid,
        name=name or cid,
        unit=unit,
        direction=direction,
        lower=lower,
        upper=upper,
        weight=weight,
    )


def make_problem(
    criteria: list[Criterion], value_rows: list[list[float]], **kwargs
) -> DecisionProblem:
    """Build a problem from criteria and a criteria-major value matrix."""
    n_alts = len(value_rows[0])
    alternatives = [
        Alternative(
            id=f"p{j + 1}",
            name=f"option {j + 1}",
            values={c.id: value_rows[i][j] for i, c in enumerate(criteria)},
        )
        for j in range(n_alts)
    ]
    return DecisionProblem(criteria=tuple(criteria), alternatives=tuple(alternatives), **kwargs)


def random_problem(
    rng: random.Random, n_criteria: int, n_alternatives: int
) -> DecisionProblem:
    criteria = []
    for i in range(n_criteria):
        lower = rng.uniform(-50.0, 50.0)
        width = rng.uniform(0.5, 100.0)
        criteria.append(
            make_criterion(
                f"c{i + 1}",
                lower=lower,
                upper=lower + width,
                weight=rng.uniform(0.05, 5.0),
                direction=rng.choice(
                    [Direction.INCREASE_DESIRED, Direction.DECREASE_DESIRED]
                ),
            )
        )
    value_rows = [
        [rng.uniform(c.lower, c.upper) for _ in range(n_alternatives)] for c in criteria
    ]
    return make_problem(criteria, value_rows)


def naive_totals(problem: DecisionProblem) -> dict[str, float]:
    """Independent percent totals: per-cell recomputation straight from the definition."""
    totals = {}
    for alternative in problem.alternatives:
        acc = 0.0
        for criterion in problem.criteria:
            value = alternative.values[criterion.id]
            width = criterion.upper - criterion.lower
            if criterion.direction is Direction.INCREASE_DESIRED:
                fraction = (value - criterion.lower) / width
            else:
                fraction = (criterion.upper - value) / width
            acc += criterion.weight * fraction
        totals[alternative.id] = 100.0 * acc
    return totals


def random_profile(rng: random.Random, n: int) -> PreferenceProfile:
    side_a = [f"a{i + 1}" for i in range(n)]
    side_b = [f"b{i + 1}" for i in range(n)]
    prefs_a = {}
    for a in side_a:
        ranking = side_b[:]
        rng.shuffle(ranking)
        prefs_a[a] = tuple(ranking)
    prefs_b = {}
    for b in side_b:
        ranking = side_a[:]
        rng.shuffle(ranking)
        prefs_b[b] = tuple(ranking)
    return PreferenceProfile(
        side_a=tuple(side_a), side_b=tuple(side_b), prefs_a=prefs_a, prefs_b=prefs_b
    )


def naive_blocking_pairs(
    profile: PreferenceProfile, matching: Matching
) -> list[tuple[str, str]]:
    """Blocking-pair scan written from the definition, using list.index lookups."""
    partner_a = {a: b for a, b in matching.pairs}
    partner_b = {b: a for a, b in matching.pairs}
    blocking = []
    for a in profile.side_a:
        for b in profile.side_b:
            if partner_a[a] == b:
                continue
            a_prefers = profile.prefs_a[a].index(b) < profile.prefs_a[a].index(partner_a[a])
            b_prefers = profile.prefs_b[b].index(a) < profile.prefs_b[b].index(partner_b[b])
            if a_prefers and b_prefers:
                blocking.append((a, b))
    return blocking
