"""Empirical robustness of a ranking under weight perturbation.

Weights drive the outcome, so we probe how easily the winner changes:
each sample multiplies every weight by an independent uniform factor from
[1-delta, 1+delta], renormalizes the weights to sum to one, reruns the
ranking, and tallies the winner.  Multiplicative noise keeps weights
positive and the renormalization keeps the sum-to-one constraint without
any clipping.

Sampling uses ``random.Random`` (Mersenne Twister), so a fixed seed gives
identical reports on every platform.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Sequence

from .bellinger import rank
from .model import DecisionProblem


@dataclass(frozen=True)
class SensitivityReport:
    """Tally of winners and rank agreement across perturbed reruns.

    ``min_flip_delta`` is the smallest tested perturbation that changed the
    winner; a single run tests one delta, so it is either that delta or None
    when no sample flipped.  ``rank_correlations`` holds one pairwise
    concordance fraction (in [0, 1]) per sample, against the base order.
    """

    base_best: str
    samples: int
    delta: float
    seed: int
    winner_histogram: dict[str, int]
    min_flip_delta: float | None
    rank_correlations: tuple[float, ...]


def renormalize_weights(weights: Sequence[float]) -> list[float]:
    """Scale positive weights so they sum to one."""
    ws = list(weights)
    if any(not w > 0 for w in ws):
        raise ValueError("weights must all be positive")
    total = sum(ws)
    return [w / total for w in ws]


def _concordance(base_order: Sequence[str], other_order: Sequence[str]) -> float:
    pos_base = {aid: i for i, aid in enumerate(base_order)}
    pos_other = {aid: i for i, aid in enumerate(other_order)}
    pairs = list(itertools.combinations(base_order, 2))
    if not pairs:
        return 1.0
    agree = sum(
        1
        for x, y in pairs
        if (pos_base[x] < pos_base[y]) == (pos_other[x] < pos_other[y])
    )
    return agree / len(pairs)


def perturb_weights(
    problem: DecisionProblem, delta: float, samples: int, seed: int
) -> SensitivityReport:
    """Rerun the ranking ``samples`` times with jittered weights.

    delta = 0 is the degenerate no-perturbation case (all factors are 1).
    Identical (problem, delta, samples, seed) always produce an identical
    report; samples are tallied commutatively, so evaluation order does
    not matter.
    """
    if not 0 <= delta < 1:
        raise ValueError(f"delta must be in [0, 1), got {delta}")
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")

    base = rank(problem)
    rng = random.Random(seed)
    histogram: dict[str, int] = {}
    correlations: list[float] = []
    flipped = False

    for _ in range(samples):
        factors = [rng.uniform(1 - delta, 1 + delta) for _ in problem.criteria]
        new_weights = renormalize_weights(
            [c.weight * f for c, f in zip(problem.criteria, factors)]
        )
        perturbed = replace(
            problem,
            criteria=tuple(
                replace(c, weight=w) for c, w in zip(problem.criteria, new_weights)
            ),
        )
        result = rank(perturbed)
        histogram[result.best] = histogram.get(result.best, 0) + 1
        correlations.append(_concordance(base.order, result.order))
        if result.best != base.best:
            flipped = True

    return SensitivityReport(
        base_best=base.best,
        samples=samples,
        delta=delta,
        seed=seed,
        winner_histogram=histogram,
        min_flip_delta=delta if flipped else None,
        rank_correlations=tuple(correlations),
    )
