"""Weighted path-fraction ranking.

Each raw value is expressed as the fraction of the "path" from the least
desirable to the most desirable state of its criterion, the fractions are
multiplied by the criterion weights, and each alternative's weighted
fractions are summed into a total rating (reported on a x100 percent
scale).  The alternative with the highest total wins.

All arithmetic runs at full floating precision; rounding is left to the
report layer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .model import Criterion, DecisionProblem, Direction

PERCENT_SCALE = 100.0


@dataclass(frozen=True)
class NormalizedMatrix:
    """Path fractions in [0, 1], rows indexed by criterion, columns by alternative."""

    criterion_ids: tuple[str, ...]
    alternative_ids: tuple[str, ...]
    entries: tuple[tuple[float, ...], ...]

    def entry(self, criterion_id: str, alternative_id: str) -> float:
        i = self.criterion_ids.index(criterion_id)
        j = self.alternative_ids.index(alternative_id)
        return self.entries[i][j]

    def row(self, criterion_id: str) -> tuple[float, ...]:
        return self.entries[self.criterion_ids.index(criterion_id)]


@dataclass(frozen=True)
class WeightedMatrix:
    """Per-cell contributions weight_i * normalized[i][j]; ``weights`` follows row order."""

    criterion_ids: tuple[str, ...]
    alternative_ids: tuple[str, ...]
    weights: tuple[float, ...]
    entries: tuple[tuple[float, ...], ...]

    def entry(self, criterion_id: str, alternative_id: str) -> float:
        i = self.criterion_ids.index(criterion_id)
        j = self.alternative_ids.index(alternative_id)
        return self.entries[i][j]

    def row(self, criterion_id: str) -> tuple[float, ...]:
        return self.entries[self.criterion_ids.index(criterion_id)]


@dataclass(frozen=True)
class RankingResult:
    """Everything the pipeline produces for one problem.

    ``totals`` is on the percent scale (100 x weighted column sum); ``order``
    sorts alternatives by descending total with ties broken by declaration
    order, and ``best`` is the first element of ``order``.
    """

    normalized: NormalizedMatrix
    weighted: WeightedMatrix
    totals: dict[str, float]
    order: tuple[str, ...]
    best: str


def normalize_value(value: float, criterion: Criterion) -> float:
    """Fraction of the path from the least to the most desirable state.

    Increase-desired criteria map lower -> 0 and upper -> 1; decrease-desired
    criteria are the exact complement.
    """
    if not criterion.upper > criterion.lower:
        raise ValueError(
            f"degenerate criterion range on {criterion.id}: "
            f"[{criterion.lower}, {criterion.upper}]"
        )
    if not (criterion.lower <= value <= criterion.upper):
        raise ValueError(
            f"value out of range for {criterion.id}: {value} "
            f"outside [{criterion.lower}, {criterion.upper}]"
        )
    fraction = (value - criterion.lower) / (criterion.upper - criterion.lower)
    if criterion.direction is Direction.DECREASE_DESIRED:
        # 1 - fraction (not (upper-value)/width) so direction flips are exact complements
        return 1.0 - fraction
    return fraction


def normalize_matrix(problem: DecisionProblem) -> NormalizedMatrix:
    """Normalize every cell of the raw value matrix.

    Errors from individual cells are re-raised with the (criterion,
    alternative) coordinates attached.
    """
    rows = []
    for criterion in problem.criteria:
        row = []
        for alternative in problem.alternatives:
            if criterion.id not in alternative.values:
                raise ValueError(
                    f"cell ({criterion.id}, {alternative.id}): no value present"
                )
            try:
                row.append(normalize_value(alternative.values[criterion.id], criterion))
            except ValueError as exc:
                raise ValueError(
                    f"cell ({criterion.id}, {alternative.id}): {exc}"
                ) from None
        rows.append(tuple(row))
    return NormalizedMatrix(
        criterion_ids=problem.criterion_ids(),
        alternative_ids=problem.alternative_ids(),
        entries=tuple(rows),
    )


def apply_weights(normalized: NormalizedMatrix, criteria: Sequence[Criterion]) -> WeightedMatrix:
    """Multiply each normalized row by its criterion weight, full precision."""
    if len(criteria) != len(normalized.criterion_ids):
        raise ValueError(
            f"dimension mismatch: {len(normalized.criterion_ids)} matrix rows "
            f"vs {len(criteria)} criteria"
        )
    for criterion, cid in zip(criteria, normalized.criterion_ids):
        if criterion.id != cid:
            raise ValueError(f"criterion order mismatch: {criterion.id} vs row {cid}")
    entries = tuple(
        tuple(criterion.weight * x for x in row)
        for criterion, row in zip(criteria, normalized.entries)
    )
    return WeightedMatrix(
        criterion_ids=normalized.criterion_ids,
        alternative_ids=normalized.alternative_ids,
        weights=tuple(c.weight for c in criteria),
        entries=entries,
    )


def total_ratings(weighted: WeightedMatrix) -> dict[str, float]:
    """Percent-scale column sums, keyed by alternative id in declaration order."""
    return {
        aid: PERCENT_SCALE * sum(row[j] for row in weighted.entries)
        for j, aid in enumerate(weighted.alternative_ids)
    }


def ranking_order(totals: dict[str, float], declaration_order: Sequence[str]) -> tuple[str, ...]:
    """Alternatives by descending total; exact ties keep declaration order."""
    return tuple(sorted(declaration_order, key=lambda aid: -totals[aid]))


def best_variant(ranking: RankingResult) -> str:
    """The alternative with the highest total (earliest declared on exact ties)."""
    return ranking.order[0]


def rank(problem: DecisionProblem) -> RankingResult:
    """Run the whole pipeline: normalize, weight, total, order.

    The problem is expected to have passed :func:`bellmatch.model.validate_problem`.
    """
    normalized = normalize_matrix(problem)
    weighted = apply_weights(normalized, problem.criteria)
    totals = total_ratings(weighted)
    order = ranking_order(totals, weighted.alternative_ids)
    return RankingResult(
        normalized=normalized,
        weighted=weighted,
        totals=totals,
        order=order,
        best=order[0],
    )
