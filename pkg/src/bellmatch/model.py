"""Domain types and validation for multi-criteria decision problems.

A decision problem couples a list of weighted, bounded criteria with a
list of alternatives holding one raw value per criterion.  Types are
immutable; validation returns a report instead of raising, so callers
can surface every violation at once.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum


class Direction(Enum):
    """Which way a criterion value should move to be more desirable."""

    INCREASE_DESIRED = "max"
    DECREASE_DESIRED = "min"


@dataclass(frozen=True)
class Criterion:
    """One dimension of choice: unit, desired direction, [lower, upper] limits, weight."""

    id: str
    name: str
    unit: str
    direction: Direction
    lower: float
    upper: float
    weight: float


@dataclass(frozen=True)
class Alternative:
    """One option under evaluation; ``values`` maps criterion id to a raw value."""

    id: str
    name: str
    values: dict[str, float]


@dataclass(frozen=True)
class DecisionProblem:
    """Criteria plus alternatives plus the tolerance allowed on the weight sum.

    The default tolerance of 0.005 admits weight vectors that only sum to 1
    up to rounding of the individual published weights.
    """

    criteria: tuple[Criterion, ...]
    alternatives: tuple[Alternative, ...]
    weight_sum_tolerance: float = 0.005

    def __post_init__(self) -> None:
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "alternatives", tuple(self.alternatives))

    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    def alternative_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.alternatives)


@dataclass(frozen=True)
class Violation:
    """A single broken invariant: which object, which rule, and a readable message."""

    subject: str
    rule: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]


def validate_problem(problem: DecisionProblem) -> ValidationReport:
    """Check every structural invariant of a decision problem.

    Violations are data, not exceptions: the report lists each broken rule
    with the offending criterion or alternative id.  A problem that passes
    validation is safe to feed to the ranking pipeline (finite bounds,
    positive widths, in-range values).
    """
    violations: list[Violation] = []

    if len(problem.criteria) < 1:
        violations.append(
            Violation("problem", "criterion-count", "at least 1 criterion required")
        )
    if len(problem.alternatives) < 2:
        violations.append(
            Violation("problem", "alternative-count", "at least 2 alternatives required")
        )

    seen_c: set[str] = set()
    for criterion in problem.criteria:
        if criterion.id in seen_c:
            violations.append(
                Violation(criterion.id, "duplicate-id", f"duplicate criterion id {criterion.id}")
            )
        seen_c.add(criterion.id)
        if not all(math.isfinite(x) for x in (criterion.lower, criterion.upper, criterion.weight)):
            violations.append(
                Violation(criterion.id, "non-finite", f"non-finite bound or weight on {criterion.id}")
            )
            continue
        if not criterion.upper > criterion.lower:
            violations.append(
                Violation(
                    criterion.id,
                    "degenerate-range",
                    f"degenerate range on {criterion.id}: "
                    f"lower {criterion.lower} must be strictly below upper {criterion.upper}",
                )
            )
        if not criterion.weight > 0:
            violations.append(
                Violation(
                    criterion.id,
                    "non-positive-weight",
                    f"non-positive weight {criterion.weight} on {criterion.id}",
                )
            )

    if problem.criteria:
        total = sum(c.weight for c in problem.criteria)
        if not abs(total - 1.0) <= problem.weight_sum_tolerance:
            violations.append(
                Violation(
                    "problem",
                    "weight-sum",
                    f"weights sum to {total}, expected 1 within "
                    f"{problem.weight_sum_tolerance}",
                )
            )

    by_id = {c.id: c for c in problem.criteria}
    seen_a: set[str] = set()
    for alternative in problem.alternatives:
        if alternative.id in seen_a:
            violations.append(
                Violation(
                    alternative.id, "duplicate-id", f"duplicate alternative id {alternative.id}"
                )
            )
        seen_a.add(alternative.id)
        for cid in by_id:
            if cid not in alternative.values:
                violations.append(
                    Violation(
                        alternative.id,
                        "missing-value",
                        f"{alternative.id} has no value for criterion {cid}",
                    )
                )
        for cid, value in alternative.values.items():
            criterion = by_id.get(cid)
            if criterion is None:
                violations.append(
                    Violation(
                        alternative.id,
                        "unknown-criterion",
                        f"{alternative.id} has a value for unknown criterion {cid}",
                    )
                )
                continue
            if not math.isfinite(value):
                violations.append(
                    Violation(
                        alternative.id,
                        "non-finite",
                        f"non-finite value for ({cid}, {alternative.id})",
                    )
                )
                continue
            if not (criterion.lower <= value <= criterion.upper):
                violations.append(
                    Violation(
                        alternative.id,
                        "value-out-of-range",
                        f"value out of range: ({cid}, {alternative.id}) = {value} "
                        f"outside [{criterion.lower}, {criterion.upper}]",
                    )
                )

    return ValidationReport(tuple(violations))


def clamp_values(problem: DecisionProblem) -> DecisionProblem:
    """Snap every out-of-range raw value to the nearest criterion bound.

    Opt-in alternative to rejecting out-of-range data: limits are chosen by
    convention, so real observations may fall outside them.
    """
    by_id = {c.id: c for c in problem.criteria}
    clamped = []
    for alternative in problem.alternatives:
        values = dict(alternative.values)
        for cid, value in values.items():
            criterion = by_id.get(cid)
            if criterion is not None and math.isfinite(value):
                values[cid] = min(max(value, criterion.lower), criterion.upper)
        clamped.append(replace(alternative, values=values))
    return replace(problem, alternatives=tuple(clamped))
