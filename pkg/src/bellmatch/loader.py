"""CSV decision-problem files.

Two files carry a problem: ``criteria.csv`` with columns
``id,name,unit,direction,lower,upper,weight`` (direction is ``max`` or
``min``) and ``alternatives.csv`` with columns ``id,name`` followed by one
column per criterion id.  Decimal separator is always '.'.
"""
from __future__ import annotations

import csv
import math
from importlib import resources
from pathlib import Path

from .model import (
    Alternative,
    Criterion,
    DecisionProblem,
    Direction,
    clamp_values,
    validate_problem,
)

CRITERIA_COLUMNS = ("id", "name", "unit", "direction", "lower", "upper", "weight")
_DIRECTION_TOKENS = {"max": Direction.INCREASE_DESIRED, "min": Direction.DECREASE_DESIRED}


class ProblemFormatError(ValueError):
    """A problem file failed to parse or the parsed problem failed validation."""


def _parse_number(raw: str, path: Path, line: int, column: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ProblemFormatError(
            f"{path}, line {line}, column {column!r}: non-numeric value {raw!r}"
        ) from None
    if not math.isfinite(value):
        raise ProblemFormatError(
            f"{path}, line {line}, column {column!r}: non-finite value {raw!r}"
        )
    return value


def _check_header(
    fieldnames: list[str] | None, expected: tuple[str, ...], path: Path
) -> None:
    found = list(fieldnames or [])
    for column in expected:
        if column not in found:
            raise ProblemFormatError(f"{path}, line 1: missing column {column!r}")
    for column in found:
        if column not in expected:
            raise ProblemFormatError(f"{path}, line 1: unknown column {column!r}")


def load_criteria(path: str | Path) -> list[Criterion]:
    path = Path(path)
    criteria = []
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.DictReader(handle)
        _check_header(reader.fieldnames, CRITERIA_COLUMNS, path)
        for row in reader:
            line = reader.line_num
            token = (row["direction"] or "").strip()
            if token not in _DIRECTION_TOKENS:
                raise ProblemFormatError(
                    f"{path}, line {line}, column 'direction': "
                    f"unknown direction {token!r} (expected 'max' or 'min')"
                )
            criteria.append(
                Criterion(
                    id=row["id"].strip(),
                    name=row["name"].strip(),
                    unit=row["unit"].strip(),
                    direction=_DIRECTION_TOKENS[token],
                    lower=_parse_number(row["lower"], path, line, "lower"),
                    upper=_parse_number(row["upper"], path, line, "upper"),
                    weight=_parse_number(row["weight"], path, line, "weight"),
                )
            )
    return criteria


def load_alternatives(path: str | Path, criterion_ids: list[str]) -> list[Alternative]:
    path = Path(path)
    expected = ("id", "name", *criterion_ids)
    alternatives = []
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.DictReader(handle)
        _check_header(reader.fieldnames, expected, path)
        for row in reader:
            line = reader.line_num
            values = {
                cid: _parse_number(row[cid], path, line, cid) for cid in criterion_ids
            }
            alternatives.append(
                Alternative(id=row["id"].strip(), name=row["name"].strip(), values=values)
            )
    return alternatives


def load_problem(
    criteria_path: str | Path,
    alternatives_path: str | Path,
    clamp: bool = False,
) -> DecisionProblem:
    """Load and validate a problem from its two CSV files.

    With ``clamp`` set, out-of-range raw values are snapped to the nearest
    criterion bound before validation; every other violation still fails
    the load.
    """
    criteria = load_criteria(criteria_path)
    alternatives = load_alternatives(alternatives_path, [c.id for c in criteria])
    problem = DecisionProblem(criteria=tuple(criteria), alternatives=tuple(alternatives))
    if clamp:
        problem = clamp_values(problem)
    report = validate_problem(problem)
    if not report.ok:
        raise ProblemFormatError("; ".join(report.messages()))
    return problem


def save_problem(
    problem: DecisionProblem,
    criteria_path: str | Path,
    alternatives_path: str | Path,
) -> None:
    """Write a problem back to the two-file CSV layout (floats via repr, lossless)."""
    with open(criteria_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CRITERIA_COLUMNS)
        for c in problem.criteria:
            writer.writerow(
                [c.id, c.name, c.unit, c.direction.value, repr(float(c.lower)),
                 repr(float(c.upper)), repr(float(c.weight))]
            )
    cids = problem.criterion_ids()
    with open(alternatives_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "name", *cids])
        for a in problem.alternatives:
            writer.writerow([a.id, a.name, *(repr(float(a.values[cid])) for cid in cids)])


def career2019_paths() -> tuple[Path, Path]:
    """Paths of the bundled 2019 graduate career-survey dataset (11 criteria, 5 job offers)."""
    data = resources.files("bellmatch") / "data"
    return (
        Path(str(data / "career2019.criteria.csv")),
        Path(str(data / "career2019.alternatives.csv")),
    )


def load_career2019() -> DecisionProblem:
    criteria_path, alternatives_path = career2019_paths()
    return load_problem(criteria_path, alternatives_path)
