"""Report rendering: aligned text tables, JSON, or CSV.

Display numbers are rounded half-up at the requested precision with '.'
as the decimal separator and '\\n' line endings, so identical inputs
render byte-identically everywhere.  JSON carries full-precision floats
for machine consumption.
"""
from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .bellinger import RankingResult
from .matching import Matching
from .sensitivity import SensitivityReport

FORMATS = ("table", "json", "csv")
SCALES = ("percent", "unit")


def format_number(x: float, precision: int) -> str:
    """Fixed-point decimal string, rounded half-up."""
    if x == 0:
        x = 0.0  # avoid '-0.00'
    quantum = Decimal(1).scaleb(-precision)
    return str(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_UP))


def _scale_factor(scale: str) -> float:
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}; expected one of {SCALES}")
    return 1.0 if scale == "percent" else 0.01


def _align(rows: list[list[str]]) -> str:
    # first column left-aligned, the rest right-aligned
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [cell.rjust(widths[i]) for i, cell in enumerate(row) if i > 0]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _matching_rows(ranking: RankingResult, matching: Matching) -> list[tuple[str, str, float, float]]:
    # (criterion, partner, weight, partner total) sorted by descending weight,
    # declaration order on exact weight ties
    weight_of = dict(zip(ranking.weighted.criterion_ids, ranking.weighted.weights))
    position = {cid: i for i, cid in enumerate(ranking.weighted.criterion_ids)}
    pairs = sorted(matching.pairs, key=lambda ab: (-weight_of[ab[0]], position[ab[0]]))
    return [(a, b, weight_of[a], ranking.totals[b]) for a, b in pairs]


def _render_table(
    ranking: RankingResult, matching: Matching | None, precision: int, factor: float
) -> str:
    alts = ranking.normalized.alternative_ids
    blocks = []

    rows = [["criterion", *alts]]
    for cid, row in zip(ranking.normalized.criterion_ids, ranking.normalized.entries):
        rows.append([cid, *(format_number(x, precision) for x in row)])
    blocks.append("normalized matrix\n" + _align(rows))

    rows = [["weight", "criterion", *alts]]
    for cid, w, row in zip(
        ranking.weighted.criterion_ids, ranking.weighted.weights, ranking.weighted.entries
    ):
        rows.append(
            [format_number(w, 3), cid, *(format_number(x, precision + 1) for x in row)]
        )
    # weighted cells get one extra digit: contributions are weight-sized
    blocks.append("weighted matrix\n" + _align(rows))

    rows = [["variant", "total"]]
    for aid in ranking.order:
        rows.append([aid, format_number(factor * ranking.totals[aid], precision)])
    blocks.append("total ratings\n" + _align(rows) + f"\nbest: {ranking.best}")

    if matching is not None:
        rows = [["weight", "criterion", "position", "total"]]
        for a, b, w, total in _matching_rows(ranking, matching):
            rows.append([format_number(w, 3), a, b, format_number(factor * total, precision)])
        blocks.append("stable matching\n" + _align(rows))

    return "\n\n".join(blocks) + "\n"


def _render_json(
    ranking: RankingResult, matching: Matching | None, scale: str, factor: float
) -> str:
    doc: dict = {
        "scale": scale,
        "criteria": list(ranking.normalized.criterion_ids),
        "alternatives": list(ranking.normalized.alternative_ids),
        "weights": list(ranking.weighted.weights),
        "normalized": [list(row) for row in ranking.normalized.entries],
        "weighted": [list(row) for row in ranking.weighted.entries],
        "totals": {aid: factor * total for aid, total in ranking.totals.items()},
        "order": list(ranking.order),
        "best": ranking.best,
    }
    if matching is not None:
        doc["matching"] = {
            "proposer_side": matching.proposer_side,
            "pairs": [[a, b] for a, b, _, _ in _matching_rows(ranking, matching)],
        }
    return json.dumps(doc, indent=2) + "\n"


def _csv_block(title: str, rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return f"# {title}\n" + buffer.getvalue()


def _render_csv(
    ranking: RankingResult, matching: Matching | None, precision: int, factor: float
) -> str:
    alts = list(ranking.normalized.alternative_ids)
    blocks = []

    rows = [["criterion", *alts]]
    for cid, row in zip(ranking.normalized.criterion_ids, ranking.normalized.entries):
        rows.append([cid, *(format_number(x, precision) for x in row)])
    blocks.append(_csv_block("normalized", rows))

    rows = [["weight", "criterion", *alts]]
    for cid, w, row in zip(
        ranking.weighted.criterion_ids, ranking.weighted.weights, ranking.weighted.entries
    ):
        rows.append([format_number(w, 3), cid, *(format_number(x, precision + 1) for x in row)])
    blocks.append(_csv_block("weighted", rows))

    rows = [["variant", "total"]]
    for aid in ranking.order:
        rows.append([aid, format_number(factor * ranking.totals[aid], precision)])
    blocks.append(_csv_block("totals", rows))

    if matching is not None:
        rows = [["weight", "criterion", "position", "total"]]
        for a, b, w, total in _matching_rows(ranking, matching):
            rows.append([format_number(w, 3), a, b, format_number(factor * total, precision)])
        blocks.append(_csv_block("matching", rows))

    return "\n".join(blocks)


def write_report(
    ranking: RankingResult,
    matching: Matching | None = None,
    fmt: str = "table",
    precision: int = 2,
    scale: str = "percent",
) -> str:
    """Render a ranking (and optionally a matching) in the requested format.

    The matching section is omitted entirely when no matching is given.
    ``scale`` applies to the totals: "percent" keeps the x100 scale,
    "unit" divides it back out.
    """
    factor = _scale_factor(scale)
    if fmt == "table":
        return _render_table(ranking, matching, precision, factor)
    if fmt == "json":
        return _render_json(ranking, matching, scale, factor)
    if fmt == "csv":
        return _render_csv(ranking, matching, precision, factor)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_sensitivity(report: SensitivityReport, precision: int = 2) -> str:
    """Plain-text sensitivity report; byte-stable for identical inputs."""
    lines = [
        "weight sensitivity report",
        f"delta: {report.delta!r}",
        f"samples: {report.samples}",
        f"seed: {report.seed}",
        f"base best: {report.base_best}",
        "winner histogram:",
    ]
    ordered = sorted(report.winner_histogram.items(), key=lambda kv: (-kv[1], kv[0]))
    for aid, count in ordered:
        share = 100.0 * count / report.samples
        lines.append(f"  {aid}: {count} ({format_number(share, precision)}%)")
    if report.min_flip_delta is None:
        lines.append("min flip delta: none found")
    else:
        lines.append(f"min flip delta: {report.min_flip_delta!r}")
    mean_concordance = sum(report.rank_correlations) / len(report.rank_correlations)
    lines.append(f"mean rank concordance: {format_number(mean_concordance, 6)}")
    return "\n".join(lines) + "\n"
