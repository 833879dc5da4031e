"""Exact subset counting."""
from __future__ import annotations


def count_subsets(c: int, p: int) -> int:
    """Number of ways to pick p items out of c, as an exact integer.

    Evaluated by the multiplicative formula (running product divided
    stepwise) rather than through factorials, so no oversized
    intermediates appear.
    """
    if c < 0 or p < 0:
        raise ValueError(f"invalid subset size: c={c}, p={p} must be non-negative")
    if p > c:
        raise ValueError(f"invalid subset size: p={p} exceeds c={c}")
    p = min(p, c - p)
    result = 1
    for i in range(1, p + 1):
        # exact: any i consecutive integers contain a multiple of i
        result = result * (c - p + i) // i
    return result
