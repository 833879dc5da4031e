"""Two-sided stable matching between criteria and alternatives.

Preference profiles are complete and strict on both sides.  Deferred
acceptance (proposals held until a better one arrives) produces the
proposer-optimal stable matching; a brute-force enumerator over all
permutations serves as an oracle for small instances.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .bellinger import RankingResult
from .model import DecisionProblem

STRATEGIES = ("ratings-by-weight", "row-value")

ENUMERATION_LIMIT = 7


@dataclass(frozen=True)
class PreferenceProfile:
    """Strict, complete preference lists for two equal-sized sides.

    ``prefs_a[x]`` ranks every side-b agent from most to least preferred,
    and symmetrically for ``prefs_b``.
    """

    side_a: tuple[str, ...]
    side_b: tuple[str, ...]
    prefs_a: dict[str, tuple[str, ...]]
    prefs_b: dict[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "side_a", tuple(self.side_a))
        object.__setattr__(self, "side_b", tuple(self.side_b))
        object.__setattr__(self, "prefs_a", {k: tuple(v) for k, v in self.prefs_a.items()})
        object.__setattr__(self, "prefs_b", {k: tuple(v) for k, v in self.prefs_b.items()})
        if not self.side_a:
            raise ValueError("empty preference profile")
        if len(self.side_a) != len(self.side_b):
            raise ValueError(
                f"sides must have equal size: {len(self.side_a)} vs {len(self.side_b)}"
            )
        self._check_side(self.side_a, self.prefs_a, self.side_b)
        self._check_side(self.side_b, self.prefs_b, self.side_a)

    @staticmethod
    def _check_side(
        agents: tuple[str, ...], prefs: dict[str, tuple[str, ...]], opposite: tuple[str, ...]
    ) -> None:
        if len(set(agents)) != len(agents):
            raise ValueError("duplicate agent ids on one side")
        expected = sorted(opposite)
        for agent in agents:
            ranking = prefs.get(agent)
            if ranking is None:
                raise ValueError(f"{agent}: missing preference list")
            if sorted(ranking) != expected:
                raise ValueError(
                    f"{agent}: ranking is not a permutation of the opposite side"
                )

    def size(self) -> int:
        return len(self.side_a)


@dataclass(frozen=True)
class Matching:
    """A perfect matching as a set of (side-a id, side-b id) pairs.

    ``proposer_side`` records which side proposed when the matching came out
    of deferred acceptance (None for enumerated matchings), and ``proposals``
    the number of proposals it took.
    """

    pairs: frozenset[tuple[str, str]]
    proposer_side: str | None = None
    proposals: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))

    def partner_of_a(self) -> dict[str, str]:
        return {a: b for a, b in self.pairs}

    def partner_of_b(self) -> dict[str, str]:
        return {b: a for a, b in self.pairs}


def _keep_top(ids: Sequence[str], score: dict[str, float], k: int) -> list[str]:
    # top-k by score, ties by declaration order; kept ids stay in declaration order
    picked = sorted(range(len(ids)), key=lambda i: (-score[ids[i]], i))[:k]
    return [ids[i] for i in sorted(picked)]


def build_preferences(
    problem: DecisionProblem,
    ranking: RankingResult,
    strategy: str = "ratings-by-weight",
) -> PreferenceProfile:
    """Derive a two-sided preference profile from a ranked problem.

    Alternatives always rank criteria by descending weight.  Under
    "ratings-by-weight" every criterion ranks alternatives by descending
    total rating; under "row-value" each criterion ranks them by its own
    row of the weighted matrix.  All ties break by declaration order, so
    the profile is strict.  When the sides differ in size the larger one
    is truncated to its top agents (criteria by weight, alternatives by
    total rating).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if not problem.criteria or not problem.alternatives:
        raise ValueError("empty problem: need at least one criterion and one alternative")

    crit_ids = list(problem.criterion_ids())
    alt_ids = list(problem.alternative_ids())
    weights = {c.id: c.weight for c in problem.criteria}
    k = min(len(crit_ids), len(alt_ids))
    kept_crits = _keep_top(crit_ids, weights, k)
    kept_alts = _keep_top(alt_ids, ranking.totals, k)

    by_weight = tuple(sorted(kept_crits, key=lambda cid: -weights[cid]))
    by_total = tuple(sorted(kept_alts, key=lambda aid: -ranking.totals[aid]))

    prefs_b = {aid: by_weight for aid in kept_alts}
    if strategy == "ratings-by-weight":
        prefs_a = {cid: by_total for cid in kept_crits}
    else:
        row_of = {cid: i for i, cid in enumerate(ranking.weighted.criterion_ids)}
        col_of = {aid: j for j, aid in enumerate(ranking.weighted.alternative_ids)}
        prefs_a = {}
        for cid in kept_crits:
            row = ranking.weighted.entries[row_of[cid]]
            prefs_a[cid] = tuple(sorted(kept_alts, key=lambda aid: -row[col_of[aid]]))

    return PreferenceProfile(
        side_a=tuple(kept_crits),
        side_b=tuple(kept_alts),
        prefs_a=prefs_a,
        prefs_b=prefs_b,
    )


def gale_shapley(profile: PreferenceProfile, proposers: str = "a") -> Matching:
    """Deferred acceptance: proposers get their best partner over all stable matchings.

    Free proposers are processed first-in first-out; with complete strict
    lists on equal sides the loop issues at most n^2 proposals and every
    agent ends up matched.
    """
    if proposers not in ("a", "b"):
        raise ValueError(f"proposers must be 'a' or 'b', got {proposers!r}")
    if proposers == "a":
        proposing, prefs_p, prefs_r = profile.side_a, profile.prefs_a, profile.prefs_b
    else:
        proposing, prefs_p, prefs_r = profile.side_b, profile.prefs_b, profile.prefs_a

    receiver_rank = {
        receiver: {p: i for i, p in enumerate(ranking)}
        for receiver, ranking in prefs_r.items()
    }
    next_choice = {p: 0 for p in proposing}
    holds: dict[str, str] = {}
    free = deque(proposing)
    proposals = 0
    budget = len(proposing) ** 2

    while free:
        proposer = free.popleft()
        receiver = prefs_p[proposer][next_choice[proposer]]
        next_choice[proposer] += 1
        proposals += 1
        if proposals > budget:
            raise RuntimeError("proposal budget exceeded")  # unreachable for valid profiles
        held = holds.get(receiver)
        if held is None:
            holds[receiver] = proposer
        elif receiver_rank[receiver][proposer] < receiver_rank[receiver][held]:
            holds[receiver] = proposer
            free.append(held)
        else:
            free.append(proposer)

    if proposers == "a":
        pairs = frozenset((p, r) for r, p in holds.items())
    else:
        pairs = frozenset((r, p) for r, p in holds.items())
    return Matching(pairs=pairs, proposer_side=proposers, proposals=proposals)


def is_stable(
    profile: PreferenceProfile, matching: Matching
) -> tuple[bool, list[tuple[str, str]]]:
    """Scan every cross pair for instability.

    Returns (True, []) or (False, all blocking pairs): pairs (a, b) where
    both strictly prefer each other to their assigned partners, listed in
    declaration order of side a then side b.
    """
    a_set, b_set = set(profile.side_a), set(profile.side_b)
    partner_a: dict[str, str] = {}
    partner_b: dict[str, str] = {}
    for a, b in matching.pairs:
        if a not in a_set or b not in b_set:
            raise ValueError(f"matching references unknown agent: ({a}, {b})")
        if a in partner_a or b in partner_b:
            raise ValueError(f"not a perfect matching: ({a}, {b}) repeats an agent")
        partner_a[a] = b
        partner_b[b] = a
    if len(partner_a) != len(profile.side_a):
        raise ValueError("not a perfect matching: some agents are unmatched")

    rank_a = {a: {b: i for i, b in enumerate(profile.prefs_a[a])} for a in profile.side_a}
    rank_b = {b: {a: i for i, a in enumerate(profile.prefs_b[b])} for b in profile.side_b}

    blocking = []
    for a in profile.side_a:
        for b in profile.side_b:
            if partner_a[a] == b:
                continue
            if (
                rank_a[a][b] < rank_a[a][partner_a[a]]
                and rank_b[b][a] < rank_b[b][partner_b[b]]
            ):
                blocking.append((a, b))
    return (not blocking, blocking)


def enumerate_stable(profile: PreferenceProfile) -> list[Matching]:
    """All stable matchings by brute force, for instances of size <= 7.

    Results come back in lexicographic order of side-a partners (side-b
    declaration positions).
    """
    n = profile.size()
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"instance too large for enumeration: {n} > {ENUMERATION_LIMIT}"
        )
    stable = []
    for perm in itertools.permutations(range(n)):
        pairs = frozenset(
            (profile.side_a[i], profile.side_b[perm[i]]) for i in range(n)
        )
        candidate = Matching(pairs=pairs)
        ok, _ = is_stable(profile, candidate)
        if ok:
            stable.append(candidate)
    return stable
