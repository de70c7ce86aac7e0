"""Brute-force ground truth: enumerate every 5-card hand and tally categories.

This module is the independent check on the closed forms in
`parlorproofs.hands`; it never calls count_category.  Enumeration walks
combinations in lexicographic index order and classifies each hand from its
value/suit multiplicity histogram.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .deck import DeckSpec, binomial, make_deck
from .hands import (HandCategory, WildCardsUnsupportedError, _best_with_wilds,
                    count_category, straight_runs, top_run)

DEFAULT_ENUMERATION_CAP = 10 ** 8


class EnumerationCapError(ValueError):
    """The deck's hand count exceeds the configured enumeration cap."""


def _classify_pairs(hand, runs, royal) -> HandCategory:
    """Classify 5 (value, suit) pairs of distinct natural cards."""
    counts: dict = {}
    for v, _ in hand:
        counts[v] = counts.get(v, 0) + 1
    m = len(counts)
    if m == 5:
        value_set = frozenset(counts)
        s0 = hand[0][1]
        flush = all(s == s0 for _, s in hand)
        run = value_set in runs
        if flush and run:
            return (HandCategory.ROYAL_FLUSH if value_set == royal
                    else HandCategory.STRAIGHT_FLUSH)
        if flush:
            return HandCategory.FLUSH
        if run:
            return HandCategory.STRAIGHT
        return HandCategory.HIGH_CARD
    if m == 4:
        return HandCategory.PAIR
    if m == 3:
        return (HandCategory.THREE_OF_A_KIND if 3 in counts.values()
                else HandCategory.TWO_PAIR)
    if m == 2:
        return (HandCategory.FOUR_OF_A_KIND if 4 in counts.values()
                else HandCategory.FULL_HOUSE)
    return HandCategory.FOUR_OF_A_KIND  # five copies of one value (S >= 5)


def _tally_chunk(spec: DeckSpec, first_lo: int, first_hi: int) -> dict:
    """Tally hands whose lowest deck index lies in [first_lo, first_hi)."""
    deck = make_deck(spec)
    pairs = [None if c.is_wild else (c.value, c.suit) for c in deck]
    runs = frozenset(straight_runs(spec))
    royal = top_run(spec)
    tallies = {cat: 0 for cat in HandCategory}

    for i in range(first_lo, first_hi):
        first = pairs[i]
        rest = pairs[i + 1:]
        for combo in combinations(rest, 4):
            hand = (first,) + combo
            if None in hand:
                naturals = [p for p in hand if p is not None]
                best = _best_with_wilds([v for v, _ in naturals],
                                        [s for _, s in naturals],
                                        5 - len(naturals), spec)
                tallies[best.category] += 1
            else:
                tallies[_classify_pairs(hand, runs, royal)] += 1
    return tallies


def tally_all(spec: DeckSpec, cap: int = DEFAULT_ENUMERATION_CAP,
              workers: int = 1) -> dict:
    """Exact per-category tally over all C(deck size, 5) hands.

    Results are bit-identical for any worker count; workers only partition
    the first-card index range.
    """
    total = binomial(spec.size, 5)
    if total > cap:
        raise EnumerationCapError(
            f"enumerating {total} hands exceeds the cap of {cap}"
        )

    n = spec.size
    if workers <= 1:
        return _tally_chunk(spec, 0, n)

    # First-card chunks have very uneven sizes; hand out small strides.
    bounds = list(range(0, n, 2)) + [n]
    chunks = list(zip(bounds, bounds[1:]))
    tallies = {cat: 0 for cat in HandCategory}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_tally_chunk, [spec] * len(chunks),
                             [lo for lo, _ in chunks],
                             [hi for _, hi in chunks]):
            for cat, count in part.items():
                tallies[cat] += count
    return tallies


@dataclass(frozen=True)
class VerificationRow:
    category: HandCategory
    closed_form: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.closed_form == self.oracle


@dataclass(frozen=True)
class VerificationReport:
    spec: DeckSpec
    rows: tuple
    total: int

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def render_text(self) -> str:
        lines = [
            f"deck: {self.spec.values} values x {self.spec.suits} suits, "
            f"ace rule {self.spec.ace_rule.value}",
            f"hands enumerated: {self.total}",
        ]
        for row in self.rows:
            status = "PASS" if row.ok else "FAIL"
            lines.append(f"{status}  {row.category.label:<16} "
                         f"closed form {row.closed_form:>10}  "
                         f"oracle {row.oracle:>10}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def render_csv(self) -> str:
        lines = ["category,closed_form,oracle,status"]
        for row in self.rows:
            lines.append(f"{row.category.slug},{row.closed_form},{row.oracle},"
                         + ("pass" if row.ok else "fail"))
        return "\n".join(lines)


def verify_closed_forms(spec: DeckSpec, cap: int = DEFAULT_ENUMERATION_CAP,
                        workers: int = 1) -> VerificationReport:
    """Compare closed-form counts against the enumeration, per category."""
    if spec.wilds > 0:
        raise WildCardsUnsupportedError(
            "closed forms cover wild-free decks only; nothing to verify"
        )
    tallies = tally_all(spec, cap=cap, workers=workers)
    rows = tuple(
        VerificationRow(cat, count_category(cat, spec), tallies[cat])
        for cat in HandCategory
    )
    return VerificationReport(spec, rows, sum(tallies.values()))
