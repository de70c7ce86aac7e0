"""Hand categories: classification, exact counts, probabilities, winners,
and combinatorial counting proofs for any wild-free deck.

Counts are closed-form products of binomials; the enumeration oracle in
`parlorproofs.oracle` provides the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .deck import AceRule, DeckSpec, Hand, binomial
from .proofdoc import ProofDocument, ProofStep, StepKind


class WildCardsUnsupportedError(ValueError):
    """Closed-form counts do not cover wild decks; use oracle.tally_all."""


class WildInHandError(ValueError):
    """classify() got a wild card; classify_with_wilds handles those."""


class HandCategory(IntEnum):
    """The ten categories, ordered by precedence (1 is strongest)."""

    ROYAL_FLUSH = 1
    STRAIGHT_FLUSH = 2
    FOUR_OF_A_KIND = 3
    FULL_HOUSE = 4
    FLUSH = 5
    STRAIGHT = 6
    THREE_OF_A_KIND = 7
    TWO_PAIR = 8
    PAIR = 9
    HIGH_CARD = 10

    @property
    def label(self) -> str:
        return self.name.replace("_", " ").title()

    @property
    def slug(self) -> str:
        return self.name.replace("_", "-").lower()

    @classmethod
    def from_slug(cls, slug: str) -> "HandCategory":
        key = slug.strip().replace("-", "_").upper()
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown hand category {slug!r}") from None


# The paper's game allows players to pick only the hands that are not ruled
# out for the assignment; the three strongest are off the table.
ALLOWED_PLAYER_CATEGORIES = tuple(
    c for c in HandCategory
    if c not in (HandCategory.ROYAL_FLUSH, HandCategory.STRAIGHT_FLUSH,
                 HandCategory.FOUR_OF_A_KIND)
)


@lru_cache(maxsize=None)
def straight_runs(spec: DeckSpec) -> tuple:
    """Distinct 5-value consecutive runs, as frozensets.

    With ace_rule=both the wheel {V,1,2,3,4} is included; for V=5 the wheel
    coincides with the only ordinary run, so runs are deduplicated.
    """
    V = spec.values
    if V < 5:
        return ()
    runs = [frozenset(range(low, low + 5)) for low in range(1, V - 3)]
    if spec.ace_rule is AceRule.BOTH:
        wheel = frozenset({V, 1, 2, 3, 4})
        if wheel not in runs:
            runs.append(wheel)
    return tuple(runs)


@lru_cache(maxsize=None)
def top_run(spec: DeckSpec) -> Optional[frozenset]:
    """The royal run V-4..V, or None when V < 5."""
    if spec.values < 5:
        return None
    return frozenset(range(spec.values - 4, spec.values + 1))


def _classify_counts(values: Sequence[int], suits: Sequence[int],
                     runs: frozenset, royal: Optional[frozenset]) -> HandCategory:
    """Classify 5 (value, suit) pairs given precomputed run sets.

    Accepts multisets (duplicates arise from wild substitution); a hand with
    5 copies of one value maps to FOUR_OF_A_KIND, the strongest applicable
    category in the ten-way taxonomy.
    """
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    shape = sorted(counts.values(), reverse=True)

    if shape[0] >= 4:
        return HandCategory.FOUR_OF_A_KIND
    if shape[0] == 3:
        return HandCategory.FULL_HOUSE if shape[1] == 2 else HandCategory.THREE_OF_A_KIND
    if shape[0] == 2:
        return HandCategory.TWO_PAIR if shape[1] == 2 else HandCategory.PAIR

    # Five distinct values: flush / straight territory.
    value_set = frozenset(counts)
    is_flush = len(set(suits)) == 1
    is_run = value_set in runs
    if is_flush and is_run:
        return HandCategory.ROYAL_FLUSH if value_set == royal else HandCategory.STRAIGHT_FLUSH
    if is_flush:
        return HandCategory.FLUSH
    if is_run:
        return HandCategory.STRAIGHT
    return HandCategory.HIGH_CARD


def classify(hand: Hand, spec: DeckSpec) -> HandCategory:
    """The unique highest-precedence category a wild-free hand satisfies."""
    if hand.wilds:
        raise WildInHandError("hand contains wilds; use classify_with_wilds")
    cards = hand.naturals
    for card in cards:
        if not (1 <= card.value <= spec.values and 1 <= card.suit <= spec.suits):
            raise ValueError(f"card {card} not legal for deck {spec}")
    runs = frozenset(straight_runs(spec))
    return _classify_counts([c.value for c in cards], [c.suit for c in cards],
                            runs, top_run(spec))


@dataclass(frozen=True)
class WildClassification:
    """Best achievable category plus an advisory five-of-a-kind flag.

    Five of a kind is outside the ten-category taxonomy; when the best
    substitution yields 5 copies of one value it is reported as
    FOUR_OF_A_KIND with the flag set.
    """

    category: HandCategory
    five_of_a_kind: bool


@lru_cache(maxsize=None)
def _natural_pairs(spec: DeckSpec) -> tuple:
    return tuple((v, s) for v in range(1, spec.values + 1)
                 for s in range(1, spec.suits + 1))


def _best_with_wilds(base_values: Sequence[int], base_suits: Sequence[int],
                     n_wilds: int, spec: DeckSpec) -> WildClassification:
    """Brute-force the best substitution of n_wilds wilds by natural cards."""
    runs = frozenset(straight_runs(spec))
    royal = top_run(spec)
    base_values = list(base_values)
    base_suits = list(base_suits)

    best = HandCategory.HIGH_CARD
    best_is_quint = False
    for subs in product(_natural_pairs(spec), repeat=n_wilds):
        values = base_values + [v for v, _ in subs]
        suits = base_suits + [s for _, s in subs]
        cat = _classify_counts(values, suits, runs, royal)
        if cat < best:
            best = cat
            best_is_quint = (cat is HandCategory.FOUR_OF_A_KIND
                             and max(values.count(v) for v in values) == 5)
            if best is HandCategory.ROYAL_FLUSH:
                break
        elif cat is best is HandCategory.FOUR_OF_A_KIND and not best_is_quint:
            best_is_quint = max(values.count(v) for v in values) == 5
    return WildClassification(best, best_is_quint)


def classify_with_wilds_detail(hand: Hand, spec: DeckSpec) -> WildClassification:
    """Best category over all substitutions of each wild by any natural card.

    Substitutions may duplicate cards already held: a wild standing in for
    a card's value and suit is legal.
    """
    naturals = hand.naturals
    n_wilds = len(hand.wilds)
    if n_wilds == 0:
        return WildClassification(classify(hand, spec), False)
    return _best_with_wilds([c.value for c in naturals],
                            [c.suit for c in naturals], n_wilds, spec)


def classify_with_wilds(hand: Hand, spec: DeckSpec) -> HandCategory:
    return classify_with_wilds_detail(hand, spec).category


def _require_wild_free(spec: DeckSpec) -> None:
    if spec.wilds > 0:
        raise WildCardsUnsupportedError(
            "closed-form counts are defined for wild-free decks only; "
            "use oracle.tally_all for decks with wilds"
        )


def count_category(category: HandCategory, spec: DeckSpec) -> int:
    """Closed-form count of 5-card hands in `category`; 0 when impossible."""
    _require_wild_free(spec)
    V, S = spec.values, spec.suits
    R = len(straight_runs(spec))
    C = binomial

    if category is HandCategory.ROYAL_FLUSH:
        return S if V >= 5 else 0
    if category is HandCategory.STRAIGHT_FLUSH:
        return (R - 1) * S if V >= 5 else 0
    if category is HandCategory.FOUR_OF_A_KIND:
        # Second term: all five copies of one value, possible only with S >= 5.
        return V * C(S, 4) * (V - 1) * S + V * C(S, 5)
    if category is HandCategory.FULL_HOUSE:
        return V * C(S, 3) * (V - 1) * C(S, 2)
    if category is HandCategory.FLUSH:
        return S * (C(V, 5) - R)
    if category is HandCategory.STRAIGHT:
        return R * (S ** 5 - S)
    if category is HandCategory.THREE_OF_A_KIND:
        return V * C(S, 3) * C(V - 1, 2) * S ** 2
    if category is HandCategory.TWO_PAIR:
        return C(V, 2) * C(S, 2) ** 2 * (V - 2) * S
    if category is HandCategory.PAIR:
        return V * C(S, 2) * C(V - 1, 3) * S ** 3
    if category is HandCategory.HIGH_CARD:
        return (C(V, 5) - R) * (S ** 5 - S)
    raise ValueError(f"unknown category {category!r}")


@dataclass(frozen=True)
class Probability:
    """Exact probability: unreduced count/total plus the reduced fraction."""

    count: int
    total: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.count, self.total)

    def decimal(self, digits: int = 6) -> str:
        """Decimal rendering to `digits` significant digits (approximate)."""
        if self.count == 0:
            return "0"
        return f"{float(self.fraction):.{digits}g}"

    def format(self) -> str:
        frac = self.fraction
        return (f"{self.count}/{self.total} = "
                f"{frac.numerator}/{frac.denominator} "
                f"≈ {self.decimal()}")


def probability(category: HandCategory, spec: DeckSpec) -> Probability:
    """count_category over the C(V*S, 5) sample space, exact."""
    _require_wild_free(spec)
    return Probability(count_category(category, spec), binomial(spec.size, 5))


@dataclass(frozen=True)
class WinnerReport:
    """Outcome of the lowest-probability-wins rule.

    `winner` is set for a unique winner; `tied` lists all minimal players
    when probabilities are equal; `excluded` holds entries whose category
    cannot occur in the deck (probability 0).
    """

    winner: Optional[str]
    tied: tuple
    excluded: tuple
    ranking: tuple  # (name, category, Probability), best first

    @property
    def is_tie(self) -> bool:
        return len(self.tied) > 1


def determine_winner(entries: Iterable, spec: DeckSpec) -> WinnerReport:
    """Apply the rule that the hand with the lowest probability wins."""
    entries = list(entries)
    if not entries:
        raise ValueError("no players given")

    scored = [(name, cat, probability(cat, spec)) for name, cat in entries]
    excluded = tuple((name, cat) for name, cat, p in scored if p.count == 0)
    viable = [(name, cat, p) for name, cat, p in scored if p.count > 0]
    ranking = tuple(sorted(viable, key=lambda e: (e[2].fraction, e[0])))

    if not viable:
        return WinnerReport(None, (), excluded, ())
    lowest = min(p.fraction for _, _, p in viable)
    minimal = tuple(name for name, _, p in ranking if p.fraction == lowest)
    winner = minimal[0] if len(minimal) == 1 else None
    return WinnerReport(winner, minimal if len(minimal) > 1 else (), excluded, ranking)


# --- combinatorial proof documents -----------------------------------------


@dataclass(frozen=True)
class _Factor:
    formula: str
    value: int
    desc: str


def _choose(n: int, r: int, desc: str) -> _Factor:
    return _Factor(f"C({n},{r})", binomial(n, r), desc)


def _power(base: int, exp: int, desc: str) -> _Factor:
    return _Factor(f"{base}^{exp}", base ** exp, desc)


def _diff(formula: str, value: int, desc: str) -> _Factor:
    return _Factor(formula, value, desc)


def _count_terms(category: HandCategory, spec: DeckSpec) -> list:
    """Choice-step factorizations per category; count = sum of term products."""
    V, S = spec.values, spec.suits
    R = len(straight_runs(spec))
    C = binomial

    if category is HandCategory.ROYAL_FLUSH:
        if V < 5:
            return []
        return [[_choose(S, 1, "choose the suit of the top run")]]
    if category is HandCategory.STRAIGHT_FLUSH:
        if V < 5:
            return []
        return [[
            _choose(R - 1, 1, "choose a run of 5 consecutive values below the top run"),
            _choose(S, 1, "choose the shared suit"),
        ]]
    if category is HandCategory.FOUR_OF_A_KIND:
        terms = [[
            _choose(V, 1, "choose the value appearing four times"),
            _choose(S, 4, "choose 4 of the suits for that value"),
            _choose(V - 1, 1, "choose the value of the additional card"),
            _choose(S, 1, "choose its suit"),
        ]]
        if S >= 5:
            terms.append([
                _choose(V, 1, "choose a value appearing five times"),
                _choose(S, 5, "choose 5 of its suits"),
            ])
        return terms
    if category is HandCategory.FULL_HOUSE:
        return [[
            _choose(V, 1, "choose the value for the triple"),
            _choose(S, 3, "choose 3 of the suits for the triple"),
            _choose(V - 1, 1, "choose a different value for the pair"),
            _choose(S, 2, "choose 2 of the suits for the pair"),
        ]]
    if category is HandCategory.FLUSH:
        return [[
            _choose(S, 1, "choose the shared suit"),
            _diff(f"(C({V},5) - {R})", C(V, 5) - R,
                  "choose 5 values that do not form a consecutive run"),
        ]]
    if category is HandCategory.STRAIGHT:
        return [[
            _choose(R, 1, "choose the run of 5 consecutive values"),
            _diff(f"({S}^5 - {S})", S ** 5 - S,
                  "choose a suit for each value, excluding the all-one-suit picks"),
        ]]
    if category is HandCategory.THREE_OF_A_KIND:
        return [[
            _choose(V, 1, "choose the value for the triple"),
            _choose(S, 3, "choose 3 of the suits for the triple"),
            _choose(V - 1, 2, "choose 2 different values for the remaining cards"),
            _power(S, 2, "choose a suit for each of those values"),
        ]]
    if category is HandCategory.TWO_PAIR:
        return [[
            _choose(V, 2, "choose the two paired values"),
            _diff(f"C({S},2)^2", C(S, 2) ** 2, "choose 2 suits for each pair"),
            _choose(V - 2, 1, "choose the value of the additional card"),
            _choose(S, 1, "choose its suit"),
        ]]
    if category is HandCategory.PAIR:
        return [[
            _choose(V, 1, "choose the paired value"),
            _choose(S, 2, "choose 2 of its suits"),
            _choose(V - 1, 3, "choose 3 different values for the remaining cards"),
            _power(S, 3, "choose a suit for each of those values"),
        ]]
    if category is HandCategory.HIGH_CARD:
        return [[
            _diff(f"(C({V},5) - {R})", C(V, 5) - R,
                  "choose 5 values that do not form a consecutive run"),
            _diff(f"({S}^5 - {S})", S ** 5 - S,
                  "choose a suit for each value, excluding the all-one-suit picks"),
        ]]
    raise ValueError(f"unknown category {category!r}")


def combinatorial_proof(category: HandCategory, spec: DeckSpec) -> ProofDocument:
    """Claim-Proof counting document whose numbers match count_category."""
    _require_wild_free(spec)
    terms = _count_terms(category, spec)
    total_hands = binomial(spec.size, 5)
    count = sum(_term_product(t) for t in terms)
    prob = Probability(count, total_hands)
    deck_desc = f"a deck with {spec.values} values and {spec.suits} suits"

    steps = [ProofStep(
        StepKind.CLAIM,
        f"There are exactly {count} {category.label} hands in {deck_desc}; "
        f"the probability of drawing one is {prob.format()}.",
    )]
    if not terms or count == 0:
        steps.append(ProofStep(
            StepKind.OBSERVATION,
            f"No 5-card hand of {deck_desc} can satisfy the {category.label} "
            f"definition, so the count is 0.",
        ))
    else:
        for term in terms:
            for factor in term:
                steps.append(ProofStep(
                    StepKind.COMPUTATION,
                    f"{factor.desc}: {factor.formula} = {factor.value}",
                ))
            steps.append(ProofStep(
                StepKind.COMPUTATION,
                "·".join(f.formula for f in term) + f" = {_term_product(term)}",
            ))
        if len(terms) > 1:
            steps.append(ProofStep(
                StepKind.COMPUTATION,
                "adding the disjoint cases: "
                + " + ".join(str(_term_product(t)) for t in terms)
                + f" = {count}",
            ))
    steps.append(ProofStep(
        StepKind.COMPUTATION,
        f"divide by the number of 5-card hands, C({spec.size},5) = {total_hands}",
    ))
    steps.append(ProofStep(
        StepKind.CONCLUSION,
        f"the probability of a {category.label} is {prob.format()}",
    ))
    steps.append(ProofStep(StepKind.QED, "∎"))
    return ProofDocument(f"Counting {category.label} hands", tuple(steps))


def _term_product(term: list) -> int:
    out = 1
    for factor in term:
        out *= factor.value
    return out
