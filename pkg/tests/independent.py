"""Independent brute-force checkers used by the tests.

These deliberately avoid the library's classification and trail code paths:
the classifier works from the category definitions via Counter histograms
and predicate checks, and the trail search is plain backtracking.
"""

from collections import Counter

from parlorproofs.deck import AceRule, DeckSpec
from parlorproofs.hands import HandCategory


def run_value_sets(spec: DeckSpec) -> set:
    """All sets of 5 consecutive values, ace-low run included per the rule."""
    V = spec.values
    if V < 5:
        return set()
    runs = {frozenset(range(lo, lo + 5)) for lo in range(1, V - 3)}
    if spec.ace_rule is AceRule.BOTH:
        runs.add(frozenset({V, 1, 2, 3, 4}))
    return runs


def naive_classify(cards, spec: DeckSpec) -> HandCategory:
    """Predicate-based classification of 5 (value, suit) pairs.

    Accepts multisets (wild substitutions may duplicate held cards); five
    copies of one value falls into FOUR_OF_A_KIND.
    """
    values = Counter(v for v, _ in cards)
    suits = {s for _, s in cards}
    shape = sorted(values.values(), reverse=True)
    distinct = frozenset(values)
    runs = run_value_sets(spec)
    top = frozenset(range(spec.values - 4, spec.values + 1)) if spec.values >= 5 else None

    is_flush = len(suits) == 1
    is_straight = len(distinct) == 5 and distinct in runs

    if is_flush and distinct == top:
        return HandCategory.ROYAL_FLUSH
    if is_flush and is_straight:
        return HandCategory.STRAIGHT_FLUSH
    if shape[0] >= 4:
        return HandCategory.FOUR_OF_A_KIND
    if shape[:2] == [3, 2]:
        return HandCategory.FULL_HOUSE
    if is_flush:
        return HandCategory.FLUSH
    if is_straight:
        return HandCategory.STRAIGHT
    if shape[0] == 3:
        return HandCategory.THREE_OF_A_KIND
    if shape[:2] == [2, 2]:
        return HandCategory.TWO_PAIR
    if shape[0] == 2:
        return HandCategory.PAIR
    return HandCategory.HIGH_CARD


def best_over_substitutions(naturals, n_wilds, spec: DeckSpec) -> HandCategory:
    """Max (strongest) category over every explicit wild substitution."""
    from itertools import product

    deck = [(v, s) for v in range(1, spec.values + 1)
            for s in range(1, spec.suits + 1)]
    best = HandCategory.HIGH_CARD
    for subs in product(deck, repeat=n_wilds):
        cat = naive_classify(list(naturals) + list(subs), spec)
        if cat < best:
            best = cat
    return best


def trail_exists_backtracking(edge_pairs) -> bool:
    """Exhaustive search for a walk using every edge exactly once."""
    edges = list(edge_pairs)
    if not edges:
        return False
    total = len(edges)

    def extend(vertex, used):
        if len(used) == total:
            return True
        for i, (u, v) in enumerate(edges):
            if i in used or vertex not in (u, v):
                continue
            nxt = v if vertex == u else u
            if extend(nxt, used | {i}):
                return True
        return False

    starts = {w for pair in edges for w in pair}
    return any(extend(s, frozenset()) for s in starts)
