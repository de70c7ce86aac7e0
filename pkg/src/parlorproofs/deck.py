"""Cards, generalized decks, and exact binomial arithmetic.

A deck is parameterized by a number of values V (ordered 1..V, with V the
highest, the "ace"), a number of suits S, and a number of extra wild cards W.
All counting here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Union


class InvalidDeckError(ValueError):
    """Deck parameters violate a structural bound (named in the message)."""


class CardParseError(ValueError):
    """A card token could not be parsed for the given deck."""


class AceRule(Enum):
    """Whether the top value may also sit below value 1 in a straight."""

    BOTH = "both"
    HIGH_ONLY = "high_only"


@dataclass(frozen=True)
class DeckSpec:
    """Parameters of a generalized deck: V values x S suits plus W wilds."""

    values: int = 13
    suits: int = 4
    wilds: int = 0
    ace_rule: AceRule = AceRule.BOTH

    def __post_init__(self) -> None:
        if self.values < 1:
            raise InvalidDeckError(f"values must be >= 1, got {self.values}")
        if self.suits < 1:
            raise InvalidDeckError(f"suits must be >= 1, got {self.suits}")
        if self.wilds < 0:
            raise InvalidDeckError(f"wilds must be >= 0, got {self.wilds}")
        if self.size < 5:
            raise InvalidDeckError(
                f"deck must hold at least 5 cards for a hand; "
                f"{self.values}*{self.suits}+{self.wilds} = {self.size} < 5"
            )

    @property
    def size(self) -> int:
        return self.values * self.suits + self.wilds


STANDARD_DECK = DeckSpec(values=13, suits=4, wilds=0, ace_rule=AceRule.BOTH)


@dataclass(frozen=True, order=True)
class Card:
    """A natural (value, suit) card; values and suits are 1-based."""

    value: int
    suit: int

    @property
    def is_wild(self) -> bool:
        return False


@dataclass(frozen=True, order=True)
class Wild:
    """A wild card, distinguishable from its siblings only by index."""

    index: int

    @property
    def is_wild(self) -> bool:
        return True


AnyCard = Union[Card, Wild]


@dataclass(frozen=True)
class Hand:
    """An unordered hand of exactly 5 distinct cards."""

    cards: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        cards = frozenset(self.cards)
        object.__setattr__(self, "cards", cards)
        if len(cards) != 5:
            raise ValueError(f"a hand holds exactly 5 distinct cards, got {len(cards)}")

    @property
    def naturals(self) -> tuple:
        return tuple(sorted(c for c in self.cards if not c.is_wild))

    @property
    def wilds(self) -> tuple:
        return tuple(sorted(c for c in self.cards if c.is_wild))

    def __iter__(self):
        return iter(self.cards)


def make_deck(spec: DeckSpec) -> list:
    """All V*S natural cards in value-major order, then the W wilds."""
    cards: list = [
        Card(value, suit)
        for value in range(1, spec.values + 1)
        for suit in range(1, spec.suits + 1)
    ]
    cards.extend(Wild(i) for i in range(1, spec.wilds + 1))
    return cards


# Standard 52-card token grammar.  Value tokens map onto the 1..13 order with
# the ace highest: 2 -> 1, 3 -> 2, ..., 10/T -> 9, J -> 10, Q -> 11, K -> 12,
# A -> 13.  Suits: C, D, H, S -> 1..4.
_STANDARD_VALUES = {
    "2": 1, "3": 2, "4": 3, "5": 4, "6": 5, "7": 6, "8": 7, "9": 8,
    "10": 9, "T": 9, "J": 10, "Q": 11, "K": 12, "A": 13,
}
_STANDARD_SUITS = {"C": 1, "D": 2, "H": 3, "S": 4}
_STANDARD_VALUE_NAMES = {1: "2", 2: "3", 3: "4", 4: "5", 5: "6", 6: "7",
                         7: "8", 8: "9", 9: "10", 10: "J", 11: "Q", 12: "K",
                         13: "A"}
_STANDARD_SUIT_NAMES = {1: "C", 2: "D", 3: "H", 4: "S"}

_STANDARD_RE = re.compile(r"^(10|[2-9TJQKA])([CDHS])$", re.IGNORECASE)
_GENERIC_RE = re.compile(r"^V([0-9]+)S([0-9]+)$", re.IGNORECASE)
_WILD_RE = re.compile(r"^W([0-9]+)$", re.IGNORECASE)


def parse_card(text: str, spec: DeckSpec = STANDARD_DECK) -> AnyCard:
    """Parse a card token (standard "AS", generic "v13s4", or wild "W1")."""
    token = text.strip()
    if not token:
        raise CardParseError("empty card token")

    m = _WILD_RE.match(token)
    if m:
        index = int(m.group(1))
        if not 1 <= index <= spec.wilds:
            raise CardParseError(
                f"wild index {index} out of range for a deck with {spec.wilds} wilds"
            )
        return Wild(index)

    m = _GENERIC_RE.match(token)
    if m:
        value, suit = int(m.group(1)), int(m.group(2))
        _check_range(token, value, suit, spec)
        return Card(value, suit)

    m = _STANDARD_RE.match(token)
    if m:
        value = _STANDARD_VALUES[m.group(1).upper()]
        suit = _STANDARD_SUITS[m.group(2).upper()]
        _check_range(token, value, suit, spec)
        return Card(value, suit)

    raise CardParseError(f"unrecognized card token {token!r}")


def _check_range(token: str, value: int, suit: int, spec: DeckSpec) -> None:
    if not 1 <= value <= spec.values:
        raise CardParseError(
            f"card {token!r}: value {value} out of range 1..{spec.values}"
        )
    if not 1 <= suit <= spec.suits:
        raise CardParseError(
            f"card {token!r}: suit {suit} out of range 1..{spec.suits}"
        )


def render_card(card: AnyCard, spec: DeckSpec = STANDARD_DECK) -> str:
    """Inverse of parse_card; standard tokens for the 13x4 deck, else generic."""
    if card.is_wild:
        return f"W{card.index}"
    if spec.values == 13 and spec.suits == 4:
        return _STANDARD_VALUE_NAMES[card.value] + _STANDARD_SUIT_NAMES[card.suit]
    return f"v{card.value}s{card.suit}"


def parse_hand(text: str, spec: DeckSpec = STANDARD_DECK) -> Hand:
    """Parse five whitespace-separated card tokens into a Hand."""
    tokens = text.split()
    if len(tokens) != 5:
        raise CardParseError(f"a hand needs 5 card tokens, got {len(tokens)}")
    cards = [parse_card(t, spec) for t in tokens]
    if len(set(cards)) != 5:
        raise CardParseError("duplicate card in hand")
    return Hand(frozenset(cards))


def binomial(n: int, r: int) -> int:
    """C(n, r), exact; 0 when r < 0 or r > n."""
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)
