"""Rubric data model and scoring: point-weighted rubrics with per-criterion
multipliers, and 5-level trait rubrics.

Awards allow half points; everything is stored internally as integer
half-points so totals stay exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

LEVEL_LABELS = {
    1: "Does not meet (1)",
    2: "Attempted (2)",
    3: "Approaches (3)",
    4: "Meets (4)",
    5: "Exceeds (5)",
}


class RubricFormatError(ValueError):
    """Rubric text is malformed or violates a declared total."""


class MarkSheetError(ValueError):
    """Marks are malformed, incomplete, duplicated, or out of range."""


def _parse_half_points(token: str, context: str) -> int:
    """Parse a value with 0.5 granularity into half-points."""
    try:
        doubled = float(token) * 2
    except ValueError:
        raise MarkSheetError(f"{context}: not a number: {token!r}") from None
    if doubled != int(doubled):
        raise MarkSheetError(
            f"{context}: values are limited to 0.5 granularity, got {token}"
        )
    return int(doubled)


def _render_half_points(hp: int) -> str:
    return str(hp // 2) if hp % 2 == 0 else f"{hp / 2:.1f}"


@dataclass(frozen=True)
class Criterion:
    description: str
    points: int  # full points
    multiplier: int = 1

    @property
    def weighted_points(self) -> int:
        return self.points * self.multiplier


@dataclass(frozen=True)
class Section:
    name: str
    criteria: tuple


@dataclass(frozen=True)
class PointRubric:
    name: str
    maximum: int
    sections: tuple

    def __post_init__(self) -> None:
        seen = set()
        declared = 0
        for section in self.sections:
            for criterion in section.criteria:
                if criterion.description in seen:
                    raise RubricFormatError(
                        f"duplicate criterion {criterion.description!r}"
                    )
                seen.add(criterion.description)
                declared += criterion.weighted_points
        if declared != self.maximum:
            raise RubricFormatError(
                f"criteria sum to {declared}, not the declared maximum "
                f"{self.maximum}"
            )

    def criteria(self) -> tuple:
        return tuple(c for s in self.sections for c in s.criteria)


@dataclass(frozen=True)
class Trait:
    name: str
    levels: tuple  # descriptions for levels 1..5

    def __post_init__(self) -> None:
        if len(self.levels) != 5:
            raise RubricFormatError(
                f"trait {self.name!r} needs 5 level descriptions, "
                f"got {len(self.levels)}"
            )


@dataclass(frozen=True)
class TraitRubric:
    name: str
    traits: tuple

    def __post_init__(self) -> None:
        names = [t.name for t in self.traits]
        if len(set(names)) != len(names):
            raise RubricFormatError("duplicate trait name")

    @property
    def maximum(self) -> int:
        return 5 * len(self.traits)


Rubric = Union[PointRubric, TraitRubric]


_POINT_HEADER_RE = re.compile(r"^rubric\s+point\s+(.+?)\s+max=(\d+)$")
_TRAIT_HEADER_RE = re.compile(r"^rubric\s+trait\s+(.+)$")
_SECTION_RE = re.compile(r"^section\s+(.+)$")
_CRITERION_RE = re.compile(r'^criterion\s+"([^"]+)"\s+points=(\d+)(?:\s+x(\d+))?$')
_TRAIT_RE = re.compile(r'^trait\s+"([^"]+)"$')
_LEVEL_RE = re.compile(r'^level\s+([1-5])\s+"([^"]+)"$')


def load_rubric(text: str) -> Rubric:
    """Parse rubric text into a PointRubric or TraitRubric; the point
    rubric's declared maximum is validated against the criteria."""
    lines = [(n, raw.split("#", 1)[0].strip())
             for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, line) for n, line in lines if line]
    if not lines:
        raise RubricFormatError("empty rubric text")

    first_no, first = lines[0]
    m = _POINT_HEADER_RE.match(first)
    if m:
        return _load_point(m.group(1), int(m.group(2)), lines[1:])
    m = _TRAIT_HEADER_RE.match(first)
    if m:
        return _load_trait(m.group(1), lines[1:])
    raise RubricFormatError(
        f"line {first_no}: expected 'rubric point <name> max=<int>' or "
        f"'rubric trait <name>'"
    )


def _load_point(name: str, maximum: int, lines: list) -> PointRubric:
    sections: list = []
    current: list = []
    current_name = None
    for lineno, line in lines:
        m = _SECTION_RE.match(line)
        if m:
            if current_name is not None:
                sections.append(Section(current_name, tuple(current)))
            current_name, current = m.group(1), []
            continue
        m = _CRITERION_RE.match(line)
        if m:
            if current_name is None:
                raise RubricFormatError(
                    f"line {lineno}: criterion before any section"
                )
            current.append(Criterion(m.group(1), int(m.group(2)),
                                     int(m.group(3) or 1)))
            continue
        raise RubricFormatError(f"line {lineno}: unrecognized line {line!r}")
    if current_name is not None:
        sections.append(Section(current_name, tuple(current)))
    return PointRubric(name, maximum, tuple(sections))


def _load_trait(name: str, lines: list) -> TraitRubric:
    traits: list = []
    current_name = None
    levels: dict = {}

    def finish(lineno):
        if current_name is None:
            return
        if sorted(levels) != [1, 2, 3, 4, 5]:
            raise RubricFormatError(
                f"line {lineno}: trait {current_name!r} must define levels 1..5"
            )
        traits.append(Trait(current_name, tuple(levels[k] for k in range(1, 6))))

    for lineno, line in lines:
        m = _TRAIT_RE.match(line)
        if m:
            finish(lineno)
            current_name, levels = m.group(1), {}
            continue
        m = _LEVEL_RE.match(line)
        if m:
            if current_name is None:
                raise RubricFormatError(f"line {lineno}: level before any trait")
            k = int(m.group(1))
            if k in levels:
                raise RubricFormatError(f"line {lineno}: duplicate level {k}")
            levels[k] = m.group(2)
            continue
        raise RubricFormatError(f"line {lineno}: unrecognized line {line!r}")
    finish("end")
    return TraitRubric(name, tuple(traits))


def render_rubric(rubric: Rubric) -> str:
    """Inverse of load_rubric (round-trips exactly)."""
    lines = []
    if isinstance(rubric, PointRubric):
        lines.append(f"rubric point {rubric.name} max={rubric.maximum}")
        for section in rubric.sections:
            lines.append(f"section {section.name}")
            for c in section.criteria:
                suffix = f" x{c.multiplier}" if c.multiplier != 1 else ""
                lines.append(f'criterion "{c.description}" points={c.points}{suffix}')
    else:
        lines.append(f"rubric trait {rubric.name}")
        for trait in rubric.traits:
            lines.append(f'trait "{trait.name}"')
            for k, desc in enumerate(trait.levels, start=1):
                lines.append(f'level {k} "{desc}"')
    return "\n".join(lines) + "\n"


_AWARD_RE = re.compile(r'^award\s+"([^"]+)"\s+([0-9.]+)$')
_MARK_LEVEL_RE = re.compile(r'^level\s+"([^"]+)"\s+([1-5])$')


@dataclass(frozen=True)
class MarkSheet:
    """Awarded values: half-points per criterion description, or a 1..5
    level per trait name."""

    awards_hp: tuple  # ((description, half_points), ...)
    levels: tuple     # ((trait name, level), ...)


def parse_marks(text: str) -> MarkSheet:
    awards: list = []
    levels: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _AWARD_RE.match(line)
        if m:
            awards.append((m.group(1),
                           _parse_half_points(m.group(2), f"line {lineno}")))
            continue
        m = _MARK_LEVEL_RE.match(line)
        if m:
            levels.append((m.group(1), int(m.group(2))))
            continue
        raise MarkSheetError(f"line {lineno}: unrecognized line {line!r}")
    return MarkSheet(tuple(awards), tuple(levels))


def full_marks(rubric: Rubric) -> MarkSheet:
    if isinstance(rubric, PointRubric):
        return MarkSheet(tuple((c.description, 2 * c.points)
                               for c in rubric.criteria()), ())
    return MarkSheet((), tuple((t.name, 5) for t in rubric.traits))


def zero_marks(rubric: Rubric) -> MarkSheet:
    if isinstance(rubric, PointRubric):
        return MarkSheet(tuple((c.description, 0) for c in rubric.criteria()), ())
    return MarkSheet((), tuple((t.name, 1) for t in rubric.traits))


@dataclass(frozen=True)
class ScoreRow:
    name: str
    awarded_hp: int
    maximum_hp: int


@dataclass(frozen=True)
class ScoreReport:
    rows: tuple  # per section (point rubric) or per trait
    total_hp: int
    maximum_hp: int

    @property
    def total(self) -> float:
        return self.total_hp / 2

    @property
    def maximum(self) -> float:
        return self.maximum_hp / 2

    def render_text(self) -> str:
        lines = []
        for row in self.rows:
            lines.append(f"{row.name}: {_render_half_points(row.awarded_hp)}"
                         f"/{_render_half_points(row.maximum_hp)}")
        lines.append(f"total: {_render_half_points(self.total_hp)}"
                     f"/{_render_half_points(self.maximum_hp)}")
        return "\n".join(lines)


def score(rubric: Rubric, marks: MarkSheet) -> ScoreReport:
    """Total the marks against the rubric; marks must cover every criterion
    or trait exactly once and stay in range."""
    if isinstance(rubric, PointRubric):
        return _score_point(rubric, marks)
    return _score_trait(rubric, marks)


def _score_point(rubric: PointRubric, marks: MarkSheet) -> ScoreReport:
    if marks.levels:
        raise MarkSheetError("trait levels given for a point rubric")
    awarded: dict = {}
    for description, hp in marks.awards_hp:
        if description in awarded:
            raise MarkSheetError(f"duplicate award for {description!r}")
        awarded[description] = hp

    rows = []
    total = 0
    for section in rubric.sections:
        subtotal = 0
        for criterion in section.criteria:
            if criterion.description not in awarded:
                raise MarkSheetError(f"missing award for {criterion.description!r}")
            hp = awarded.pop(criterion.description)
            if not 0 <= hp <= 2 * criterion.points:
                raise MarkSheetError(
                    f"award {_render_half_points(hp)} for "
                    f"{criterion.description!r} outside 0..{criterion.points}"
                )
            subtotal += hp * criterion.multiplier
        rows.append(ScoreRow(
            section.name, subtotal,
            2 * sum(c.weighted_points for c in section.criteria)))
        total += subtotal
    if awarded:
        extra = ", ".join(repr(d) for d in awarded)
        raise MarkSheetError(f"awards for unknown criteria: {extra}")
    return ScoreReport(tuple(rows), total, 2 * rubric.maximum)


def _score_trait(rubric: TraitRubric, marks: MarkSheet) -> ScoreReport:
    if marks.awards_hp:
        raise MarkSheetError("point awards given for a trait rubric")
    by_trait: dict = {}
    for name, level in marks.levels:
        if name in by_trait:
            raise MarkSheetError(f"duplicate level for trait {name!r}")
        by_trait[name] = level

    rows = []
    total = 0
    for trait in rubric.traits:
        if trait.name not in by_trait:
            raise MarkSheetError(f"missing level for trait {trait.name!r}")
        level = by_trait.pop(trait.name)
        if not 1 <= level <= 5:
            raise MarkSheetError(f"level {level} for {trait.name!r} outside 1..5")
        rows.append(ScoreRow(trait.name, 2 * level, 10))
        total += 2 * level
    if by_trait:
        extra = ", ".join(repr(t) for t in by_trait)
        raise MarkSheetError(f"levels for unknown traits: {extra}")
    return ScoreReport(tuple(rows), total, 2 * rubric.maximum)
