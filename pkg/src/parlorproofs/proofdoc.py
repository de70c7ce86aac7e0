"""Claim-Proof documents: an ordered list of typed steps renderable as text."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class StepKind(Enum):
    CLAIM = "claim"
    MODEL = "model"
    COUNT = "count"
    LEMMA = "lemma"
    OBSERVATION = "observation"
    COMPUTATION = "computation"
    CONTRADICTION = "contradiction"
    CONCLUSION = "conclusion"
    QED = "qed"


@dataclass(frozen=True)
class ProofStep:
    kind: StepKind
    text: str


@dataclass(frozen=True)
class ProofDocument:
    title: str
    steps: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))

    def kinds(self) -> tuple:
        return tuple(step.kind for step in self.steps)

    def step_texts(self) -> tuple:
        return tuple(step.text for step in self.steps)

    def render_text(self) -> str:
        lines = [self.title, "=" * len(self.title), ""]
        for step in self.steps:
            if step.kind is StepKind.CLAIM:
                lines.append(f"Claim. {step.text}")
                lines.append("")
                lines.append("Proof.")
            elif step.kind is StepKind.QED:
                lines.append(step.text)
            else:
                lines.append(f"  {step.text}")
        return "\n".join(lines) + "\n"
