"""Structured yes/no answers with machine-readable witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    conclusion: str
    statement: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.conclusion == "obstructed"

    def to_dict(self) -> dict[str, Any]:
        return {
            "conclusion": self.conclusion,
            "statement": self.statement,
            "witness": self.witness,
        }
