from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class GridReport:
    """Per-point residuals of a numerical identity check."""

    points: tuple[float, ...]
    residuals: tuple[float, ...]
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if len(self.points) != len(self.residuals):
            raise ValueError("points and residuals must have equal length")
        if any(not r >= 0.0 for r in self.residuals):
            raise ValueError("residuals must be non-negative numbers")

    @classmethod
    def build(cls, points: Sequence[float], residuals: Sequence[float], **extra) -> "GridReport":
        return cls(tuple(float(p) for p in points), tuple(float(r) for r in residuals), extra)

    @property
    def max_abs_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def passes(self, threshold: float) -> bool:
        return self.max_abs_residual <= threshold

    def to_dict(self) -> dict:
        out = {
            "points": list(self.points),
            "residuals": list(self.residuals),
            "max_abs_residual": self.max_abs_residual,
        }
        out.update(self.extra)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)
