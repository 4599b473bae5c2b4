"""Entropy measures and the class-census report shared by the enumerators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import BadDistribution

_SUM_TOL = 1e-12


def _check(probs: Sequence[float]) -> list[float]:
    probs = [float(v) for v in probs]
    if not probs or any(v < 0 for v in probs) or abs(sum(probs) - 1.0) > _SUM_TOL:
        raise BadDistribution("probabilities must be nonnegative and sum to 1")
    return probs


def entropy_shannon(probs: Sequence[float]) -> float:
    probs = _check(probs)
    return -sum(v * math.log2(v) for v in probs if v > 0) + 0.0


def entropy_renyi(probs: Sequence[float], alpha: float) -> float:
    """Renyi entropy of order alpha, with the Shannon and min limits."""
    probs = _check(probs)
    if alpha == 1:
        return entropy_shannon(probs)
    if math.isinf(alpha):
        return entropy_min(probs)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return math.log2(sum(v ** alpha for v in probs if v > 0)) / (1 - alpha) + 0.0


def entropy_collision(probs: Sequence[float]) -> float:
    return entropy_renyi(probs, 2)


def entropy_min(probs: Sequence[float]) -> float:
    probs = _check(probs)
    return -math.log2(max(probs)) + 0.0


@dataclass(frozen=True)
class ShapeClass:
    value: object
    size: int
    members: Optional[tuple] = None


@dataclass
class PartitionReport:
    """Census of shapes grouped by the element they evaluate to."""

    base: Optional[int]
    level: int
    classes: list[ShapeClass]
    metadata: dict = field(default_factory=dict)

    @property
    def r(self) -> int:
        return len(self.classes)

    @property
    def total(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @property
    def probabilities(self) -> list[float]:
        n = self.total
        return [c.size / n for c in self.classes]

    @property
    def h1(self) -> float:
        return entropy_shannon(self.probabilities)

    # H_min <= H2 <= H1 holds exactly; the min() calls only absorb rounding
    # on near-uniform distributions, where the three agree to the last ulp

    @property
    def h2(self) -> float:
        return min(entropy_collision(self.probabilities), self.h1)

    @property
    def hmin(self) -> float:
        return min(entropy_min(self.probabilities), self.h2)

    def csv_row(self) -> dict:
        return {
            "base": self.base,
            "i": self.level,
            "r_i": self.r,
            "n_ij": " ".join(map(str, self.sizes)),
            "H1": f"{self.h1:.6f}",
            "H2": f"{self.h2:.6f}",
            "Hmin": f"{self.hmin:.6f}",
        }
