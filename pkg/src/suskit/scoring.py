"""SUS score computation and threshold classification.

A score is 2.5 times the sum of per-item contributions: odd-numbered
items contribute (answer - 1), even-numbered items (5 - answer). Scores
are therefore multiples of 2.5 in [0, 100], exact in binary floating
point, so the classifiers below need no tolerance at their boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .ingest import ITEMS_PER_RESPONSE, ResponseRow


class Acceptability(Enum):
    """Four-level acceptability band, listed lowest to highest."""

    NOT_ACCEPTABLE = "NOT ACCEPTABLE"
    LOW_MARGINAL = "LOW MARGINAL"
    HIGH_MARGINAL = "HIGH MARGINAL"
    ACCEPTABLE = "ACCEPTABLE"


class Grade(Enum):
    """School-style grade, listed in report order (best first)."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    F = "F"


class Adjective(Enum):
    """Six-level verbal rating, listed lowest to highest."""

    WORST_IMAGINABLE = "WORST IMAGINABLE"
    POOR = "POOR"
    OK = "OK"
    GOOD = "GOOD"
    EXCELLENT = "EXCELLENT"
    BEST_IMAGINABLE = "BEST IMAGINABLE"


@dataclass(frozen=True)
class ScoreBreakdown:
    """Summed contributions of the positive and negative items, each 0-20."""

    positive_sum: int
    negative_sum: int


def score_breakdown(row: ResponseRow) -> ScoreBreakdown:
    """Split one response into positive- and negative-item contribution sums."""
    answers = row.answers
    positive = sum(answers[i] - 1 for i in range(0, ITEMS_PER_RESPONSE, 2))
    negative = sum(5 - answers[i] for i in range(1, ITEMS_PER_RESPONSE, 2))
    return ScoreBreakdown(positive_sum=positive, negative_sum=negative)


def score_response(row: ResponseRow) -> float:
    """SUS score for one response: 2.5 times the summed contributions."""
    parts = score_breakdown(row)
    return 2.5 * (parts.positive_sum + parts.negative_sum)


def score_all(rows: Sequence[ResponseRow]) -> list[float]:
    """Score every response, preserving order."""
    return [score_response(row) for row in rows]


def classify_acceptability(score: float) -> Acceptability:
    """Acceptability band for a score; each band includes its lower bound."""
    if score < 50:
        return Acceptability.NOT_ACCEPTABLE
    if score < 62.5:
        return Acceptability.LOW_MARGINAL
    if score < 70:
        return Acceptability.HIGH_MARGINAL
    return Acceptability.ACCEPTABLE


def classify_grade(score: float) -> Grade:
    """Grade for a score; each band includes its lower bound."""
    if score < 60:
        return Grade.F
    if score < 70:
        return Grade.D
    if score < 80:
        return Grade.C
    if score < 90:
        return Grade.B
    return Grade.A


def classify_adjective(score: float) -> Adjective:
    """Adjective rating for a score; each band includes its lower bound."""
    if score < 25:
        return Adjective.WORST_IMAGINABLE
    if score < 39:
        return Adjective.POOR
    if score < 52:
        return Adjective.OK
    if score < 73:
        return Adjective.GOOD
    if score < 85:
        return Adjective.EXCELLENT
    return Adjective.BEST_IMAGINABLE


DIMENSIONS: tuple[str, ...] = ("acceptability", "grade", "adjective")

_CLASSIFIERS: dict[str, tuple[type[Enum], Callable[[float], Enum]]] = {
    "acceptability": (Acceptability, classify_acceptability),
    "grade": (Grade, classify_grade),
    "adjective": (Adjective, classify_adjective),
}


def _lookup(dimension: str) -> tuple[type[Enum], Callable[[float], Enum]]:
    try:
        return _CLASSIFIERS[dimension]
    except KeyError:
        raise ValueError(
            f"unknown dimension {dimension!r}; expected one of: {', '.join(DIMENSIONS)}"
        ) from None


def dimension_labels(dimension: str) -> tuple[Enum, ...]:
    """All labels of one categorical dimension, in report order."""
    label_type, _ = _lookup(dimension)
    return tuple(label_type)


def classify_each(scores: Sequence[float], dimension: str) -> list[Enum]:
    """Classify every score along one dimension, preserving order."""
    _, classifier = _lookup(dimension)
    return [classifier(score) for score in scores]
