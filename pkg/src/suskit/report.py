"""Deterministic fixed-width text reports for scored surveys.

Rendering is pure: identical inputs produce byte-identical LF-terminated
text. The multi-response layout is pinned by the golden file shipped with
the test suite, down to column padding and separator lengths.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Mapping, Sequence

from .scoring import (
    Acceptability,
    Adjective,
    Grade,
    classify_acceptability,
    classify_adjective,
    classify_grade,
)
from .stats import FrequencyTable, SurveyStats

DEFAULT_REPORT_PATH = "results.txt"

_COL_WIDTH = 20
_SUMMARY_COL_WIDTH = 15

# Frequency sections in report order: dimension, heading, separator length.
# Separator lengths vary per block; they are part of the pinned layout.
_FREQUENCY_SECTIONS = (
    ("acceptability", "Acceptability", 27),
    ("grade", "Grades", 26),
    ("adjective", "Adjectives", 26),
)


class InsufficientDataError(ValueError):
    """The multi-response renderer received fewer than two scores."""

    def __init__(self):
        super().__init__("multi-response report needs at least two scores")


def _fmt1(value: float) -> str:
    return f"{value:.1f}"


def _fmt2(value: float) -> str:
    # Two decimals, ties rounded half away from zero (f-strings round half even).
    return str(Decimal(value).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _pair_line(left: str, right: str) -> str:
    return f"{left:<{_COL_WIDTH}}{right:<{_COL_WIDTH}}"


def _summary_line(cells: Sequence[str]) -> str:
    return "".join(f"{cell:<{_SUMMARY_COL_WIDTH}}" for cell in cells)


def render_report(
    scores: Sequence[float],
    stats: SurveyStats,
    tables: Mapping[str, FrequencyTable],
    labels: Sequence[tuple[Acceptability, Grade, Adjective]],
) -> str:
    """Render the full multi-response report.

    ``tables`` maps each dimension name to its frequency table; ``labels``
    holds one (acceptability, grade, adjective) triple per score, aligned
    with ``scores``.
    """
    if len(scores) < 2:
        raise InsufficientDataError()
    if len(labels) != len(scores):
        raise ValueError(f"got {len(labels)} label triples for {len(scores)} scores")

    values_block = ["SUS values", "-" * 11]
    values_block += [_fmt1(score) for score in scores]

    stats_block = [_pair_line("Statistic", "Value"), "-" * 26]
    stats_block += [
        _pair_line("Mean", _fmt2(stats.mean)),
        _pair_line("Standard Deviation", _fmt2(stats.sample_std)),
        _pair_line("First Quartile (Q1)", _fmt2(stats.q1)),
        _pair_line("Median (Q2)", _fmt2(stats.median)),
        _pair_line("Third Quartile (Q3)", _fmt2(stats.q3)),
    ]

    frequency_blocks = []
    for dimension, heading, separator_length in _FREQUENCY_SECTIONS:
        table = tables[dimension]
        block = [_pair_line(heading, "Number"), "-" * separator_length]
        block += [_pair_line(label.value, str(count)) for label, count in table.entries]
        frequency_blocks.append(block)

    summary_block = [
        _summary_line(("SUS Value", "Acceptability", "Grade", "Adjective")),
        "-" * 60,
    ]
    for score, (acceptability, grade, adjective) in zip(scores, labels):
        summary_block.append(
            _summary_line((_fmt2(score), acceptability.value, grade.value, adjective.value))
        )

    blocks = [values_block, stats_block, *frequency_blocks, summary_block]
    lines: list[str] = []
    for block in blocks[:-1]:
        lines += block
        lines += ["", ""]
    lines += blocks[-1]
    lines.append("")
    return "\n".join(lines) + "\n"


def render_single_report(score: float) -> str:
    """Render the reduced report for a single response: score plus its labels."""
    lines = [
        _pair_line("SUS Value", _fmt2(score)),
        _pair_line("Acceptability", classify_acceptability(score).value),
        _pair_line("Grade", classify_grade(score).value),
        _pair_line("Adjective", classify_adjective(score).value),
    ]
    return "\n".join(lines) + "\n"


def write_report(text: str, path: str | Path = DEFAULT_REPORT_PATH) -> None:
    """Write report text to ``path`` byte-for-byte (no newline translation).

    Parent directories are not created, and OS errors propagate unchanged.
    """
    Path(path).write_text(text, encoding="utf-8", newline="")
