"""Shared fixtures: the bundled 20-response sample and its golden report."""

from __future__ import annotations

from pathlib import Path

import pytest

from suskit import (
    DIMENSIONS,
    classify_each,
    descriptive_stats,
    frequency_table,
    load_responses,
    render_report,
)

DATA_DIR = Path(__file__).parent / "data"

# Scores of the bundled sample file, in row order.
SAMPLE_SCORES = [
    90.0, 92.5, 85.0, 90.0, 82.5, 92.5, 90.0, 92.5, 85.0, 90.0,
    82.5, 92.5, 82.5, 22.5, 92.5, 90.0, 92.5, 87.5, 40.0, 5.0,
]


@pytest.fixture
def sample_path() -> Path:
    return DATA_DIR / "sample20.csv"


@pytest.fixture
def sample_rows(sample_path):
    return load_responses(sample_path).rows


@pytest.fixture
def sample_scores() -> list[float]:
    return list(SAMPLE_SCORES)


@pytest.fixture
def golden_path() -> Path:
    return DATA_DIR / "sample20_report.txt"


@pytest.fixture
def golden_report(golden_path) -> str:
    with open(golden_path, encoding="utf-8", newline="") as handle:
        return handle.read()


@pytest.fixture
def render_full_report():
    """Compose the full multi-response report from a score list."""

    def _render(scores):
        stats = descriptive_stats(scores)
        tables = {dimension: frequency_table(scores, dimension) for dimension in DIMENSIONS}
        labels = list(zip(*(classify_each(scores, dimension) for dimension in DIMENSIONS)))
        return render_report(scores, stats, tables, labels)

    return _render
