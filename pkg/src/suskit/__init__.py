"""System Usability Scale scoring, reporting, and charting toolkit.

Parses delimited questionnaire response files, computes SUS scores,
classifies them by acceptability, grade, and adjective rating, and
renders deterministic text reports and SVG charts.
"""

from .charts import (
    CATEGORY_TITLES,
    HISTOGRAM_TITLE,
    ChartDocument,
    render_category_chart,
    render_histogram,
)
from .ingest import (
    DEFAULT_DELIMITER,
    BadFieldCountError,
    EmptyInputError,
    NotAnIntegerError,
    OutOfRangeError,
    ParseError,
    ParseReport,
    ResponseRow,
    load_responses,
    parse_responses,
)
from .report import (
    DEFAULT_REPORT_PATH,
    InsufficientDataError,
    render_report,
    render_single_report,
    write_report,
)
from .scoring import (
    DIMENSIONS,
    Acceptability,
    Adjective,
    Grade,
    ScoreBreakdown,
    classify_acceptability,
    classify_adjective,
    classify_each,
    classify_grade,
    dimension_labels,
    score_all,
    score_breakdown,
    score_response,
)
from .stats import (
    EmptyScoreSetError,
    FrequencyTable,
    HistogramBins,
    SurveyStats,
    descriptive_stats,
    frequency_table,
    histogram_bins,
)

__version__ = "0.1.0"

__all__ = [
    "Acceptability",
    "Adjective",
    "BadFieldCountError",
    "CATEGORY_TITLES",
    "ChartDocument",
    "DEFAULT_DELIMITER",
    "DEFAULT_REPORT_PATH",
    "DIMENSIONS",
    "EmptyInputError",
    "EmptyScoreSetError",
    "FrequencyTable",
    "Grade",
    "HISTOGRAM_TITLE",
    "HistogramBins",
    "InsufficientDataError",
    "NotAnIntegerError",
    "OutOfRangeError",
    "ParseError",
    "ParseReport",
    "ResponseRow",
    "ScoreBreakdown",
    "SurveyStats",
    "classify_acceptability",
    "classify_adjective",
    "classify_each",
    "classify_grade",
    "descriptive_stats",
    "dimension_labels",
    "frequency_table",
    "histogram_bins",
    "load_responses",
    "parse_responses",
    "render_category_chart",
    "render_histogram",
    "render_report",
    "render_single_report",
    "score_all",
    "score_breakdown",
    "score_response",
    "write_report",
]
