"""Parsing and validation of delimited SUS response files.

The expected format is plain text, one response per line: exactly ten
integers in 1-5 joined by a delimiter (semicolon by default), no header,
no quoting. Validation is fail-fast: the first offending line or field
aborts the parse with 1-based coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

LIKERT_MIN = 1
LIKERT_MAX = 5
ITEMS_PER_RESPONSE = 10
DEFAULT_DELIMITER = ";"


class ParseError(ValueError):
    """Response data that cannot be turned into valid rows.

    ``line_no`` counts physical input lines and ``field_no`` delimited
    fields within a line, both 1-based. ``source`` holds the file path
    when the data came from a file.
    """

    def __init__(self, message: str, line_no: int | None = None, field_no: int | None = None):
        super().__init__(message)
        self.message = message
        self.line_no = line_no
        self.field_no = field_no
        self.source: str | None = None

    def __str__(self) -> str:
        parts = []
        if self.source is not None:
            parts.append(self.source)
        if self.line_no is not None:
            location = f"line {self.line_no}"
            if self.field_no is not None:
                location += f", field {self.field_no}"
            parts.append(location)
        parts.append(self.message)
        return ": ".join(parts)


class EmptyInputError(ParseError):
    """Input contained no non-blank lines."""

    def __init__(self):
        super().__init__("no response rows found")


class BadFieldCountError(ParseError):
    """A line did not split into exactly ten fields."""

    def __init__(self, line_no: int, found: int):
        super().__init__(f"expected {ITEMS_PER_RESPONSE} fields, found {found}", line_no=line_no)
        self.found = found


class NotAnIntegerError(ParseError):
    """A field was not a base-10 integer."""

    def __init__(self, line_no: int, field_no: int, text: str):
        super().__init__(f"not an integer: {text!r}", line_no=line_no, field_no=field_no)
        self.text = text


class OutOfRangeError(ParseError):
    """An integer field fell outside the 1-5 answer range."""

    def __init__(self, line_no: int, field_no: int, value: int):
        super().__init__(
            f"value {value} outside {LIKERT_MIN}-{LIKERT_MAX}", line_no=line_no, field_no=field_no
        )
        self.value = value


@dataclass(frozen=True)
class ResponseRow:
    """One participant's answers to the ten questionnaire items.

    ``answers`` is always a tuple of exactly ten integers in 1-5;
    construction rejects anything else.
    """

    answers: tuple[int, ...]

    def __post_init__(self):
        answers = tuple(self.answers)
        if len(answers) != ITEMS_PER_RESPONSE:
            raise ValueError(f"expected {ITEMS_PER_RESPONSE} answers, got {len(answers)}")
        for value in answers:
            if not isinstance(value, int) or not LIKERT_MIN <= value <= LIKERT_MAX:
                raise ValueError(f"answer {value!r} outside {LIKERT_MIN}-{LIKERT_MAX}")
        object.__setattr__(self, "answers", answers)


@dataclass(frozen=True)
class ParseReport:
    """Validated rows plus the physical line count of the source text."""

    rows: tuple[ResponseRow, ...]
    source_line_count: int


def parse_responses(text: str, delimiter: str = DEFAULT_DELIMITER) -> ParseReport:
    """Parse response text into validated rows.

    Lines may end in LF or CRLF; blank lines are skipped but still count
    toward error line numbers. Surrounding whitespace on a field is
    trimmed before integer conversion.

    Raises a :class:`ParseError` subclass pointing at the first offending
    line/field, or :class:`EmptyInputError` when nothing parseable remains.
    """
    lines = text.splitlines()
    rows = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        fields = line.split(delimiter)
        if len(fields) != ITEMS_PER_RESPONSE:
            raise BadFieldCountError(line_no, len(fields))
        answers = []
        for field_no, field in enumerate(fields, start=1):
            token = field.strip()
            try:
                value = int(token)
            except ValueError:
                raise NotAnIntegerError(line_no, field_no, token) from None
            if not LIKERT_MIN <= value <= LIKERT_MAX:
                raise OutOfRangeError(line_no, field_no, value)
            answers.append(value)
        rows.append(ResponseRow(tuple(answers)))
    if not rows:
        raise EmptyInputError()
    return ParseReport(rows=tuple(rows), source_line_count=len(lines))


def load_responses(path: str | Path, delimiter: str = DEFAULT_DELIMITER) -> ParseReport:
    """Read a response file and parse it.

    A missing file raises the usual :class:`FileNotFoundError`; parse
    errors are re-raised with the path attached to their message.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_responses(text, delimiter=delimiter)
    except ParseError as exc:
        exc.source = str(path)
        raise
