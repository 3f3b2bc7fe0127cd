"""Cipher transcription parsing and dictionary-position arithmetic.

Transcription format (whitespace-separated, UTF-8):

    [N]^       table code N
    P.[R]-     dictionary code, page P, row R, column 1
    P.[R]=     dictionary code, page P, row R, column 2
    +xyz       inflection marker, attaches to the preceding code token
    |          sentence end
    # ...      comment line (only at line start)

Anything else is a plaintext literal passed through unchanged.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace


class ParseError(ValueError):
    """Malformed transcription token; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = f" (line {line}, col {col})" if line is not None else ""
        super().__init__(message + where)


class TokenKind(enum.Enum):
    TABLE_CODE = "table"
    DICT_CODE = "dict"
    LITERAL = "literal"
    SENTENCE_END = "sentence_end"


@dataclass(frozen=True, slots=True)
class CipherToken:
    """One transcription unit: table code, dictionary code, literal, or sentence end."""

    kind: TokenKind
    code: int | None = None
    page: int | None = None
    row: int | None = None
    column: int | None = None
    text: str | None = None
    suffix: str | None = None

    def __post_init__(self):
        if self.kind is TokenKind.TABLE_CODE:
            if self.code is None or self.code < 1:
                raise ValueError(f"table code must be >= 1, got {self.code}")
        elif self.kind is TokenKind.DICT_CODE:
            if self.page is None or self.page < 1:
                raise ValueError(f"page must be >= 1, got {self.page}")
            if self.row is None or self.row < 1:
                raise ValueError(f"row must be >= 1, got {self.row}")
            if self.column not in (1, 2):
                raise ValueError(f"column must be 1 or 2, got {self.column}")
        elif self.kind is TokenKind.LITERAL:
            if not self.text:
                raise ValueError("literal text must be non-empty")
        if self.suffix is not None:
            if not self.suffix or self.suffix != self.suffix.lower():
                raise ValueError(f"suffix must be non-empty lowercase, got {self.suffix!r}")
            if self.kind not in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE):
                raise ValueError("only code tokens may carry a suffix")

    @property
    def is_code(self) -> bool:
        return self.kind in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE)


def table_code(code: int, suffix: str | None = None) -> CipherToken:
    return CipherToken(TokenKind.TABLE_CODE, code=code, suffix=suffix)


def dict_code(page: int, row: int, column: int, suffix: str | None = None) -> CipherToken:
    return CipherToken(TokenKind.DICT_CODE, page=page, row=row, column=column, suffix=suffix)


def literal(text: str) -> CipherToken:
    return CipherToken(TokenKind.LITERAL, text=text)


SENTENCE_END = CipherToken(TokenKind.SENTENCE_END)


@dataclass(frozen=True, slots=True)
class DictGeometry:
    """Physical layout of the shared dictionary.

    first_content_page is the page holding the first headword; front matter
    before it contributes no indices.  total_pages bounds the index space
    when interpolating past the last known anchor.
    """

    rows_per_column: int = 29
    columns: int = 2
    first_content_page: int = 7
    total_pages: int = 780

    def __post_init__(self):
        for name in ("rows_per_column", "columns", "first_content_page", "total_pages"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    @property
    def words_per_page(self) -> int:
        return self.rows_per_column * self.columns

    @property
    def max_index(self) -> int:
        return (self.total_pages - self.first_content_page + 1) * self.words_per_page


_TABLE_RE = re.compile(r"\[(\d+)\]\^")
_DICT_RE = re.compile(r"(\d+)\.\[(\d+)\]([-=])")
_SUFFIX_RE = re.compile(r"\+(\S+)")


def parse_token(text: str, line: int | None = None, col: int | None = None) -> CipherToken:
    """Parse a single whitespace-delimited transcription token.

    `+suffix` markers are rejected here; they only make sense relative to a
    preceding token and are handled by parse_document.
    """
    if not text or text.isspace():
        raise ParseError("empty token", line, col)
    if text == "|":
        return SENTENCE_END
    if text.startswith("+"):
        raise ParseError(f"inflection marker {text!r} outside document context", line, col)
    m = _TABLE_RE.fullmatch(text)
    if m:
        code = int(m.group(1))
        if code < 1:
            raise ParseError(f"table code must be >= 1 in {text!r}", line, col)
        return table_code(code)
    m = _DICT_RE.fullmatch(text)
    if m:
        page, row, marker = int(m.group(1)), int(m.group(2)), m.group(3)
        if page < 1 or row < 1:
            raise ParseError(f"page and row must be >= 1 in {text!r}", line, col)
        return dict_code(page, row, 2 if marker == "=" else 1)
    # Tokens using code syntax characters must fully match a code pattern.
    if any(c in text for c in "[]^"):
        bad = min(text.index(c) for c in "[]^" if c in text)
        pos = (col or 0) + bad
        raise ParseError(f"malformed code token {text!r} at offset {bad}", line, pos)
    return literal(text)


def parse_document(text: str) -> list[CipherToken]:
    """Parse a whole transcription into tokens, attaching inflection markers.

    A standalone `+xyz` token becomes the suffix of the immediately preceding
    code token.  Lines starting with `#` are comments.
    """
    tokens: list[CipherToken] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        col = 0
        for raw in line.split():
            col = line.index(raw, col)
            m = _SUFFIX_RE.fullmatch(raw)
            if m:
                suffix = m.group(1).lower()
                if not tokens or not tokens[-1].is_code:
                    raise ParseError(
                        f"inflection marker {raw!r} has no preceding code token", lineno, col + 1
                    )
                if tokens[-1].suffix is not None:
                    raise ParseError(
                        f"code token already carries a suffix, got second marker {raw!r}",
                        lineno,
                        col + 1,
                    )
                tokens[-1] = replace(tokens[-1], suffix=suffix)
            else:
                tokens.append(parse_token(raw, lineno, col + 1))
            col += len(raw)
    return tokens


def render_token(token: CipherToken) -> str:
    """Canonical transcription text for a token (inverse of parsing)."""
    if token.kind is TokenKind.SENTENCE_END:
        return "|"
    if token.kind is TokenKind.LITERAL:
        return token.text
    if token.kind is TokenKind.TABLE_CODE:
        base = f"[{token.code}]^"
    else:
        marker = "=" if token.column == 2 else "-"
        base = f"{token.page}.[{token.row}]{marker}"
    if token.suffix:
        base += f" +{token.suffix}"
    return base


def render_document(tokens: list[CipherToken]) -> str:
    return " ".join(render_token(t) for t in tokens)


def dict_index(page: int, row: int, column: int, geom: DictGeometry = DictGeometry()) -> int:
    """Linear position of a dictionary code in the shared dictionary.

    Columns are read top to bottom, left to right, page by page.  Rows beyond
    rows_per_column are accepted unchanged; transcriptions contain them and
    the arithmetic still orders such codes correctly.
    """
    if page < geom.first_content_page:
        raise ValueError(
            f"page {page} precedes first content page {geom.first_content_page}"
        )
    if row < 1:
        raise ValueError(f"row must be >= 1, got {row}")
    if not 1 <= column <= geom.columns:
        raise ValueError(f"column must be in 1..{geom.columns}, got {column}")
    return (
        (page - geom.first_content_page) * geom.words_per_page
        + (column - 1) * geom.rows_per_column
        + row
    )


def index_to_dict_code(index: int, geom: DictGeometry = DictGeometry()) -> CipherToken:
    """Dictionary code whose dict_index equals `index` (inverse arithmetic)."""
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    offset = index - 1
    page = geom.first_content_page + offset // geom.words_per_page
    rem = offset % geom.words_per_page
    column = rem // geom.rows_per_column + 1
    row = rem % geom.rows_per_column + 1
    return dict_code(page, row, column)


def token_position(token: CipherToken, geom: DictGeometry = DictGeometry()) -> int:
    """Ordering position of a code token: the table code or dictionary index."""
    if token.kind is TokenKind.TABLE_CODE:
        return token.code
    if token.kind is TokenKind.DICT_CODE:
        return dict_index(token.page, token.row, token.column, geom)
    raise ValueError(f"token {token} has no position")
