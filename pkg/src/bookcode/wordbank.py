"""Wordbank extraction and alphabetical anchor lookup.

A wordbank maps cipher positions to known plaintext: table codes to words,
and dictionary codes (via their linear index) to words.  Because both the
table's alphabetic section and the shared dictionary list words in
alphabetical order, the nearest known entries below and above an unknown
code bound its plaintext alphabetically; the relative position m of the
code between those anchors is where interpolation starts.
"""

from __future__ import annotations

import bisect
import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path

from bookcode.transcript import (
    CipherToken,
    DictGeometry,
    TokenKind,
    token_position,
)

log = logging.getLogger(__name__)

# Sorts after every real word; the virtual upper bound of the dictionary.
AFTER_ALL_WORDS = "￿"

DEFAULT_ALPHA_RANGE = (160, 1218)


def normalize_plaintext(word: str) -> str:
    """Lowercase and strip surrounding punctuation; inner spaces survive."""
    return word.lower().strip(".,;:!?\"'()[]")


@dataclass(frozen=True, slots=True)
class Conflict:
    """Same position claimed by two different plaintexts; first one kept."""

    section: str
    position: int
    kept: str
    rejected: str


@dataclass(frozen=True, slots=True)
class Violation:
    """Adjacent wordbank entries whose plaintexts are out of alphabetical order."""

    section: str
    lower_position: int
    lower_word: str
    upper_position: int
    upper_word: str


@dataclass(frozen=True)
class Wordbank:
    """Known cipher -> plaintext mappings, split into table and dictionary sections."""

    table_entries: dict[int, str]
    dict_entries: dict[int, str]
    alpha_range: tuple[int, int] = DEFAULT_ALPHA_RANGE
    geometry: DictGeometry = DictGeometry()
    conflicts: tuple[Conflict, ...] = ()
    _table_positions: list[int] = field(init=False, repr=False, compare=False)
    _alpha_positions: list[int] = field(init=False, repr=False, compare=False)
    _dict_positions: list[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lo, hi = self.alpha_range
        if lo > hi:
            raise ValueError(f"alpha_range reversed: {self.alpha_range}")
        tpos = sorted(self.table_entries)
        object.__setattr__(self, "_table_positions", tpos)
        object.__setattr__(self, "_alpha_positions", [p for p in tpos if lo <= p <= hi])
        object.__setattr__(self, "_dict_positions", sorted(self.dict_entries))

    def __len__(self) -> int:
        return len(self.table_entries) + len(self.dict_entries)

    def lookup(self, token: CipherToken) -> str | None:
        """Exact plaintext for a code token, if known."""
        if token.kind is TokenKind.TABLE_CODE:
            return self.table_entries.get(token.code)
        if token.kind is TokenKind.DICT_CODE:
            return self.dict_entries.get(token_position(token, self.geometry))
        return None

    def with_entries(
        self,
        table: dict[int, str] | None = None,
        dict_: dict[int, str] | None = None,
    ) -> "Wordbank":
        """New wordbank with extra entries; existing positions are kept as-is."""
        te = dict(self.table_entries)
        de = dict(self.dict_entries)
        for pos, word in (table or {}).items():
            te.setdefault(pos, word)
        for pos, word in (dict_ or {}).items():
            de.setdefault(pos, word)
        return Wordbank(te, de, self.alpha_range, self.geometry, self.conflicts)


class EdgeCase(enum.Enum):
    """Unanchorable codes, resolved by the lattice with fixed fallbacks."""

    PROPER_NOUN_SECTION = "proper_noun_section"
    OUTSIDE_ALPHABETIC = "outside_alphabetic"


@dataclass(frozen=True, slots=True)
class Exact:
    word: str


@dataclass(frozen=True, slots=True)
class AnchorPair:
    """Known entries bounding a query, and its relative position m between them."""

    lower: tuple[int, str]
    upper: tuple[int, str]
    m: float

    def __post_init__(self):
        if not self.lower[0] < self.upper[0]:
            raise ValueError(f"anchor positions not increasing: {self}")
        if not 0.0 <= self.m <= 1.0:
            raise ValueError(f"m out of [0,1]: {self.m}")


def extract_wordbank(
    pairs,
    alpha_range: tuple[int, int] = DEFAULT_ALPHA_RANGE,
    geometry: DictGeometry = DictGeometry(),
) -> Wordbank:
    """Collect (code token, plaintext) pairs into a wordbank.

    Plaintext is normalized (lowercase, outer punctuation stripped).
    Consistent duplicates collapse; a conflicting duplicate keeps the
    first-seen word and is reported on the wordbank's conflicts.
    """
    table: dict[int, str] = {}
    dict_: dict[int, str] = {}
    conflicts: list[Conflict] = []
    for token, plaintext in pairs:
        word = normalize_plaintext(plaintext)
        if not word:
            continue
        if token.kind is TokenKind.TABLE_CODE:
            section, entries, pos = "table", table, token.code
        elif token.kind is TokenKind.DICT_CODE:
            section, entries, pos = "dict", dict_, token_position(token, geometry)
        else:
            continue
        if pos in entries:
            if entries[pos] != word:
                conflicts.append(Conflict(section, pos, entries[pos], word))
        else:
            entries[pos] = word
    for c in conflicts:
        log.warning(
            "wordbank conflict in %s section at %d: kept %r, rejected %r",
            c.section, c.position, c.kept, c.rejected,
        )
    return Wordbank(table, dict_, alpha_range, geometry, tuple(conflicts))


def check_monotonic(wb: Wordbank) -> list[Violation]:
    """Adjacent entries whose plaintexts break non-decreasing alphabetical order.

    The table is only ordered inside its alphabetic range; the dictionary is
    ordered throughout.
    """
    out: list[Violation] = []

    def scan(section: str, positions: list[int], entries: dict[int, str]):
        for a, b in zip(positions, positions[1:]):
            if entries[a] > entries[b]:
                out.append(Violation(section, a, entries[a], b, entries[b]))

    scan("table", wb._alpha_positions, wb.table_entries)
    scan("dict", wb._dict_positions, wb.dict_entries)
    return out


def _neighbors(positions: list[int], entries: dict[int, str], pos: int):
    i = bisect.bisect_left(positions, pos)
    lower = (positions[i - 1], entries[positions[i - 1]]) if i > 0 else None
    upper = (positions[i], entries[positions[i]]) if i < len(positions) else None
    return lower, upper


def _pair(lower: tuple[int, str], upper: tuple[int, str], pos: int) -> AnchorPair:
    m = (pos - lower[0]) / (upper[0] - lower[0])
    return AnchorPair(lower, upper, m)


def anchors_for(token: CipherToken, wb: Wordbank) -> Exact | AnchorPair | EdgeCase:
    """Resolve a code token against the wordbank.

    Exact hits return the known word.  Otherwise the nearest entries below
    and above become anchors, with m the query's relative position between
    them.  Table codes outside anchor coverage fall into the proper-noun
    section (below) or the unordered trailing section (above).  Dictionary
    codes missing one anchor interpolate against the dictionary's own
    bounds: position 0 before all words, max_index + 1 after them.
    """
    known = wb.lookup(token)
    if known is not None:
        return Exact(known)

    if token.kind is TokenKind.TABLE_CODE:
        code = token.code
        lo, hi = wb.alpha_range
        if code < lo:
            return EdgeCase.PROPER_NOUN_SECTION
        if code > hi:
            return EdgeCase.OUTSIDE_ALPHABETIC
        lower, upper = _neighbors(wb._alpha_positions, wb.table_entries, code)
        if lower is None:
            return EdgeCase.PROPER_NOUN_SECTION
        if upper is None:
            return EdgeCase.OUTSIDE_ALPHABETIC
        return _pair(lower, upper, code)

    if token.kind is TokenKind.DICT_CODE:
        if not wb._dict_positions:
            return EdgeCase.OUTSIDE_ALPHABETIC
        idx = token_position(token, wb.geometry)
        lower, upper = _neighbors(wb._dict_positions, wb.dict_entries, idx)
        if lower is None:
            lower = (0, "")
        if upper is None:
            upper = (max(wb.geometry.max_index, idx) + 1, AFTER_ALL_WORDS)
        return _pair(lower, upper, idx)

    raise ValueError(f"anchors_for needs a code token, got {token.kind}")


def format_wordbank(wb: Wordbank) -> str:
    """TSV: section, position, plaintext -- round-trips losslessly."""
    lines = []
    for pos in wb._table_positions:
        lines.append(f"table\t{pos}\t{wb.table_entries[pos]}")
    for pos in wb._dict_positions:
        lines.append(f"dict\t{pos}\t{wb.dict_entries[pos]}")
    return "\n".join(lines) + ("\n" if lines else "")


def save_wordbank(wb: Wordbank, path: str | Path) -> None:
    Path(path).write_text(format_wordbank(wb), encoding="utf-8")


def load_wordbank(
    path: str | Path,
    alpha_range: tuple[int, int] = DEFAULT_ALPHA_RANGE,
    geometry: DictGeometry = DictGeometry(),
) -> Wordbank:
    table: dict[int, str] = {}
    dict_: dict[int, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields")
        section, pos_text, word = parts
        pos = int(pos_text)
        if section == "table":
            table[pos] = word
        elif section == "dict":
            dict_[pos] = word
        else:
            raise ValueError(f"{path}:{lineno}: unknown section {section!r}")
    return Wordbank(table, dict_, alpha_range, geometry)
