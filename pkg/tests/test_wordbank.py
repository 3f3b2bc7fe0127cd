"""Wordbank extraction, anchor resolution, and monotonicity checks."""

import math

import pytest
from hypothesis import given, strategies as st

from bookcode.transcript import (
    DictGeometry,
    dict_code,
    index_to_dict_code,
    table_code,
)
from bookcode.wordbank import (
    AFTER_ALL_WORDS,
    AnchorPair,
    EdgeCase,
    Exact,
    Wordbank,
    anchors_for,
    check_monotonic,
    extract_wordbank,
    load_wordbank,
    normalize_plaintext,
    save_wordbank,
)

GEOM = DictGeometry()

# Published known-plaintext rows: (cipher token, word, linear index).
DICT_ROWS = [
    (dict_code(7, 24, 1), "acquisition", 24),
    (dict_code(15, 21, 1), "after", 485),
    (dict_code(29, 29, 1), "answer", 1305),
    (dict_code(44, 28, 1), "attache", 2174),
    (dict_code(47, 21, 1), "attachment", 2341),
    (dict_code(59, 19, 1), "bearer", 3035),
    (dict_code(65, 17, 2), "better", 3410),
    (dict_code(75, 29, 1), "bosom", 3973),
    (dict_code(103, 40, 2), "chamber", 5637),
    (dict_code(113, 4, 1), "cipher", 6152),
    (dict_code(114, 20, 1), "civil", 6226),
]

TABLE_ROWS = {
    160: "a",
    172: "and",
    305: "by",
    575: "from",
    716: "in",
    904: "not",
    1135: "the",
    1218: "whole",
}


def make_wordbank(table=None, dict_=None, **kw):
    return Wordbank(dict(table or {}), dict(dict_ or {}), **kw)


class TestExtract:
    def test_table_and_dict_pair(self):
        pairs = [(table_code(172), "and"), (dict_code(29, 29, 1), "answer")]
        wb = extract_wordbank(pairs)
        assert wb.table_entries == {172: "and"}
        assert wb.dict_entries == {1305: "answer"}
        assert wb.conflicts == ()

    def test_normalizes_case_and_punctuation(self):
        wb = extract_wordbank([(table_code(172), "And,"), (table_code(160), "'A'")])
        assert wb.table_entries == {172: "and", 160: "a"}

    def test_consistent_duplicates_collapse(self):
        wb = extract_wordbank([(table_code(172), "and"), (table_code(172), "AND")])
        assert wb.table_entries == {172: "and"}
        assert wb.conflicts == ()

    def test_conflict_keeps_first_seen(self):
        wb = extract_wordbank([(table_code(172), "and"), (table_code(172), "the")])
        assert wb.table_entries == {172: "and"}
        (c,) = wb.conflicts
        assert (c.section, c.position, c.kept, c.rejected) == ("table", 172, "and", "the")

    def test_literals_and_blank_plaintext_skipped(self):
        from bookcode.transcript import literal

        wb = extract_wordbank([(literal("Jefferson"), "jefferson"), (table_code(172), "?")])
        assert len(wb) == 0

    def test_published_rows(self):
        wb = extract_wordbank([(tok, word) for tok, word, _ in DICT_ROWS])
        assert wb.dict_entries == {idx: word for _, word, idx in DICT_ROWS}


class TestLookup:
    def test_exact_table_hit(self):
        wb = make_wordbank(table=TABLE_ROWS)
        assert wb.lookup(table_code(1135)) == "the"
        assert wb.lookup(table_code(9999)) is None

    def test_exact_dict_hit_via_index(self):
        wb = make_wordbank(dict_={1305: "answer"})
        assert wb.lookup(dict_code(29, 29, 1)) == "answer"

    def test_with_entries_keeps_existing(self):
        wb = make_wordbank(table={172: "and"})
        wb2 = wb.with_entries(table={172: "the", 160: "a"}, dict_={24: "acquisition"})
        assert wb2.table_entries == {172: "and", 160: "a"}
        assert wb2.dict_entries == {24: "acquisition"}
        assert wb.table_entries == {172: "and"}


class TestAnchors:
    def test_between_two_table_anchors(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        res = anchors_for(table_code(163), wb)
        assert isinstance(res, AnchorPair)
        assert res.lower == (160, "a")
        assert res.upper == (172, "and")
        assert math.isclose(res.m, 0.25)

    def test_exact_match_wins(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        assert anchors_for(table_code(172), wb) == Exact("and")

    def test_below_alpha_range_is_proper_noun_section(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        assert anchors_for(table_code(90), wb) is EdgeCase.PROPER_NOUN_SECTION

    def test_above_alpha_range_is_outside_alphabetic(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        assert anchors_for(table_code(1260), wb) is EdgeCase.OUTSIDE_ALPHABETIC

    def test_in_range_but_no_lower_anchor(self):
        wb = make_wordbank(table={172: "and"})
        assert anchors_for(table_code(165), wb) is EdgeCase.PROPER_NOUN_SECTION

    def test_in_range_but_no_upper_anchor(self):
        wb = make_wordbank(table={172: "and"})
        assert anchors_for(table_code(500), wb) is EdgeCase.OUTSIDE_ALPHABETIC

    def test_entries_outside_alpha_range_never_anchor(self):
        # A proper-noun entry below the range must not bound queries inside it.
        wb = make_wordbank(table={90: "zimmerman", 172: "and"})
        assert anchors_for(table_code(165), wb) is EdgeCase.PROPER_NOUN_SECTION

    def test_dict_between_entries(self):
        wb = extract_wordbank([(tok, word) for tok, word, _ in DICT_ROWS])
        res = anchors_for(dict_code(20, 10, 1), wb)  # index 764
        assert isinstance(res, AnchorPair)
        assert res.lower == (485, "after")
        assert res.upper == (1305, "answer")
        assert math.isclose(res.m, (764 - 485) / (1305 - 485))

    def test_dict_below_first_entry_uses_virtual_start(self):
        wb = make_wordbank(dict_={498: "after"})
        res = anchors_for(dict_code(7, 10, 1), wb)  # index 10
        assert res.lower == (0, "")
        assert res.upper == (498, "after")
        assert math.isclose(res.m, 10 / 498)

    def test_dict_above_last_entry_uses_virtual_end(self):
        wb = make_wordbank(dict_={498: "after"})
        res = anchors_for(dict_code(700, 5, 2), wb)
        assert res.lower == (498, "after")
        assert res.upper == (GEOM.max_index + 1, AFTER_ALL_WORDS)

    def test_empty_dict_section_is_edge_case(self):
        wb = make_wordbank(table={172: "and"})
        assert anchors_for(dict_code(29, 29, 1), wb) is EdgeCase.OUTSIDE_ALPHABETIC

    def test_literal_rejected(self):
        from bookcode.transcript import literal

        with pytest.raises(ValueError):
            anchors_for(literal("x"), make_wordbank())


class TestMonotonic:
    def test_published_rows_are_ordered(self):
        wb = extract_wordbank([(tok, word) for tok, word, _ in DICT_ROWS])
        assert check_monotonic(wb) == []

    def test_out_of_order_dict_entry_reported(self):
        wb = make_wordbank(dict_={498: "after", 1184: "aardvark"})
        (v,) = check_monotonic(wb)
        assert (v.section, v.lower_position, v.upper_position) == ("dict", 498, 1184)
        assert (v.lower_word, v.upper_word) == ("after", "aardvark")

    def test_table_order_checked_only_inside_alpha_range(self):
        # The proper-noun section (below 160) is not alphabetical by design.
        wb = make_wordbank(table={13: "zimmerman", 90: "adams", 160: "a", 172: "and"})
        assert check_monotonic(wb) == []

    def test_equal_words_allowed(self):
        wb = make_wordbank(dict_={10: "after", 20: "after"})
        assert check_monotonic(wb) == []


class TestRoundTrip:
    def test_tsv_round_trip(self, tmp_path):
        wb = extract_wordbank(
            [(tok, word) for tok, word, _ in DICT_ROWS]
            + [(table_code(pos), word) for pos, word in TABLE_ROWS.items()]
        )
        path = tmp_path / "wb.tsv"
        save_wordbank(wb, path)
        loaded = load_wordbank(path)
        assert loaded.table_entries == wb.table_entries
        assert loaded.dict_entries == wb.dict_entries

    def test_load_rejects_malformed_rows(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("table\t172\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_wordbank(path)
        path.write_text("index\t172\tand\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_wordbank(path)


class TestNormalize:
    @given(st.sampled_from(["The", "the.", "'the'", "THE,", "the"]))
    def test_variants_collapse(self, raw):
        assert normalize_plaintext(raw) == "the"


@st.composite
def _anchored_query(draw):
    positions = draw(
        st.lists(st.integers(160, 1218), min_size=2, max_size=8, unique=True)
    )
    positions.sort()
    words = sorted(
        draw(
            st.lists(
                st.text(alphabet="abcdefghij", min_size=1, max_size=6),
                min_size=len(positions),
                max_size=len(positions),
                unique=True,
            )
        )
    )
    table = dict(zip(positions, words))
    query = draw(st.integers(positions[0], positions[-1]).filter(lambda q: q not in table))
    return table, query


class TestAnchorProperties:
    @given(_anchored_query())
    def test_m_strictly_inside_unit_interval(self, case):
        table, query = case
        res = anchors_for(table_code(query), make_wordbank(table=table))
        assert isinstance(res, AnchorPair)
        assert 0.0 < res.m < 1.0
        assert res.lower[0] < query < res.upper[0]
        assert res.lower[1] <= res.upper[1]

    @given(st.integers(7, 780), st.integers(1, 29), st.integers(1, 2))
    def test_dict_virtual_anchors_always_bound(self, page, row, col):
        wb = make_wordbank(dict_={2618: "bearer"})
        res = anchors_for(dict_code(page, row, col), wb)
        if isinstance(res, Exact):
            return
        assert res.lower[0] < res.upper[0]
        assert 0.0 <= res.m <= 1.0
