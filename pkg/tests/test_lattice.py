"""Lattice construction: interval probabilities, inflections, fallbacks."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from bookcode.betadist import BetaParams, beta_interval_probs
from bookcode.lattice import (
    Candidate,
    Lattice,
    LatticeConfig,
    Segment,
    Source,
    build_lattice,
    build_segment,
    candidates_between,
    expand_inflections,
    load_lattice,
    save_lattice,
)
from bookcode.refdict import ReferenceDict
from bookcode.transcript import (
    SENTENCE_END,
    dict_code,
    literal,
    table_code,
)
from bookcode.wordbank import Wordbank

COMMON = ("the", "of", "and", "to", "a", "in", "that", "is", "was", "he")


def tiny_config(**kw):
    kw.setdefault("common_words", COMMON)
    return LatticeConfig(**kw)


def make_wordbank(table=None, dict_=None):
    return Wordbank(dict(table or {}), dict(dict_ or {}))


FIXTURE_REF = ReferenceDict.from_words(
    ["a", "able", "an", "and", "aa", "ab", "find", "fine", "finish", "fish"]
)


def seg_probs(seg: Segment) -> dict[str, float]:
    return {c.word: c.prob for c in seg.candidates}


class TestCandidatesBetween:
    def test_adjacent_entries_nothing_between(self):
        ref = ReferenceDict.from_words(["a", "aa", "ab"])
        assert candidates_between("a", "aa", ref) == []

    def test_enumeration(self):
        ref = ReferenceDict.from_words(["a", "able", "an", "and"])
        assert candidates_between("a", "and", ref) == ["able", "an"]

    def test_reversed_anchors_rejected(self):
        with pytest.raises(ValueError):
            candidates_between("b", "a", FIXTURE_REF)

    def test_bundled_attachment_bearer(self):
        ref = ReferenceDict.bundled()
        words = candidates_between("attachment", "bearer", ref)
        assert len(words) == 45  # frozen count for the bundled dictionary
        assert all("attachment" < w < "bearer" for w in words)
        assert words == sorted(words)


class TestExpandInflections:
    def p(self, word, prob):
        return Candidate(word, math.log(prob), Source.INTERPOLATED)

    def test_find_divides_over_four_forms(self):
        out = expand_inflections([self.p("find", 0.8)])
        probs = {c.word: c.prob for c in out}
        assert set(probs) == {"find", "finds", "found", "finding"}
        for v in probs.values():
            assert math.isclose(v, 0.2, rel_tol=1e-9)

    def test_marker_filters_to_matching_form(self):
        out = expand_inflections([self.p("be", 0.5)], marker="ing")
        probs = {c.word: c.prob for c in out}
        assert set(probs) == {"being"}
        assert math.isclose(probs["being"], 0.5, rel_tol=1e-9)

    def test_unmatched_marker_falls_back_to_unfiltered(self):
        out = expand_inflections([self.p("me", 0.5)], marker="xyz")
        probs = {c.word: c.prob for c in out}
        assert math.isclose(probs["me"], 0.5, rel_tol=1e-9)

    def test_empty_input_empty_output(self):
        assert expand_inflections([]) == []

    def test_base_and_inflection_collision_merges(self):
        # "found" arrives as its own base verb and as the past tense of "find".
        out = expand_inflections([self.p("find", 0.4), self.p("found", 0.4)])
        probs = {c.word: c.prob for c in out}
        assert math.isclose(probs["found"], 0.4 / 4 + 0.4 / 4, rel_tol=1e-9)

    def test_mass_preserved(self):
        cands = [self.p("find", 0.3), self.p("take", 0.3), self.p("the", 0.4)]
        out = expand_inflections(cands)
        assert math.isclose(sum(c.prob for c in out), 1.0, rel_tol=1e-9)

    def test_sources(self):
        out = expand_inflections([self.p("find", 0.8)])
        by_word = {c.word: c.source for c in out}
        assert by_word["find"] is Source.INTERPOLATED
        assert by_word["finding"] is Source.INFLECTION


class TestBuildSegment:
    def test_sentence_end_is_period(self):
        seg = build_segment(SENTENCE_END, make_wordbank(), FIXTURE_REF, tiny_config())
        (c,) = seg.candidates
        assert (c.word, c.log_prob, c.source) == (".", 0.0, Source.LITERAL)

    def test_literal_passes_through_lowercased(self):
        seg = build_segment(literal("Jefferson"), make_wordbank(), FIXTURE_REF, tiny_config())
        (c,) = seg.candidates
        assert (c.word, c.source) == ("jefferson", Source.LITERAL)

    def test_exact_wordbank_hit_is_singleton(self):
        wb = make_wordbank(table={172: "and"})
        seg = build_segment(table_code(172), wb, FIXTURE_REF, tiny_config())
        (c,) = seg.candidates
        assert (c.word, c.log_prob, c.source) == ("and", 0.0, Source.WORDBANK_EXACT)

    def test_exact_hit_with_marker_expands(self):
        wb = make_wordbank(table={500: "find"})
        seg = build_segment(table_code(500, suffix="ing"), wb, FIXTURE_REF, tiny_config())
        assert seg_probs(seg) == {"finding": 1.0}

    def test_proper_noun_section_placeholder(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        seg = build_segment(table_code(90), wb, FIXTURE_REF, tiny_config())
        (c,) = seg.candidates
        assert (c.word, c.log_prob, c.source) == ("america", 0.0, Source.EDGE_CASE)

    def test_placeholder_is_configurable(self):
        wb = make_wordbank(table={160: "a"})
        cfg = tiny_config(placeholder="boston")
        seg = build_segment(table_code(90), wb, FIXTURE_REF, cfg)
        assert seg.candidates[0].word == "boston"

    def test_outside_alphabetic_uniform_over_common_words(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        seg = build_segment(table_code(1260), wb, FIXTURE_REF, tiny_config())
        probs = seg_probs(seg)
        assert set(probs) == set(COMMON)
        for v in probs.values():
            assert math.isclose(v, 1 / len(COMMON), rel_tol=1e-9)
        assert all(c.source is Source.EDGE_CASE for c in seg.candidates)

    def test_interpolated_candidates_between_anchors(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        seg = build_segment(table_code(163), wb, FIXTURE_REF, tiny_config())
        interp = [c for c in seg.candidates if c.source is Source.INTERPOLATED]
        assert {c.word for c in interp} <= {"aa", "ab", "able", "an"}
        assert all("a" < c.word < "and" for c in interp)

    def test_interpolated_probabilities_follow_beta(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        # Closed-class words between the anchors: expansion leaves them alone,
        # so the segment shows the raw interval probabilities at m = 0.25.
        ref = ReferenceDict.from_words(["a", "about", "above", "again", "and"])
        seg = build_segment(table_code(163), wb, ref, tiny_config())
        expected = beta_interval_probs(BetaParams(0.25, 5.0), 3)
        probs = seg_probs(seg)
        for word, want in zip(["about", "above", "again"], expected):
            assert math.isclose(probs[word], want, rel_tol=1e-6)

    def test_adjacent_anchors_fall_back_to_common_words(self):
        wb = make_wordbank(table={160: "a", 172: "aa"})
        ref = ReferenceDict.from_words(["a", "aa", "ab"])
        seg = build_segment(table_code(165), wb, ref, tiny_config())
        assert set(seg_probs(seg)) == set(COMMON)

    def test_dict_code_with_virtual_anchors_never_empty(self):
        wb = make_wordbank(dict_={2341: "attachment"})
        seg = build_segment(dict_code(100, 5, 1), wb, FIXTURE_REF, tiny_config())
        assert len(seg.candidates) >= 1

    def test_marker_filters_interpolated_candidates(self):
        wb = make_wordbank(table={160: "fern", 172: "fit"})
        ref = ReferenceDict.from_words(["fern", "find", "fit"])
        seg = build_segment(table_code(166, suffix="ound"), wb, ref, tiny_config())
        assert seg_probs(seg) == pytest.approx({"found": 1.0})

    def test_segment_mass_is_one(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        seg = build_segment(table_code(163), wb, FIXTURE_REF, tiny_config())
        assert math.isclose(sum(seg_probs(seg).values()), 1.0, abs_tol=1e-6)


class TestBuildLattice:
    def test_empty_document(self):
        lat = build_lattice([], make_wordbank(), FIXTURE_REF, tiny_config())
        assert len(lat) == 0
        assert lat.mean_candidates == 0.0

    def test_five_tokens_two_known(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        doc = [
            table_code(160),
            table_code(163),
            table_code(172),
            literal("Smith"),
            SENTENCE_END,
        ]
        lat = build_lattice(doc, wb, FIXTURE_REF, tiny_config())
        assert len(lat) == 5
        assert len(lat.segments[0].candidates) == 1
        assert len(lat.segments[2].candidates) == 1
        assert [s.token for s in lat] == doc

    def test_order_preserved_and_mean_reported(self):
        wb = make_wordbank(table={160: "a", 172: "and"})
        lat = build_lattice([table_code(160), SENTENCE_END], wb, FIXTURE_REF, tiny_config())
        assert lat.mean_candidates == 1.0


class TestRoundTrip:
    def test_json_save_load(self, tmp_path):
        wb = make_wordbank(table={160: "a", 172: "and"})
        doc = [
            table_code(160),
            table_code(163, suffix="s"),
            table_code(90),
            literal("Smith"),
            SENTENCE_END,
        ]
        lat = build_lattice(doc, wb, FIXTURE_REF, tiny_config())
        path = tmp_path / "lat.json"
        save_lattice(lat, path)
        loaded = load_lattice(path)
        assert len(loaded) == len(lat)
        for a, b in zip(lat, loaded):
            assert a.token == b.token
            assert a.candidates == b.candidates

    def test_rejects_multi_token_cipher_field(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            '[{"cipher": "[160]^ [172]^", "candidates": [{"word": "a", '
            '"logprob": 0.0, "source": "Literal"}]}]',
            encoding="utf-8",
        )
        with pytest.raises(ValueError):
            load_lattice(path)


class TestValidation:
    def test_candidate_rejects_positive_logprob(self):
        with pytest.raises(ValueError):
            Candidate("x", 0.5, Source.LITERAL)

    def test_candidate_rejects_empty_word(self):
        with pytest.raises(ValueError):
            Candidate("", 0.0, Source.LITERAL)

    def test_segment_rejects_bad_mass(self):
        with pytest.raises(ValueError):
            Segment(table_code(160), (Candidate("a", math.log(0.5), Source.LITERAL),))

    def test_segment_rejects_empty(self):
        with pytest.raises(ValueError):
            Segment(table_code(160), ())

    def test_config_validation(self):
        with pytest.raises(ValueError):
            tiny_config(beta=0.5)
        with pytest.raises(ValueError):
            LatticeConfig(common_words=())
        with pytest.raises(ValueError):
            tiny_config(prob_floor=0.0)


@settings(max_examples=60, deadline=None)
@given(
    lower=st.integers(160, 500),
    gap=st.integers(2, 200),
    beta=st.floats(2.0, 12.0),
    data=st.data(),
)
def test_segment_mass_property(lower, gap, beta, data):
    upper = lower + gap
    query = data.draw(st.integers(lower + 1, upper - 1))
    wb = make_wordbank(table={lower: "aardvark", upper: "myself"})
    ref = ReferenceDict.bundled()
    seg = build_segment(
        table_code(query), wb, ref, tiny_config(beta=beta)
    )
    total = sum(c.prob for c in seg.candidates)
    assert math.isclose(total, 1.0, abs_tol=1e-6)
    words = [c.word for c in seg.candidates]
    assert len(words) == len(set(words))
