"""Decipherment lattice construction.

One segment per cipher token.  Known codes become singletons; unknown codes
take every reference word between their anchors, weighted by a beta density
whose mode sits at the code's relative position m between the anchors.
Candidates are then expanded into inflected forms (suffix markers filter the
forms), and unanchorable codes fall back to a proper-noun placeholder or a
uniform distribution over the most common words.
"""

from __future__ import annotations

import enum
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from bookcode.betadist import BetaParams, beta_interval_probs
from bookcode.inflect import forms, matching_forms
from bookcode.refdict import CommonWords, ReferenceDict
from bookcode.transcript import CipherToken, TokenKind, parse_document, render_token
from bookcode.wordbank import AnchorPair, EdgeCase, Exact, Wordbank, anchors_for

log = logging.getLogger(__name__)

# Interval probabilities can underflow far from the mode; candidates stay in
# the lattice with this floor so their log-probability is finite.
PROB_FLOOR = 1e-12


class Source(enum.Enum):
    """How a candidate entered its segment."""

    WORDBANK_EXACT = "WordbankExact"
    INTERPOLATED = "Interpolated"
    INFLECTION = "Inflection"
    EDGE_CASE = "EdgeCase"
    LITERAL = "Literal"


@dataclass(frozen=True, slots=True)
class Candidate:
    word: str
    log_prob: float
    source: Source

    def __post_init__(self):
        if not self.word:
            raise ValueError("empty candidate word")
        if not math.isfinite(self.log_prob) or self.log_prob > 0.0:
            raise ValueError(f"bad log_prob {self.log_prob!r} for {self.word!r}")

    @property
    def prob(self) -> float:
        return math.exp(self.log_prob)


@dataclass(frozen=True)
class Segment:
    """A cipher token and its scored decipherment candidates."""

    token: CipherToken
    candidates: tuple[Candidate, ...]

    def __post_init__(self):
        if not self.candidates:
            raise ValueError(f"segment for {render_token(self.token)} has no candidates")
        total = sum(c.prob for c in self.candidates)
        if abs(total - 1.0) > 1e-6:
            raise ValueError(
                f"segment for {render_token(self.token)} has mass {total!r}, not 1"
            )

    def words(self) -> tuple[str, ...]:
        return tuple(c.word for c in self.candidates)


@dataclass(frozen=True)
class Lattice:
    segments: tuple[Segment, ...]

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def mean_candidates(self) -> float:
        if not self.segments:
            return 0.0
        return sum(len(s.candidates) for s in self.segments) / len(self.segments)


def _default_common_words() -> tuple[str, ...]:
    return CommonWords.bundled().words


@dataclass(frozen=True)
class LatticeConfig:
    """Knobs for lattice construction."""

    beta: float = 5.0
    placeholder: str = "america"
    common_words: tuple[str, ...] = field(default_factory=_default_common_words)
    prob_floor: float = PROB_FLOOR

    def __post_init__(self):
        if self.beta < 1.0:
            raise ValueError(f"beta must be >= 1, got {self.beta}")
        if not self.placeholder:
            raise ValueError("placeholder word must be non-empty")
        if not self.common_words:
            raise ValueError("common-words list must be non-empty")
        if not 0.0 < self.prob_floor < 1.0:
            raise ValueError(f"prob_floor out of (0,1): {self.prob_floor}")


def candidates_between(lo: str, hi: str, ref: ReferenceDict) -> list[str]:
    """Reference words strictly between the anchors, in alphabetical order."""
    return ref.between(lo, hi)


def _candidate(word: str, prob: float, source: Source, floor: float) -> Candidate:
    return Candidate(word, min(0.0, math.log(max(prob, floor))), source)


def expand_inflections(
    cands: list[Candidate] | tuple[Candidate, ...],
    marker: str | None = None,
    floor: float = PROB_FLOOR,
) -> list[Candidate]:
    """Spread each candidate's probability equally over its inflected forms.

    With a suffix marker, only the forms matching the marker receive mass;
    a marker no form matches falls back to the unfiltered expansion.
    Duplicate forms merge by summing probability ("found" arrives both as a
    base verb and as the past tense of "find").
    """
    merged: dict[str, float] = {}
    sources: dict[str, tuple[float, Source]] = {}
    for cand in cands:
        targets: tuple[str, ...] = ()
        if marker:
            targets = matching_forms(cand.word, marker)
        if not targets:
            targets = forms(cand.word)
        share = cand.prob / len(targets)
        for form in targets:
            source = cand.source if form == cand.word else Source.INFLECTION
            merged[form] = merged.get(form, 0.0) + share
            best = sources.get(form)
            if best is None or share > best[0]:
                sources[form] = (share, source)
    return [
        _candidate(word, prob, sources[word][1], floor)
        for word, prob in merged.items()
    ]


def _uniform_segment(
    token: CipherToken, words: tuple[str, ...], floor: float
) -> Segment:
    share = 1.0 / len(words)
    return Segment(
        token, tuple(_candidate(w, share, Source.EDGE_CASE, floor) for w in words)
    )


def build_segment(
    token: CipherToken,
    wb: Wordbank,
    ref: ReferenceDict,
    cfg: LatticeConfig | None = None,
) -> Segment:
    """Candidates for one cipher token; never empty, mass always 1."""
    cfg = cfg or LatticeConfig()
    floor = cfg.prob_floor

    if token.kind is TokenKind.SENTENCE_END:
        return Segment(token, (Candidate(".", 0.0, Source.LITERAL),))
    if token.kind is TokenKind.LITERAL:
        return Segment(token, (Candidate(token.text.lower(), 0.0, Source.LITERAL),))

    resolved = anchors_for(token, wb)

    if isinstance(resolved, Exact):
        exact = Candidate(resolved.word, 0.0, Source.WORDBANK_EXACT)
        if token.suffix:
            expanded = expand_inflections([exact], token.suffix, floor)
            return Segment(token, tuple(expanded))
        return Segment(token, (exact,))

    if resolved is EdgeCase.PROPER_NOUN_SECTION:
        return Segment(token, (Candidate(cfg.placeholder, 0.0, Source.EDGE_CASE),))
    if resolved is EdgeCase.OUTSIDE_ALPHABETIC:
        return _uniform_segment(token, cfg.common_words, floor)

    assert isinstance(resolved, AnchorPair)
    try:
        words = candidates_between(resolved.lower[1], resolved.upper[1], ref)
    except ValueError:
        words = []
    if not words:
        return _uniform_segment(token, cfg.common_words, floor)

    probs = beta_interval_probs(BetaParams(resolved.m, cfg.beta), len(words))
    cands = [
        _candidate(w, p, Source.INTERPOLATED, floor) for w, p in zip(words, probs)
    ]
    return Segment(token, tuple(expand_inflections(cands, token.suffix, floor)))


def build_lattice(
    doc,
    wb: Wordbank,
    ref: ReferenceDict,
    cfg: LatticeConfig | None = None,
) -> Lattice:
    """One segment per token, in document order."""
    cfg = cfg or LatticeConfig()
    lat = Lattice(tuple(build_segment(tok, wb, ref, cfg) for tok in doc))
    if lat.segments:
        log.info(
            "built lattice: %d segments, %.1f candidates/segment on average",
            len(lat), lat.mean_candidates,
        )
    return lat


def lattice_json(lat: Lattice) -> str:
    """JSON: array of {cipher, candidates: [{word, logprob, source}]}."""
    payload = [
        {
            "cipher": render_token(seg.token),
            "candidates": [
                {"word": c.word, "logprob": c.log_prob, "source": c.source.value}
                for c in seg.candidates
            ],
        }
        for seg in lat.segments
    ]
    return json.dumps(payload, indent=1)


def save_lattice(lat: Lattice, path: str | Path) -> None:
    Path(path).write_text(lattice_json(lat), encoding="utf-8")


def load_lattice(path: str | Path) -> Lattice:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    segments = []
    for entry in payload:
        tokens = parse_document(entry["cipher"])
        if len(tokens) != 1:
            raise ValueError(f"expected one token in {entry['cipher']!r}")
        cands = tuple(
            Candidate(c["word"], c["logprob"], Source(c["source"]))
            for c in entry["candidates"]
        )
        segments.append(Segment(tokens[0], cands))
    return Lattice(tuple(segments))
