"""End-to-end orchestration: self-learning, synthetic ciphers, evaluation.

Everything here composes the other modules: encipher a plaintext against a
key dictionary to manufacture ground truth, grow a wordbank by promoting
confident decodes, score decoded paths against gold, and sweep wordbank
sizes to measure data efficiency.
"""

from __future__ import annotations

import bisect
import dataclasses
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from bookcode.decoder import DecodePath, beam_decode, unigram_decode
from bookcode.inflect import Delemmatizer, matching_forms
from bookcode.lattice import Lattice, LatticeConfig, build_lattice
from bookcode.lm import Scorer
from bookcode.refdict import ReferenceDict
from bookcode.transcript import (
    SENTENCE_END,
    CipherToken,
    DictGeometry,
    TokenKind,
    index_to_dict_code,
    literal,
    table_code,
    token_position,
)
from bookcode.wordbank import (
    DEFAULT_ALPHA_RANGE,
    Wordbank,
    check_monotonic,
    extract_wordbank,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SelfLearnConfig:
    """Promotion policy for self-learning rounds."""

    iterations: int = 3
    promote_fraction: float = 0.1
    min_confidence: float = -10.0

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if not 0.0 < self.promote_fraction <= 1.0:
            raise ValueError(
                f"promote_fraction out of (0,1]: {self.promote_fraction}"
            )


@dataclass(frozen=True, slots=True)
class Metrics:
    """Decode quality numbers; fields not computable from the inputs stay None."""

    token_accuracy: float
    coverage: float | None = None
    oracle_accuracy: float | None = None
    mean_candidates_per_segment: float | None = None

    def __post_init__(self):
        for name in ("token_accuracy", "coverage", "oracle_accuracy"):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} out of [0,1]: {value}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "token_accuracy": self.token_accuracy,
                "coverage": self.coverage,
                "oracle_accuracy": self.oracle_accuracy,
                "mean_candidates_per_segment": self.mean_candidates_per_segment,
            }
        )


@dataclass(frozen=True)
class SynthConfig:
    """How plaintext is enciphered into a synthetic book code.

    The key dictionary plays the shared printed dictionary, its 1-based
    linear index matching the page/row/column arithmetic.  Table codes go
    to the most frequent words, assigned alphabetically from the start of
    the alphabetic range.
    """

    key_dictionary: tuple[str, ...]
    table_words: tuple[str, ...]
    geometry: DictGeometry = DictGeometry()
    alpha_range: tuple[int, int] = DEFAULT_ALPHA_RANGE

    def __post_init__(self):
        for i in range(1, len(self.key_dictionary)):
            if not self.key_dictionary[i - 1] < self.key_dictionary[i]:
                raise ValueError(f"key dictionary not sorted at entry {i}")
        if len(self.key_dictionary) > self.geometry.max_index:
            raise ValueError(
                f"key dictionary ({len(self.key_dictionary)} words) exceeds "
                f"geometry capacity {self.geometry.max_index}"
            )
        lo, hi = self.alpha_range
        if len(self.table_words) > hi - lo + 1:
            raise ValueError(
                f"{len(self.table_words)} table words exceed the alphabetic "
                f"range {self.alpha_range}"
            )
        if list(self.table_words) != sorted(set(self.table_words)):
            raise ValueError("table words must be sorted and unique")

    @classmethod
    def build(cls, key_words, frequent_words, k: int = 1000, **kw) -> "SynthConfig":
        """Key dictionary from a word list, table codes for the top k frequent."""
        table = tuple(sorted(set(list(frequent_words)[:k])))
        return cls(tuple(sorted(set(key_words))), table, **kw)

    def table_code_of(self, word: str) -> int | None:
        # Alphabetical assignment keeps table codes order-preserving.
        try:
            i = self.table_words.index(word)
        except ValueError:
            return None
        return self.alpha_range[0] + i

    def dict_index_of(self, word: str) -> int | None:
        i = bisect.bisect_left(self.key_dictionary, word)
        if i < len(self.key_dictionary) and self.key_dictionary[i] == word:
            return i + 1  # linear indices are 1-based
        return None


@dataclass(frozen=True, slots=True)
class Aligned:
    """One enciphered token with its gold surface word and dictionary lemma."""

    token: CipherToken
    surface: str
    lemma: str


def synth_encipher(
    plaintext: Iterable[str], cfg: SynthConfig
) -> tuple[list[CipherToken], list[Aligned]]:
    """Encipher lowercased words; "." becomes a sentence-end mark.

    Frequent words take table codes, dictionary words take dictionary
    codes, inflected forms whose unambiguous lemma is in the key take the
    lemma's code plus a suffix marker, and everything else stays literal.
    """
    delemma = Delemmatizer(set(cfg.key_dictionary) | set(cfg.table_words))
    tokens: list[CipherToken] = []
    alignment: list[Aligned] = []

    def emit(token: CipherToken, surface: str, lemma: str):
        tokens.append(token)
        alignment.append(Aligned(token, surface, lemma))

    def code_for(word: str, suffix: str | None = None) -> CipherToken | None:
        code = cfg.table_code_of(word)
        if code is not None:
            return table_code(code, suffix=suffix)
        idx = cfg.dict_index_of(word)
        if idx is not None:
            token = index_to_dict_code(idx, cfg.geometry)
            if suffix is not None:
                token = dataclasses.replace(token, suffix=suffix)
            return token
        return None

    for raw in plaintext:
        word = raw.lower()
        if word == ".":
            emit(SENTENCE_END, ".", ".")
            continue
        token = code_for(word)
        if token is not None:
            emit(token, word, word)
            continue
        found = delemma.lookup(word)
        if found is not None:
            base, marker = found
            # Only encipher through the lemma when the marker picks the
            # surface back out uniquely; anything else stays literal so
            # the round trip is exact.
            if matching_forms(base, marker) == (word,):
                token = code_for(base, suffix=marker)
                if token is not None:
                    emit(token, word, base)
                    continue
        emit(literal(word), word, word)
    return tokens, alignment


def full_key_wordbank(cfg: SynthConfig) -> Wordbank:
    """The entire key as a wordbank: the decoder's upper bound."""
    table = {
        cfg.alpha_range[0] + i: w for i, w in enumerate(cfg.table_words)
    }
    dict_ = {i + 1: w for i, w in enumerate(cfg.key_dictionary)}
    return Wordbank(table, dict_, cfg.alpha_range, cfg.geometry)


def wordbank_pairs(alignment: Sequence[Aligned], limit: int | None = None):
    """(code token, lemma) pairs from the first `limit` aligned tokens."""
    scope = alignment if limit is None else alignment[:limit]
    return [
        (a.token, a.lemma)
        for a in scope
        if a.token.kind in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE)
    ]


def coverage_of(doc: Iterable[CipherToken], wb: Wordbank) -> float:
    """Fraction of code tokens the wordbank resolves exactly."""
    total = hits = 0
    for token in doc:
        if token.kind not in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE):
            continue
        total += 1
        if wb.lookup(token) is not None:
            hits += 1
    return hits / total if total else 1.0


def evaluate(
    path: DecodePath,
    gold: Sequence[str],
    wb: Wordbank | None = None,
    lattice: Lattice | None = None,
) -> Metrics:
    """Case-folded token accuracy; sentence-end segments don't count.

    With the wordbank and lattice at hand, coverage, oracle accuracy, and
    the mean candidate count are filled in too.
    """
    if len(path.steps) != len(gold):
        raise ValueError(f"path length {len(path.steps)} != gold length {len(gold)}")
    total = hits = 0
    for step, want in zip(path.steps, gold):
        if step.token.kind is TokenKind.SENTENCE_END:
            continue
        total += 1
        if step.word.lower() == want.lower():
            hits += 1
    accuracy = hits / total if total else 1.0

    coverage = None
    if wb is not None:
        coverage = coverage_of((s.token for s in path.steps), wb)

    oracle = None
    mean_cands = None
    if lattice is not None:
        if len(lattice.segments) != len(gold):
            raise ValueError("lattice segment count does not match gold length")
        o_total = o_hits = 0
        for seg, want in zip(lattice.segments, gold):
            if seg.token.kind is TokenKind.SENTENCE_END:
                continue
            o_total += 1
            if want.lower() in seg.words():
                o_hits += 1
        oracle = o_hits / o_total if o_total else 1.0
        mean_cands = lattice.mean_candidates

    return Metrics(accuracy, coverage, oracle, mean_cands)


def self_learn(
    doc: Sequence[CipherToken],
    wb: Wordbank,
    ref: ReferenceDict,
    scorer: Scorer,
    cfg: SelfLearnConfig | None = None,
    *,
    beam: int = 4,
    a: float = 1.0,
    lattice_cfg: LatticeConfig | None = None,
) -> tuple[DecodePath, Wordbank]:
    """Decode, promote confident new entries, rebuild, repeat.

    Promotion candidates are decoded code tokens the wordbank does not
    already know, ranked by per-token combined score.  A promotion that
    would break alphabetical order is skipped.  The wordbank only grows.
    """
    cfg = cfg or SelfLearnConfig()
    delemma = Delemmatizer(ref.words)
    path = beam_decode(build_lattice(doc, wb, ref, lattice_cfg), scorer, beam, a)

    for _ in range(cfg.iterations):
        pool = []
        for step in path.steps:
            token = step.token
            if token.kind not in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE):
                continue
            if wb.lookup(token) is not None:
                continue
            if token.suffix is None:
                lemma = step.word
            else:
                found = delemma.lookup(step.word)
                if found is None or found[1] != token.suffix:
                    continue
                lemma = found[0]
            confidence = step.lm_log_prob + a * step.lattice_log_prob
            pool.append((confidence, token, lemma))
        pool.sort(key=lambda item: (-item[0], item[2]))
        take = int(cfg.promote_fraction * len(pool))
        promoted_table: dict[int, str] = {}
        promoted_dict: dict[int, str] = {}
        accepted = 0
        for confidence, token, lemma in pool[:take]:
            if confidence < cfg.min_confidence:
                continue
            if token.kind is TokenKind.TABLE_CODE:
                pos, target = token.code, promoted_table
            else:
                pos, target = token_position(token, wb.geometry), promoted_dict
            if pos in target:
                continue  # code already promoted this round
            trial_table = dict(promoted_table)
            trial_dict = dict(promoted_dict)
            (trial_table if target is promoted_table else trial_dict)[pos] = lemma
            trial = wb.with_entries(table=trial_table, dict_=trial_dict)
            if check_monotonic(trial):
                log.info("skipping promotion %r: breaks alphabetical order", lemma)
                continue
            target[pos] = lemma
            accepted += 1
        if accepted == 0:
            break
        new_wb = wb.with_entries(table=promoted_table, dict_=promoted_dict)
        assert len(new_wb) >= len(wb)
        wb = new_wb
        path = beam_decode(build_lattice(doc, wb, ref, lattice_cfg), scorer, beam, a)

    return path, wb


@dataclass(frozen=True, slots=True)
class EfficiencyRow:
    parallel_tokens: int
    wordbank_size: int
    coverage: float
    accuracy: float
    unigram_accuracy: float


def data_efficiency(
    parallel_sizes: Sequence[int],
    train_words: Sequence[str],
    test_words: Sequence[str],
    synth_cfg: SynthConfig,
    ref: ReferenceDict,
    scorer: Scorer,
    *,
    beam: int = 4,
    a: float = 1.0,
    lattice_cfg: LatticeConfig | None = None,
    freq=None,
) -> list[EfficiencyRow]:
    """Wordbank size vs decode quality over growing parallel-text prefixes."""
    lattice_cfg = lattice_cfg or LatticeConfig()
    if freq is None:
        freq = {w: i for i, w in enumerate(lattice_cfg.common_words)}
    _, train_alignment = synth_encipher(train_words, synth_cfg)
    test_doc, test_alignment = synth_encipher(test_words, synth_cfg)
    gold = [a_.surface for a_ in test_alignment]

    rows = []
    for n in parallel_sizes:
        if n > len(train_alignment):
            log.warning(
                "parallel size %d exceeds corpus (%d tokens); clamped",
                n, len(train_alignment),
            )
            n = len(train_alignment)
        wb = extract_wordbank(
            wordbank_pairs(train_alignment, n),
            synth_cfg.alpha_range,
            synth_cfg.geometry,
        )
        lat = build_lattice(test_doc, wb, ref, lattice_cfg)
        path = beam_decode(lat, scorer, beam, a)
        metrics = evaluate(path, gold, wb=wb)
        baseline = evaluate(unigram_decode(lat, freq), gold)
        rows.append(
            EfficiencyRow(
                n, len(wb), metrics.coverage, metrics.token_accuracy,
                baseline.token_accuracy,
            )
        )
    return rows


def format_efficiency_report(rows: Sequence[EfficiencyRow]) -> str:
    """TSV: parallel tokens, wordbank size, coverage, accuracy."""
    lines = ["parallel_tokens\twordbank_size\tcoverage\taccuracy"]
    for r in rows:
        lines.append(
            f"{r.parallel_tokens}\t{r.wordbank_size}"
            f"\t{100 * r.coverage:.1f}\t{100 * r.accuracy:.1f}"
        )
    return "\n".join(lines) + "\n"


def efficiency_json(rows: Sequence[EfficiencyRow]) -> str:
    return json.dumps(
        [
            {
                "parallel_tokens": r.parallel_tokens,
                "wordbank_size": r.wordbank_size,
                "coverage": r.coverage,
                "accuracy": r.accuracy,
                "unigram_accuracy": r.unigram_accuracy,
            }
            for r in rows
        ],
        indent=1,
    )


def save_efficiency_report(rows: Sequence[EfficiencyRow], path: str | Path) -> None:
    Path(path).write_text(format_efficiency_report(rows), encoding="utf-8")
