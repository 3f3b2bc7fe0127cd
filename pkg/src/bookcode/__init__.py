"""Solver for dictionary-based book codes via a known-plaintext attack.

Parses cipher transcriptions, extracts a wordbank from parallel deciphered
material, builds a probabilistic decipherment lattice by alphabetical
interpolation between anchors, and extracts the best plaintext path with
beam search under a pluggable language model.
"""

from bookcode.betadist import BetaParams, beta_interval_prob, beta_interval_probs
from bookcode.decoder import (
    DecodePath,
    DecodeStep,
    beam_decode,
    exhaustive_decode,
    format_decode_path,
    load_decode_path,
    oracle_decode,
    save_decode_path,
    unigram_decode,
)
from bookcode.external import ExternalScorer, ExternalScorerError, scorer_from_spec
from bookcode.inflect import Delemmatizer, forms, matching_forms
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
    lattice_json,
    load_lattice,
    save_lattice,
)
from bookcode.lm import (
    NGramModel,
    NGramScorer,
    Scorer,
    load_model,
    perplexity,
    save_model,
    score_words,
    split_sentences,
    train_ngram,
)
from bookcode.pipeline import (
    Aligned,
    EfficiencyRow,
    Metrics,
    SelfLearnConfig,
    SynthConfig,
    coverage_of,
    data_efficiency,
    evaluate,
    full_key_wordbank,
    self_learn,
    synth_encipher,
    wordbank_pairs,
)
from bookcode.refdict import CommonWords, ReferenceDict
from bookcode.transcript import (
    CipherToken,
    DictGeometry,
    ParseError,
    TokenKind,
    dict_code,
    dict_index,
    index_to_dict_code,
    literal,
    parse_document,
    parse_token,
    render_document,
    render_token,
    table_code,
    token_position,
)
from bookcode.wordbank import (
    AnchorPair,
    EdgeCase,
    Exact,
    Wordbank,
    anchors_for,
    check_monotonic,
    extract_wordbank,
    load_wordbank,
    save_wordbank,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorPair",
    "Aligned",
    "BetaParams",
    "Candidate",
    "CipherToken",
    "CommonWords",
    "DecodePath",
    "DecodeStep",
    "Delemmatizer",
    "DictGeometry",
    "EdgeCase",
    "EfficiencyRow",
    "Exact",
    "ExternalScorer",
    "ExternalScorerError",
    "Lattice",
    "LatticeConfig",
    "Metrics",
    "NGramModel",
    "NGramScorer",
    "ParseError",
    "ReferenceDict",
    "Scorer",
    "Segment",
    "SelfLearnConfig",
    "Source",
    "SynthConfig",
    "TokenKind",
    "Wordbank",
    "anchors_for",
    "beam_decode",
    "beta_interval_prob",
    "beta_interval_probs",
    "build_lattice",
    "build_segment",
    "candidates_between",
    "check_monotonic",
    "coverage_of",
    "data_efficiency",
    "dict_code",
    "dict_index",
    "evaluate",
    "exhaustive_decode",
    "expand_inflections",
    "extract_wordbank",
    "format_decode_path",
    "forms",
    "full_key_wordbank",
    "index_to_dict_code",
    "lattice_json",
    "literal",
    "load_decode_path",
    "load_lattice",
    "load_model",
    "load_wordbank",
    "matching_forms",
    "oracle_decode",
    "parse_document",
    "parse_token",
    "perplexity",
    "render_document",
    "render_token",
    "save_decode_path",
    "save_lattice",
    "save_model",
    "save_wordbank",
    "score_words",
    "scorer_from_spec",
    "self_learn",
    "split_sentences",
    "synth_encipher",
    "table_code",
    "token_position",
    "train_ngram",
    "unigram_decode",
    "wordbank_pairs",
]
