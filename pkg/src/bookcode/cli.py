"""Command-line entry point wiring the modules into reproducible runs.

Every subcommand is a thin composition of one library operation.  Primary
artifacts go to stdout (or --out); diagnostics go to stderr.  Identical
inputs and seed give byte-identical outputs, so decode paths omit wall
time unless --timing is passed.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from bookcode.decoder import (
    beam_decode,
    format_decode_path,
    load_decode_path,
)
from bookcode.external import ExternalScorer, ExternalScorerError, scorer_from_spec
from bookcode.inflect import Delemmatizer
from bookcode.lattice import (
    Lattice,
    LatticeConfig,
    build_lattice,
    build_segment,
    lattice_json,
    load_lattice,
)
from bookcode.lm import save_model, split_sentences, train_ngram
from bookcode.pipeline import (
    SelfLearnConfig,
    SynthConfig,
    data_efficiency,
    efficiency_json,
    evaluate,
    format_efficiency_report,
    full_key_wordbank,
    self_learn,
    synth_encipher,
)
from bookcode.refdict import CommonWords, ReferenceDict
from bookcode.textgen import generate_book
from bookcode.transcript import (
    CipherToken,
    TokenKind,
    parse_document,
    render_document,
    render_token,
    token_position,
)
from bookcode.wordbank import (
    Wordbank,
    extract_wordbank,
    format_wordbank,
    load_wordbank,
    save_wordbank,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """Decoding knobs shared by the decode-style subcommands."""

    beam: int = 4
    lattice_weight: float = 1.0
    beta: float = 5.0
    scorer: str | None = None
    wordbank: str | None = None
    reference: str | None = None
    common: str | None = None

    def __post_init__(self):
        if self.beam < 1:
            raise ValueError(f"beam must be >= 1, got {self.beam}")
        if not self.lattice_weight > 0:
            raise ValueError(
                f"lattice weight must be positive, got {self.lattice_weight}"
            )
        if self.beta < 2:
            raise ValueError(f"beta must be >= 2, got {self.beta}")


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        beam=getattr(args, "beam", 4),
        lattice_weight=getattr(args, "lattice_weight", 1.0),
        beta=getattr(args, "beta", 5.0),
        scorer=getattr(args, "scorer", None),
        wordbank=getattr(args, "wordbank", None),
        reference=getattr(args, "ref", None),
        common=getattr(args, "common", None),
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _plain_words(text: str) -> list[str]:
    """Whitespace-split words; a trailing period becomes its own "." token."""
    words: list[str] = []
    for raw in text.split():
        if raw != "." and raw.endswith("."):
            words.append(raw[:-1])
            words.append(".")
        else:
            words.append(raw)
    return [w for w in words if w]


def _parse_cipher_file(path: str) -> list[CipherToken]:
    try:
        return parse_document(_read_text(path))
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _reference(args: argparse.Namespace) -> ReferenceDict:
    path = getattr(args, "ref", None)
    return ReferenceDict.load(path) if path else ReferenceDict.bundled()


def _common_words(args: argparse.Namespace) -> CommonWords:
    path = getattr(args, "common", None)
    return CommonWords.load(path) if path else CommonWords.bundled()


def _lattice_config(args: argparse.Namespace) -> LatticeConfig:
    return LatticeConfig(
        beta=getattr(args, "beta", 5.0),
        common_words=_common_words(args).words,
    )


def _segments_for(payload):
    tokens, wb, ref, cfg = payload
    return [build_segment(t, wb, ref, cfg) for t in tokens]


def _build_lattice(
    doc: list[CipherToken],
    wb: Wordbank,
    ref: ReferenceDict,
    cfg: LatticeConfig,
    jobs: int,
) -> Lattice:
    if jobs <= 1 or len(doc) < 2 * jobs:
        return build_lattice(doc, wb, ref, cfg)
    step = (len(doc) + jobs - 1) // jobs
    chunks = [doc[i : i + step] for i in range(0, len(doc), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_segments_for, [(c, wb, ref, cfg) for c in chunks]))
    return Lattice(tuple(seg for part in parts for seg in part))


def _strip_runtime(path, timing: bool):
    return path if timing else dataclasses.replace(path, runtime_s=None)


# --- subcommands ---------------------------------------------------------


def cmd_parse(args: argparse.Namespace) -> int:
    doc = _parse_cipher_file(args.file)
    lines = ["n\ttoken\tkind\tposition\tsuffix"]
    for n, token in enumerate(doc, 1):
        if token.kind in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE):
            position = str(token_position(token))
        else:
            position = "-"
        lines.append(
            f"{n}\t{render_token(token)}\t{token.kind.name.lower()}"
            f"\t{position}\t{token.suffix or '-'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_wordbank(args: argparse.Namespace) -> int:
    doc = _parse_cipher_file(args.cipher)
    words = _plain_words(_read_text(args.plain))
    if len(doc) != len(words):
        raise ValueError(
            f"{args.cipher}: {len(doc)} tokens but {args.plain}: "
            f"{len(words)} words; parallel texts must align one to one"
        )
    delemma = Delemmatizer(_reference(args).words)
    pairs = []
    for token, word in zip(doc, words):
        if token.kind not in (TokenKind.TABLE_CODE, TokenKind.DICT_CODE):
            continue
        if token.suffix:
            found = delemma.lookup(word.lower())
            if found is None or found[1] != token.suffix:
                log.warning(
                    "skipping %s / %r: cannot recover a lemma for suffix %r",
                    render_token(token), word, token.suffix,
                )
                continue
            pairs.append((token, found[0]))
        else:
            pairs.append((token, word))
    wb = extract_wordbank(pairs)
    _emit(format_wordbank(wb), args.out)
    log.info("wordbank: %d entries from %d pairs", len(wb), len(pairs))
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    _run_config(args)
    doc = _parse_cipher_file(args.cipher)
    wb = load_wordbank(args.wordbank)
    lat = _build_lattice(
        doc, wb, _reference(args), _lattice_config(args), args.jobs
    )
    _emit(lattice_json(lat) + "\n", args.out)
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    if not cfg.scorer:
        raise ValueError("decode needs --scorer ngram:<model-file> or external:<command>")
    lat = load_lattice(args.lattice)
    scorer = scorer_from_spec(cfg.scorer)
    try:
        path = beam_decode(lat, scorer, beam=cfg.beam, a=cfg.lattice_weight)
    finally:
        if isinstance(scorer, ExternalScorer):
            scorer.close()
    _emit(format_decode_path(_strip_runtime(path, args.timing)), args.out)
    return 0


def cmd_self_learn(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    if not cfg.scorer:
        raise ValueError("self-learn needs --scorer ngram:<model-file> or external:<command>")
    doc = _parse_cipher_file(args.cipher)
    wb = load_wordbank(args.wordbank)
    learn_cfg = SelfLearnConfig(
        iterations=args.iterations,
        promote_fraction=args.promote_fraction,
        min_confidence=args.min_confidence,
    )
    scorer = scorer_from_spec(cfg.scorer)
    try:
        path, learned = self_learn(
            doc, wb, _reference(args), scorer, learn_cfg,
            beam=cfg.beam, a=cfg.lattice_weight,
            lattice_cfg=_lattice_config(args),
        )
    finally:
        if isinstance(scorer, ExternalScorer):
            scorer.close()
    if args.out_wordbank:
        save_wordbank(learned, args.out_wordbank)
    log.info("wordbank grew from %d to %d entries", len(wb), len(learned))
    _emit(format_decode_path(_strip_runtime(path, args.timing)), args.out)
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    if args.book:
        words = [w.lower() for w in _plain_words(_read_text(args.book))]
    else:
        words = generate_book(seed=args.seed, n_tokens=args.generate)
    cfg = SynthConfig.build(
        _reference(args).words, _common_words(args).words, k=args.table_size
    )
    doc, alignment = synth_encipher(words, cfg)
    Path(args.out_cipher).write_text(
        render_document(doc) + "\n", encoding="utf-8"
    )
    Path(args.out_plain).write_text(
        " ".join(a.surface for a in alignment) + "\n", encoding="utf-8"
    )
    if args.out_key:
        save_wordbank(full_key_wordbank(cfg), args.out_key)
    log.info("enciphered %d tokens", len(doc))
    return 0


def cmd_data_efficiency(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    if not cfg.scorer:
        raise ValueError("data-efficiency needs --scorer ngram:<model-file>")
    sizes = sorted({int(s) for s in args.sizes.split(",") if s.strip()})
    if not sizes:
        raise ValueError(f"no parallel sizes in {args.sizes!r}")
    train = [w.lower() for w in _plain_words(_read_text(args.train))]
    test = [w.lower() for w in _plain_words(_read_text(args.test))]
    ref = _reference(args)
    synth_cfg = SynthConfig.build(
        ref.words, _common_words(args).words, k=args.table_size
    )
    scorer = scorer_from_spec(cfg.scorer)
    lattice_cfg = _lattice_config(args)
    try:
        if args.jobs > 1 and not isinstance(scorer, ExternalScorer):
            payloads = [
                ([n], train, test, synth_cfg, ref, scorer,
                 cfg.beam, cfg.lattice_weight, lattice_cfg)
                for n in sizes
            ]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                rows = [r[0] for r in pool.map(_efficiency_one, payloads)]
        else:
            if args.jobs > 1:
                log.warning("external scorer cannot fork; running sequentially")
            rows = data_efficiency(
                sizes, train, test, synth_cfg, ref, scorer,
                beam=cfg.beam, a=cfg.lattice_weight, lattice_cfg=lattice_cfg,
            )
    finally:
        if isinstance(scorer, ExternalScorer):
            scorer.close()
    _emit(format_efficiency_report(rows), args.out)
    if args.json:
        Path(args.json).write_text(efficiency_json(rows) + "\n", encoding="utf-8")
    return 0


def _efficiency_one(payload):
    sizes, train, test, synth_cfg, ref, scorer, beam, a, lattice_cfg = payload
    return data_efficiency(
        sizes, train, test, synth_cfg, ref, scorer,
        beam=beam, a=a, lattice_cfg=lattice_cfg,
    )


def cmd_evaluate(args: argparse.Namespace) -> int:
    path = load_decode_path(args.path)
    gold = [w.lower() for w in _plain_words(_read_text(args.gold))]
    wb = load_wordbank(args.wordbank) if args.wordbank else None
    lat = load_lattice(args.lattice) if args.lattice else None
    metrics = evaluate(path, gold, wb=wb, lattice=lat)
    _emit(metrics.to_json() + "\n", args.out)
    return 0


def cmd_train_lm(args: argparse.Namespace) -> int:
    words = _plain_words(_read_text(args.corpus))
    model = train_ngram(
        split_sentences(words), order=args.order, discount=args.discount
    )
    save_model(model, args.out)
    log.info(
        "trained order-%d model: %d vocabulary words", model.order, len(model.vocab)
    )
    return 0


# --- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for anything random (default 0)")
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for lattice building and trials")
    common.add_argument("--verbose", action="store_true",
                        help="log progress to stderr")

    decoding = argparse.ArgumentParser(add_help=False)
    decoding.add_argument("--beam", type=int, default=4,
                          help="beam width (default 4)")
    decoding.add_argument("--lattice-weight", type=float, default=1.0,
                          dest="lattice_weight", metavar="A",
                          help="weight a on lattice log-probabilities (default 1.0)")
    decoding.add_argument("--timing", action="store_true",
                          help="include wall time in the output footer")

    latticing = argparse.ArgumentParser(add_help=False)
    latticing.add_argument("--beta", type=float, default=5.0,
                           help="interpolation sharpness (default 5)")
    latticing.add_argument("--ref", help="reference dictionary word list")
    latticing.add_argument("--common", help="frequency-ranked common-words list")

    p = argparse.ArgumentParser(
        prog="bookcode",
        description="Solve dictionary and table book codes by known-plaintext attack.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", parents=[common],
                        help="parse a cipher transcription into a token listing")
    sp.add_argument("file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("wordbank", parents=[common, latticing],
                        help="extract a wordbank from parallel cipher and plaintext")
    sp.add_argument("--cipher", required=True)
    sp.add_argument("--plain", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_wordbank)

    sp = sub.add_parser("lattice", parents=[common, latticing],
                        help="build a decipherment lattice as JSON")
    sp.add_argument("--cipher", required=True)
    sp.add_argument("--wordbank", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("decode", parents=[common, decoding],
                        help="beam-decode a lattice under a language model")
    sp.add_argument("--lattice", required=True)
    sp.add_argument("--scorer", required=True,
                    help="ngram:<model-file> or external:<command>")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("self-learn", parents=[common, decoding, latticing],
                        help="decode, promote confident tokens, repeat")
    sp.add_argument("--cipher", required=True)
    sp.add_argument("--wordbank", required=True)
    sp.add_argument("--scorer", required=True)
    sp.add_argument("--iterations", type=int, default=3)
    sp.add_argument("--promote-fraction", type=float, default=0.1,
                    dest="promote_fraction")
    sp.add_argument("--min-confidence", type=float, default=-10.0,
                    dest="min_confidence")
    sp.add_argument("--out")
    sp.add_argument("--out-wordbank", dest="out_wordbank")
    sp.set_defaults(func=cmd_self_learn)

    sp = sub.add_parser("synth", parents=[common, latticing],
                        help="encipher plaintext into a synthetic book code")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--book", help="plaintext file to encipher")
    group.add_argument("--generate", type=int, metavar="N",
                       help="generate N tokens of synthetic text instead")
    sp.add_argument("--table-size", type=int, default=1000, dest="table_size",
                    help="how many frequent words get table codes")
    sp.add_argument("--out-cipher", required=True, dest="out_cipher")
    sp.add_argument("--out-plain", required=True, dest="out_plain")
    sp.add_argument("--out-key", dest="out_key",
                    help="also write the full key as a wordbank")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("data-efficiency", parents=[common, decoding, latticing],
                        help="wordbank size, coverage and accuracy versus parallel data")
    sp.add_argument("--train", required=True, help="parallel-text word file")
    sp.add_argument("--test", required=True, help="held-out word file")
    sp.add_argument("--scorer", required=True)
    sp.add_argument("--sizes", default="500,2000",
                    help="comma-separated parallel token counts")
    sp.add_argument("--table-size", type=int, default=1000, dest="table_size")
    sp.add_argument("--out")
    sp.add_argument("--json", help="also write rows as JSON")
    sp.set_defaults(func=cmd_data_efficiency)

    sp = sub.add_parser("evaluate", parents=[common],
                        help="score a decode path against gold plaintext")
    sp.add_argument("--path", required=True, help="decode-path TSV")
    sp.add_argument("--gold", required=True, help="gold plaintext word file")
    sp.add_argument("--wordbank", help="report coverage against this wordbank")
    sp.add_argument("--lattice", help="report oracle accuracy on this lattice")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_evaluate)

    sp = sub.add_parser("train-lm", parents=[common],
                        help="train the built-in n-gram model on a word file")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--order", type=int, default=3)
    sp.add_argument("--discount", type=float, default=0.75)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_train_lm)

    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ValueError, OSError, ExternalScorerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
