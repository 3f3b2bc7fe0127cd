#!/usr/bin/env python3
"""Sweep wordbank size, coverage and accuracy against parallel-data size.

Generates a synthetic corpus triple (parallel text, held-out letter, and a
disjoint language-model text), enciphers it, then reports how decoding
quality grows with the amount of parallel material.  Plain library calls,
fully seeded; pass --train/--test/--lm-corpus to use your own word files
instead of generated text.
"""

import argparse
import sys
from pathlib import Path

from bookcode.lm import NGramScorer, split_sentences, train_ngram
from bookcode.pipeline import (
    SynthConfig,
    data_efficiency,
    efficiency_json,
    format_efficiency_report,
)
from bookcode.refdict import CommonWords, ReferenceDict
from bookcode.textgen import generate_book


def words_from(path: str | None, seed: int, n_tokens: int) -> list[str]:
    if path:
        return Path(path).read_text(encoding="utf-8").lower().split()
    return generate_book(seed=seed, n_tokens=n_tokens)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="125,250,500,1000,2000,4000",
                    help="comma-separated parallel token counts")
    ap.add_argument("--train", help="parallel plaintext word file")
    ap.add_argument("--test", help="held-out plaintext word file")
    ap.add_argument("--lm-corpus", dest="lm_corpus",
                    help="disjoint text for the n-gram model")
    ap.add_argument("--order", type=int, default=3)
    ap.add_argument("--beam", type=int, default=4)
    ap.add_argument("--table-size", type=int, default=1000, dest="table_size")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="also write rows as JSON")
    args = ap.parse_args()

    sizes = sorted({int(s) for s in args.sizes.split(",") if s.strip()})
    train = words_from(args.train, args.seed + 1, max(sizes) + 1000)
    test = words_from(args.test, args.seed + 2, 1200)
    lm_words = words_from(args.lm_corpus, args.seed + 3, 20000)

    ref = ReferenceDict.bundled()
    cfg = SynthConfig.build(ref.words, CommonWords.bundled().words,
                            k=args.table_size)
    scorer = NGramScorer(train_ngram(split_sentences(lm_words), order=args.order))

    rows = data_efficiency(sizes, train, test, cfg, ref, scorer, beam=args.beam)
    sys.stdout.write(format_efficiency_report(rows))
    if args.json:
        Path(args.json).write_text(efficiency_json(rows) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
