#!/usr/bin/env python3
"""Measure how beam width and the lattice weight shape decoding quality.

Builds one synthetic letter with a partial wordbank, then decodes it at
every (beam, weight) combination, reporting combined score, token
accuracy and wall time as TSV.  Scores at a fixed weight are comparable
across beams; wider never scores worse.
"""

import argparse
import sys

from bookcode.decoder import beam_decode
from bookcode.lattice import LatticeConfig, build_lattice
from bookcode.lm import NGramScorer, split_sentences, train_ngram
from bookcode.pipeline import SynthConfig, evaluate, synth_encipher, wordbank_pairs
from bookcode.refdict import CommonWords, ReferenceDict
from bookcode.textgen import generate_book
from bookcode.wordbank import extract_wordbank


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beams", default="1,2,4,8,16,64")
    ap.add_argument("--lattice-weights", default="1.0", dest="weights",
                    help="comma-separated values of the weight a")
    ap.add_argument("--letter-tokens", type=int, default=600,
                    dest="letter_tokens")
    ap.add_argument("--parallel-tokens", type=int, default=500,
                    dest="parallel_tokens")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    beams = sorted({int(b) for b in args.beams.split(",") if b.strip()})
    weights = [float(w) for w in args.weights.split(",") if w.strip()]

    ref = ReferenceDict.bundled()
    cfg = SynthConfig.build(ref.words, CommonWords.bundled().words)
    train = generate_book(seed=args.seed + 1, n_tokens=args.parallel_tokens + 500)
    letter = generate_book(seed=args.seed + 2, n_tokens=args.letter_tokens)
    lm_words = generate_book(seed=args.seed + 3, n_tokens=20000)
    scorer = NGramScorer(train_ngram(split_sentences(lm_words), order=3))

    _, train_alignment = synth_encipher(train, cfg)
    doc, alignment = synth_encipher(letter, cfg)
    wb = extract_wordbank(wordbank_pairs(train_alignment, args.parallel_tokens))
    lattice = build_lattice(doc, wb, ref, LatticeConfig())
    gold = [a.surface for a in alignment]

    sys.stdout.write("beam\tweight\tcombined\taccuracy\truntime_s\n")
    for weight in weights:
        for beam in beams:
            path = beam_decode(lattice, scorer, beam=beam, a=weight)
            accuracy = evaluate(path, gold).token_accuracy
            sys.stdout.write(
                f"{beam}\t{weight}\t{path.combined:.3f}"
                f"\t{100 * accuracy:.1f}\t{path.runtime_s:.3f}\n"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
