"""Incremental language-model scoring and a built-in n-gram model.

The decoder talks to any scorer through three calls: tokenize a word into
the model's tokens, begin a fresh context, and extend a context with one
token to get its conditional log probability.  States are value-like, so
hypotheses can fork them freely.

The built-in model is an interpolated Kneser-Ney n-gram (discount 0.75)
over a closed vocabulary plus an unknown symbol.  Sentence ends are scored
as an explicit end token: the scorer maps "." to it and resets context.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Protocol, Sequence

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"

DEFAULT_ORDER = 3
DEFAULT_DISCOUNT = 0.75

MODEL_MAGIC = "bookcode-ngram"
MODEL_VERSION = 1

State = tuple[str, ...]


class Scorer(Protocol):
    """Incremental scoring contract the decoder relies on."""

    def tokenize(self, word: str) -> list[str]: ...

    def begin(self) -> State: ...

    def extend(self, state: State, token: str) -> tuple[State, float]: ...


def split_sentences(words: Iterable[str]) -> list[list[str]]:
    """Split a word stream into sentences on "." tokens (the "." dropped)."""
    sentences: list[list[str]] = []
    current: list[str] = []
    for word in words:
        if word == ".":
            if current:
                sentences.append(current)
            current = []
        else:
            current.append(word.lower())
    if current:
        sentences.append(current)
    return sentences


@dataclass(frozen=True)
class NGramModel:
    """Interpolated Kneser-Ney model; immutable once trained.

    Only the highest-order counts are stored; history totals and the
    continuation-count tables of every lower order derive from them.
    """

    order: int
    discount: float
    vocab: frozenset[str]
    counts: dict[tuple[str, ...], int]
    _hist_total: dict[tuple[str, ...], int] = field(init=False, repr=False, compare=False)
    _hist_types: dict[tuple[str, ...], int] = field(init=False, repr=False, compare=False)
    _cont: list[dict] = field(init=False, repr=False, compare=False)
    _cont_total: list[dict] = field(init=False, repr=False, compare=False)
    _cont_types: list[dict] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if not 0.0 < self.discount < 1.0:
            raise ValueError(f"discount out of (0,1): {self.discount}")
        if not self.counts:
            raise ValueError("empty model: no n-gram counts")

        hist_total: dict[tuple[str, ...], int] = {}
        hist_types: dict[tuple[str, ...], int] = {}
        for gram, c in self.counts.items():
            ctx = gram[:-1]
            hist_total[ctx] = hist_total.get(ctx, 0) + c
            hist_types[ctx] = hist_types.get(ctx, 0) + 1

        # cont[k] maps (k+1)-grams to their continuation count: the number
        # of distinct tokens that precede the gram one level up.
        cont: list[dict] = []
        cont_total: list[dict] = []
        cont_types: list[dict] = []
        upper: Iterable[tuple[str, ...]] = self.counts.keys()
        for _ in range(self.order - 1):
            table: dict[tuple[str, ...], set] = {}
            for gram in upper:
                table.setdefault(gram[1:], set()).add(gram[0])
            cc = {g: len(preds) for g, preds in table.items()}
            total: dict[tuple[str, ...], int] = {}
            types: dict[tuple[str, ...], int] = {}
            for gram, c in cc.items():
                ctx = gram[:-1]
                total[ctx] = total.get(ctx, 0) + c
                types[ctx] = types.get(ctx, 0) + 1
            cont.append(cc)
            cont_total.append(total)
            cont_types.append(types)
            upper = cc.keys()

        object.__setattr__(self, "_hist_total", hist_total)
        object.__setattr__(self, "_hist_types", hist_types)
        object.__setattr__(self, "_cont", cont)
        object.__setattr__(self, "_cont_total", cont_total)
        object.__setattr__(self, "_cont_types", cont_types)

    def map_token(self, token: str) -> str:
        if token == ".":
            return EOS
        return token if token in self.vocab or token == BOS else UNK

    def prob(self, context: Sequence[str], token: str) -> float:
        """P(token | context); context is the mapped last order-1 tokens."""
        token = self.map_token(token)
        ctx = tuple(self.map_token(t) for t in context)[-(self.order - 1):] if self.order > 1 else ()
        d = self.discount

        def level(k: int, ctx: tuple[str, ...]) -> float:
            # Uniform base over the vocabulary plus the unknown symbol.
            if k == 0:
                return 1.0 / (len(self.vocab) + 1)
            if k == self.order:
                gram_count = self.counts.get(ctx + (token,), 0)
                total = self._hist_total.get(ctx, 0)
                types = self._hist_types.get(ctx, 0)
            else:
                cc = self._cont[self.order - 1 - k]
                gram_count = cc.get(ctx + (token,), 0)
                total = self._cont_total[self.order - 1 - k].get(ctx, 0)
                types = self._cont_types[self.order - 1 - k].get(ctx, 0)
            if total == 0:
                return level(k - 1, ctx[1:])
            num = max(gram_count - d, 0.0) / total
            lam = d * types / total
            return num + lam * level(k - 1, ctx[1:])

        return level(self.order, ctx)


def train_ngram(
    corpus: Iterable[Sequence[str]],
    order: int = DEFAULT_ORDER,
    discount: float = DEFAULT_DISCOUNT,
) -> NGramModel:
    """Train on sentences (token lists without the trailing ".").

    Each sentence is padded with start symbols and closed with the end
    token, then counted at the highest order only.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    counts: dict[tuple[str, ...], int] = {}
    vocab: set[str] = {EOS}
    n_sentences = 0
    for sentence in corpus:
        tokens = [w.lower() for w in sentence if w and w != "."]
        if not tokens:
            continue
        n_sentences += 1
        vocab.update(tokens)
        padded = [BOS] * (order - 1) + tokens + [EOS]
        for i in range(order - 1, len(padded)):
            gram = tuple(padded[i - order + 1 : i + 1])
            counts[gram] = counts.get(gram, 0) + 1
    if n_sentences == 0:
        raise ValueError("empty corpus")
    return NGramModel(order, discount, frozenset(vocab), counts)


@dataclass(frozen=True)
class NGramScorer:
    """Scorer view of an n-gram model: one word is one token."""

    model: NGramModel

    def tokenize(self, word: str) -> list[str]:
        if not word:
            raise ValueError("cannot tokenize an empty word")
        return word.lower().split()

    def begin(self) -> State:
        return (BOS,) * (self.model.order - 1)

    def extend(self, state: State, token: str) -> tuple[State, float]:
        mapped = self.model.map_token(token)
        lp = math.log(self.model.prob(state, mapped))
        if mapped == EOS:
            new_state = self.begin()
        elif self.model.order > 1:
            new_state = (state + (mapped,))[-(self.model.order - 1):]
        else:
            new_state = ()
        return new_state, lp


def score_words(scorer: Scorer, words: Iterable[str]) -> float:
    """Total log probability of a word stream ("." closes sentences)."""
    state = scorer.begin()
    total = 0.0
    for word in words:
        for token in scorer.tokenize(word):
            state, lp = scorer.extend(state, token)
            total += lp
    return total


def perplexity(scorer: Scorer, words: Sequence[str]) -> float:
    """exp of the mean negative log probability per scored token."""
    state = scorer.begin()
    total = 0.0
    n = 0
    for word in words:
        for token in scorer.tokenize(word):
            state, lp = scorer.extend(state, token)
            total += lp
            n += 1
    if n == 0:
        raise ValueError("nothing to score")
    return math.exp(-total / n)


def save_model(model: NGramModel, path: str | Path) -> None:
    """Versioned text format: header, vocabulary block, count block."""
    lines = [
        f"{MODEL_MAGIC} v{MODEL_VERSION}",
        f"order\t{model.order}",
        f"discount\t{model.discount!r}",
        f"vocab\t{len(model.vocab)}",
    ]
    lines.extend(sorted(model.vocab))
    lines.append(f"counts\t{len(model.counts)}")
    for gram in sorted(model.counts):
        lines.append(" ".join(gram) + f"\t{model.counts[gram]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> NGramModel:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith(MODEL_MAGIC):
        raise ValueError(f"{path}: not a model file")
    if lines[0] != f"{MODEL_MAGIC} v{MODEL_VERSION}":
        raise ValueError(f"{path}: unsupported version {lines[0]!r}")
    order = int(lines[1].split("\t")[1])
    discount = float(lines[2].split("\t")[1])
    vocab_size = int(lines[3].split("\t")[1])
    pos = 4
    vocab = frozenset(lines[pos : pos + vocab_size])
    pos += vocab_size
    count_size = int(lines[pos].split("\t")[1])
    pos += 1
    counts: dict[tuple[str, ...], int] = {}
    for line in lines[pos : pos + count_size]:
        gram_text, count_text = line.rsplit("\t", 1)
        counts[tuple(gram_text.split(" "))] = int(count_text)
    if len(counts) != count_size:
        raise ValueError(f"{path}: truncated count block")
    return NGramModel(order, discount, vocab, counts)
