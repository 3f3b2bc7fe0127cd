"""Path extraction from a decipherment lattice.

The beam decoder walks segment by segment.  Within a segment, candidate
token sequences live in a trie, so hypotheses extend shared prefixes once
and a whole subtree can be abandoned when even its most optimistic
completion (current score plus the best lattice mass below the node, with
future LM terms bounded by zero) falls below the current beam floor.
Hypotheses are compared only at segment boundaries, and every tie breaks
toward the lexicographically smaller word sequence.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

from bookcode.lattice import Candidate, Lattice, Segment
from bookcode.lm import Scorer
from bookcode.transcript import CipherToken, parse_document, render_token

EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True, slots=True)
class DecodeStep:
    token: CipherToken
    word: str
    lm_log_prob: float
    lattice_log_prob: float


@dataclass(frozen=True)
class DecodePath:
    steps: tuple[DecodeStep, ...]
    lm_score: float
    lattice_score: float
    combined: float
    a: float = 1.0
    beam: int | None = None
    runtime_s: float | None = None
    in_lattice_rate: float | None = None

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(s.word for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True, slots=True)
class Hypothesis:
    """A partial decode, synchronized at a segment boundary."""

    segment_index: int
    chosen: tuple[str, ...]
    scorer_state: tuple
    lm_score: float
    lattice_score: float
    combined: float
    lm_steps: tuple[float, ...] = ()
    lat_steps: tuple[float, ...] = ()

    def __post_init__(self):
        if len(self.chosen) != self.segment_index:
            raise ValueError("hypothesis length must equal its segment index")
        if not math.isfinite(self.combined):
            raise ValueError("non-finite combined score")


class _TrieNode:
    __slots__ = ("children", "leaf", "best_lattice")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.leaf: Candidate | None = None
        self.best_lattice = -math.inf


class SegmentTrie:
    """Candidate token sequences of one segment, shared by prefix.

    Each node remembers the best lattice log-probability beneath it, the
    optimistic bound used for pruning.
    """

    def __init__(self, root: _TrieNode, size: int):
        self.root = root
        self.size = size

    @classmethod
    def build(cls, segment: Segment, scorer: Scorer) -> "SegmentTrie":
        root = _TrieNode()
        size = 0
        for cand in segment.candidates:
            node = root
            path = [root]
            for token in scorer.tokenize(cand.word):
                node = node.children.setdefault(token, _TrieNode())
                path.append(node)
            # Distinct words with identical token sequences collapse to the
            # stronger candidate (ties to the alphabetically first).
            if (
                node.leaf is None
                or cand.log_prob > node.leaf.log_prob
                or (cand.log_prob == node.leaf.log_prob and cand.word < node.leaf.word)
            ):
                if node.leaf is None:
                    size += 1
                node.leaf = cand
            for seen in path:
                seen.best_lattice = max(seen.best_lattice, cand.log_prob)
        return cls(root, size)


def _finish(
    hyps: list[Hypothesis],
    a: float,
    beam: int | None,
    runtime_s: float,
    tokens: list[CipherToken],
) -> DecodePath:
    best = min(hyps, key=lambda h: (-h.combined, h.chosen))
    steps = tuple(
        DecodeStep(tok, word, lm, lat)
        for tok, word, lm, lat in zip(tokens, best.chosen, best.lm_steps, best.lat_steps)
    )
    return DecodePath(
        steps, best.lm_score, best.lattice_score, best.combined,
        a=a, beam=beam, runtime_s=runtime_s,
    )


def beam_decode(
    lat: Lattice,
    scorer: Scorer,
    beam: int = 4,
    a: float = 1.0,
    prune: bool = True,
) -> DecodePath:
    """Best path by segment-synchronized beam search.

    `prune` toggles the within-segment optimistic-bound cutoff; disabling
    it changes runtime, never results.
    """
    if beam < 1:
        raise ValueError(f"beam must be >= 1, got {beam}")
    if a <= 0:
        raise ValueError(f"lattice weight a must be > 0, got {a}")
    start = time.perf_counter()
    if not lat.segments:
        return DecodePath((), 0.0, 0.0, 0.0, a=a, beam=beam)

    hyps = [Hypothesis(0, (), scorer.begin(), 0.0, 0.0, 0.0)]
    for segment in lat.segments:
        trie = SegmentTrie.build(segment, scorer)
        pool: list[Hypothesis] = []
        best_scores: list[float] = []  # min-heap over the top `beam` combined

        def admit(hyp: Hypothesis):
            pool.append(hyp)
            if len(best_scores) < beam:
                heapq.heappush(best_scores, hyp.combined)
            else:
                heapq.heappushpop(best_scores, hyp.combined)

        for hyp in hyps:
            # Depth-first over the trie; lm_acc accumulates in token order
            # from zero so segment sums group identically everywhere.
            stack = [(trie.root, hyp.scorer_state, 0.0)]
            while stack:
                node, state, lm_acc = stack.pop()
                cand = node.leaf
                if cand is not None:
                    lm_total = hyp.lm_score + lm_acc
                    lat_total = hyp.lattice_score + cand.log_prob
                    admit(
                        Hypothesis(
                            hyp.segment_index + 1,
                            hyp.chosen + (cand.word,),
                            state,
                            lm_total,
                            lat_total,
                            lm_total + a * lat_total,
                            hyp.lm_steps + (lm_acc,),
                            hyp.lat_steps + (cand.log_prob,),
                        )
                    )
                for token in sorted(node.children, reverse=True):
                    child = node.children[token]
                    if prune and len(best_scores) == beam:
                        optimistic = (
                            hyp.lm_score + lm_acc + a * (hyp.lattice_score + child.best_lattice)
                        )
                        if optimistic < best_scores[0]:
                            continue
                    new_state, lp = scorer.extend(state, token)
                    stack.append((child, new_state, lm_acc + lp))
        pool.sort(key=lambda h: (-h.combined, h.chosen))
        hyps = pool[:beam]

    runtime_s = time.perf_counter() - start
    return _finish(hyps, a, beam, runtime_s, [s.token for s in lat.segments])


def exhaustive_decode(lat: Lattice, scorer: Scorer, a: float = 1.0) -> DecodePath:
    """Globally optimal path by full enumeration; a testing oracle."""
    if a <= 0:
        raise ValueError(f"lattice weight a must be > 0, got {a}")
    start = time.perf_counter()
    if not lat.segments:
        return DecodePath((), 0.0, 0.0, 0.0, a=a)
    paths = 1
    for seg in lat.segments:
        paths *= len(seg.candidates)
    if paths > EXHAUSTIVE_LIMIT:
        sizes = "x".join(str(len(s.candidates)) for s in lat.segments)
        raise ValueError(
            f"lattice too large for exhaustive search: {sizes} = {paths} paths "
            f"(limit {EXHAUSTIVE_LIMIT})"
        )

    # Candidates in deterministic word order; token lists computed once.
    per_segment = [
        [(c, scorer.tokenize(c.word)) for c in sorted(s.candidates, key=lambda c: c.word)]
        for s in lat.segments
    ]
    best: Hypothesis | None = None

    def walk(i: int, hyp: Hypothesis):
        nonlocal best
        if i == len(per_segment):
            if best is None or (-hyp.combined, hyp.chosen) < (-best.combined, best.chosen):
                best = hyp
            return
        for cand, tokens in per_segment[i]:
            state = hyp.scorer_state
            lm_acc = 0.0
            for token in tokens:
                state, lp = scorer.extend(state, token)
                lm_acc += lp
            lm_total = hyp.lm_score + lm_acc
            lat_total = hyp.lattice_score + cand.log_prob
            walk(
                i + 1,
                Hypothesis(
                    hyp.segment_index + 1,
                    hyp.chosen + (cand.word,),
                    state,
                    lm_total,
                    lat_total,
                    lm_total + a * lat_total,
                    hyp.lm_steps + (lm_acc,),
                    hyp.lat_steps + (cand.log_prob,),
                ),
            )

    walk(0, Hypothesis(0, (), scorer.begin(), 0.0, 0.0, 0.0))
    runtime_s = time.perf_counter() - start
    return _finish([best], a, None, runtime_s, [s.token for s in lat.segments])


def _rank_of(freq, word: str) -> int:
    if hasattr(freq, "rank"):
        return freq.rank(word)
    return freq.get(word, len(freq) + 1)


def unigram_decode(lat: Lattice, freq) -> DecodePath:
    """Per segment, the most frequent candidate; no language model.

    Ties break toward higher lattice probability, then alphabetically.
    LM scores in the result are zero.
    """
    start = time.perf_counter()
    steps = []
    lat_total = 0.0
    for seg in lat.segments:
        pick = min(
            seg.candidates,
            key=lambda c: (_rank_of(freq, c.word), -c.log_prob, c.word),
        )
        steps.append(DecodeStep(seg.token, pick.word, 0.0, pick.log_prob))
        lat_total += pick.log_prob
    runtime_s = time.perf_counter() - start
    return DecodePath(tuple(steps), 0.0, lat_total, lat_total, runtime_s=runtime_s)


def oracle_decode(lat: Lattice, gold) -> DecodePath:
    """Per segment, the gold word when the lattice contains it.

    Falls back to the highest-probability candidate otherwise and reports
    the fraction of gold words found in their segments.
    """
    gold = list(gold)
    if len(gold) != len(lat.segments):
        raise ValueError(
            f"gold length {len(gold)} != segment count {len(lat.segments)}"
        )
    start = time.perf_counter()
    steps = []
    lat_total = 0.0
    hits = 0
    for seg, want in zip(lat.segments, gold):
        match = next((c for c in seg.candidates if c.word == want), None)
        if match is not None:
            hits += 1
            pick = match
        else:
            pick = min(seg.candidates, key=lambda c: (-c.log_prob, c.word))
        steps.append(DecodeStep(seg.token, pick.word, 0.0, pick.log_prob))
        lat_total += pick.log_prob
    runtime_s = time.perf_counter() - start
    rate = hits / len(gold) if gold else 1.0
    return DecodePath(
        tuple(steps), 0.0, lat_total, lat_total,
        runtime_s=runtime_s, in_lattice_rate=rate,
    )


def format_decode_path(path: DecodePath) -> str:
    """TSV: cipher, word, lm logprob, lattice logprob; totals in the footer."""
    lines = ["cipher\tword\tlm_logprob\tlattice_logprob"]
    for step in path.steps:
        lines.append(
            f"{render_token(step.token)}\t{step.word}"
            f"\t{step.lm_log_prob:.6f}\t{step.lattice_log_prob:.6f}"
        )
    footer = (
        f"# lm_total={path.lm_score:.6f} lattice_total={path.lattice_score:.6f}"
        f" combined={path.combined:.6f} beam={path.beam} a={path.a}"
    )
    if path.runtime_s is not None:
        footer += f" runtime_s={path.runtime_s:.3f}"
    lines.append(footer)
    if path.in_lattice_rate is not None:
        lines.append(f"# in_lattice_rate={path.in_lattice_rate:.4f}")
    return "\n".join(lines) + "\n"


def save_decode_path(path: DecodePath, file: str | Path) -> None:
    Path(file).write_text(format_decode_path(path), encoding="utf-8")


def _parse_footer(line: str) -> dict[str, str]:
    return dict(
        part.split("=", 1) for part in line.lstrip("# ").split() if "=" in part
    )


def load_decode_path(file: str | Path) -> DecodePath:
    """Read back a decode-path TSV written by save_decode_path."""
    lines = Path(file).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "cipher\tword\tlm_logprob\tlattice_logprob":
        raise ValueError(f"{file}: not a decode-path TSV (bad header)")
    steps = []
    stats: dict[str, str] = {}
    for n, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if line.startswith("#"):
            stats.update(_parse_footer(line))
            continue
        cells = line.split("\t")
        if len(cells) != 4:
            raise ValueError(f"{file}:{n}: expected 4 columns, got {len(cells)}")
        tokens = parse_document(cells[0])
        if len(tokens) != 1:
            raise ValueError(f"{file}:{n}: cipher cell {cells[0]!r} is not one token")
        steps.append(
            DecodeStep(tokens[0], cells[1], float(cells[2]), float(cells[3]))
        )
    if not {"lm_total", "lattice_total", "combined"} <= stats.keys():
        raise ValueError(f"{file}: footer totals missing")
    beam = stats.get("beam", "None")
    rate = stats.get("in_lattice_rate")
    runtime = stats.get("runtime_s")
    return DecodePath(
        tuple(steps),
        lm_score=float(stats["lm_total"]),
        lattice_score=float(stats["lattice_total"]),
        combined=float(stats["combined"]),
        a=float(stats.get("a", 1.0)),
        beam=None if beam == "None" else int(beam),
        runtime_s=None if runtime is None else float(runtime),
        in_lattice_rate=None if rate is None else float(rate),
    )
