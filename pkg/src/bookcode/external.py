"""Scorer backed by a subprocess speaking newline-delimited JSON.

The child process reads one JSON request per line on stdin and writes one
JSON response per line on stdout, in order, each carrying a protocol
version field.  Three operations exist: "ping" (liveness, reports the
model's context window), "tokenize" (word to subword ids), and "score"
(context ids plus continuation id sequences to one log probability each).
Context truncation to the model window is the child's job.

This client adapts that protocol to the incremental scorer contract: a
scorer token is one subword id rendered in decimal, and a state is the
tuple of ids seen so far.  Responses are cached, which is sound because
the protocol requires determinism.
"""

from __future__ import annotations

import json
import logging
import math
import shlex
import subprocess
from dataclasses import dataclass, field

from bookcode.lm import NGramScorer, Scorer, load_model

log = logging.getLogger(__name__)

PROTOCOL_VERSION = 1


class ExternalScorerError(RuntimeError):
    """The child process misbehaved: bad response, error reply, or death."""


@dataclass
class ExternalScorer:
    """Incremental scorer proxying to a line-protocol subprocess."""

    command: str
    window: int | None = None
    _proc: subprocess.Popen | None = field(default=None, repr=False)
    _tokenize_cache: dict[str, tuple[str, ...]] = field(
        default_factory=dict, repr=False
    )
    _score_cache: dict[tuple[tuple[str, ...], str], float] = field(
        default_factory=dict, repr=False
    )

    @classmethod
    def launch(cls, command: str) -> "ExternalScorer":
        """Start the child and confirm liveness with a ping."""
        if not command.strip():
            raise ValueError("empty scorer command")
        proc = subprocess.Popen(
            shlex.split(command),
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            encoding="utf-8",
            bufsize=1,
        )
        scorer = cls(command=command, _proc=proc)
        reply = scorer._request({"op": "ping"})
        if reply.get("ok") is not True:
            scorer.close()
            raise ExternalScorerError(f"ping not acknowledged: {reply!r}")
        window = reply.get("window")
        if window is not None:
            scorer.window = int(window)
        log.info("external scorer up: %s (window=%s)", command, scorer.window)
        return scorer

    def _request(self, payload: dict) -> dict:
        if self._proc is None or self._proc.poll() is not None:
            raise ExternalScorerError(
                f"scorer process is not running: {self.command!r}"
            )
        assert self._proc.stdin is not None and self._proc.stdout is not None
        self._proc.stdin.write(json.dumps(payload) + "\n")
        self._proc.stdin.flush()
        line = self._proc.stdout.readline()
        if not line:
            code = self._proc.poll()
            raise ExternalScorerError(
                f"scorer closed its output (exit code {code}) "
                f"while handling {payload!r}"
            )
        try:
            reply = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ExternalScorerError(f"unparseable reply {line!r}") from exc
        if reply.get("v") != PROTOCOL_VERSION:
            raise ExternalScorerError(
                f"protocol version {reply.get('v')!r}, "
                f"expected {PROTOCOL_VERSION}"
            )
        if "error" in reply:
            raise ExternalScorerError(f"scorer error: {reply['error']}")
        return reply

    def tokenize(self, word: str) -> list[str]:
        if not word:
            raise ValueError("cannot tokenize an empty word")
        cached = self._tokenize_cache.get(word)
        if cached is None:
            reply = self._request({"op": "tokenize", "word": word})
            ids = reply.get("ids")
            if not isinstance(ids, list) or not ids:
                raise ExternalScorerError(f"bad tokenize reply {reply!r}")
            cached = tuple(str(int(i)) for i in ids)
            self._tokenize_cache[word] = cached
        return list(cached)

    def begin(self) -> tuple[str, ...]:
        return ()

    def extend(
        self, state: tuple[str, ...], token: str
    ) -> tuple[tuple[str, ...], float]:
        key = (state, token)
        lp = self._score_cache.get(key)
        if lp is None:
            reply = self._request(
                {
                    "op": "score",
                    "context": [int(t) for t in state],
                    "continuations": [[int(token)]],
                }
            )
            scores = reply.get("scores")
            if not isinstance(scores, list) or len(scores) != 1:
                raise ExternalScorerError(f"bad score reply {reply!r}")
            lp = float(scores[0])
            if not math.isfinite(lp) or lp > 0.0:
                raise ExternalScorerError(
                    f"log probability {lp!r} outside (-inf, 0]"
                )
            self._score_cache[key] = lp
        return state + (token,), lp

    def close(self) -> None:
        """Stop the child: close stdin, then wait briefly before killing."""
        proc, self._proc = self._proc, None
        if proc is None:
            return
        if proc.stdin is not None:
            try:
                proc.stdin.close()
            except OSError:
                pass
        try:
            proc.wait(timeout=5)
        except subprocess.TimeoutExpired:
            proc.kill()
            proc.wait()

    def __enter__(self) -> "ExternalScorer":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def scorer_from_spec(spec: str) -> Scorer:
    """Build a scorer from "ngram:<model-file>" or "external:<command>"."""
    kind, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise ValueError(
            f"scorer spec {spec!r} is not ngram:<model-file> "
            f"or external:<command>"
        )
    if kind == "ngram":
        return NGramScorer(load_model(rest))
    if kind == "external":
        return ExternalScorer.launch(rest)
    raise ValueError(f"unknown scorer kind {kind!r} in {spec!r}")
