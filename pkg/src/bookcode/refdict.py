"""Reference word lists: the modern lemma dictionary and the common-words list.

Both are plain UTF-8 files, one word per line.  The lemma dictionary is
sorted and deduplicated; the common-words list is ordered by frequency rank
(most frequent first).  Bundled desk-scale copies live in bookcode/data.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path


def _read_words(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        w = line.strip()
        if w and not w.startswith("#"):
            out.append(w)
    return out


def _bundled(name: str) -> str:
    return resources.files("bookcode").joinpath("data", name).read_text(encoding="utf-8")


@dataclass(frozen=True)
class ReferenceDict:
    """Alphabetically sorted, deduplicated list of lowercase lemmas."""

    words: tuple[str, ...]

    def __post_init__(self):
        for i in range(1, len(self.words)):
            if not self.words[i - 1] < self.words[i]:
                raise ValueError(
                    f"reference dictionary not strictly sorted at entry {i}: "
                    f"{self.words[i - 1]!r} >= {self.words[i]!r}"
                )

    @classmethod
    def from_words(cls, words) -> "ReferenceDict":
        return cls(tuple(sorted({w.strip().lower() for w in words if w.strip()})))

    @classmethod
    def load(cls, path: str | Path) -> "ReferenceDict":
        return cls.from_words(_read_words(Path(path).read_text(encoding="utf-8")))

    @classmethod
    def bundled(cls) -> "ReferenceDict":
        return cls.from_words(_read_words(_bundled("lemmas.txt")))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        i = bisect.bisect_left(self.words, word)
        return i < len(self.words) and self.words[i] == word

    def between(self, lo: str, hi: str) -> list[str]:
        """Words strictly between lo and hi (both excluded)."""
        if not lo < hi:
            raise ValueError(f"need lo < hi alphabetically, got {lo!r} >= {hi!r}")
        start = bisect.bisect_right(self.words, lo)
        stop = bisect.bisect_left(self.words, hi)
        return list(self.words[start:stop])

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(self.words) + "\n", encoding="utf-8")


@dataclass(frozen=True)
class CommonWords:
    """Frequency-ranked word list; rank 0 is the most common word."""

    words: tuple[str, ...]
    _ranks: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ranks = {}
        for i, w in enumerate(self.words):
            if w in ranks:
                raise ValueError(f"duplicate common word {w!r}")
            ranks[w] = i
        object.__setattr__(self, "_ranks", ranks)

    @classmethod
    def load(cls, path: str | Path) -> "CommonWords":
        return cls(tuple(_read_words(Path(path).read_text(encoding="utf-8"))))

    @classmethod
    def bundled(cls) -> "CommonWords":
        return cls(tuple(_read_words(_bundled("common_words.txt"))))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self._ranks

    def rank(self, word: str) -> int:
        """Frequency rank; unlisted words rank below every listed word."""
        return self._ranks.get(word, len(self.words))
