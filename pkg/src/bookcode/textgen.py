"""Deterministic English-like text generator for desk-scale experiments.

Plays the role of a single 18th-century letter writer: a fixed vocabulary
and a small clause grammar, sampled with Zipf-weighted choices from a seeded
RNG.  Texts generated with different seeds stand in for different books by
the same author, which is what the decipherment experiments need (train /
test / language-model corpora with shared style but disjoint content).
"""

from __future__ import annotations

import random

from bookcode.inflect import IRREGULAR_VERBS, ed_form, ing_form, s_form

DETERMINERS = [
    "the", "a", "his", "their", "this", "that", "our", "my", "your", "every",
    "some", "each", "no", "another", "any",
]

PRONOUNS = ["i", "he", "we", "they", "she", "you", "it"]

NOUNS = [
    "time", "man", "letter", "day", "country", "hand", "part", "place", "year",
    "word", "general", "government", "order", "service", "friend", "power",
    "state", "war", "army", "officer", "river", "city", "interest", "money",
    "people", "person", "house", "end", "side", "water", "point", "case",
    "night", "world", "life", "way", "thing", "nothing", "province", "fort",
    "boat", "port", "horse", "road", "land", "sea", "ship", "soldier",
    "captain", "colonel", "governor", "king", "crown", "court", "law",
    "justice", "peace", "treaty", "agent", "secret", "cipher", "paper",
    "account", "report", "answer", "question", "reason", "opinion", "design",
    "plan", "measure", "object", "purpose", "intention", "occasion", "moment",
    "hour", "week", "month", "season", "spring", "summer", "winter", "autumn",
    "morning", "evening", "father", "mother", "brother", "son", "daughter",
    "family", "wife", "child", "woman", "gentleman", "lady", "master",
    "servant", "stranger", "neighbor", "enemy", "force", "troop", "arm",
    "head", "heart", "eye", "face", "voice", "mind", "spirit", "honor",
    "courage", "danger", "fear", "hope", "doubt", "trouble", "distress",
    "fortune", "advantage", "benefit", "profit", "expense", "price", "value",
    "trade", "commerce", "business", "affair", "matter", "subject", "nature",
    "character", "condition", "situation", "circumstance", "event", "change",
    "journey", "passage", "distance", "direction", "course", "line", "border",
    "frontier", "mountain", "valley", "forest", "field", "ground", "town",
    "village", "street", "door", "room", "table", "book", "name", "number",
    "company", "party", "council", "congress", "nation", "union", "article",
    "instruction", "commission", "appointment", "payment", "pension",
    "salary", "supply", "provision", "store", "goods", "cargo", "vessel",
    "garrison", "post", "station", "settlement", "district", "territory",
    "conveyance", "correspondence", "communication", "intelligence", "news",
    "message", "dispatch", "express", "bearer", "attachment", "friendship",
    "confidence", "trust", "duty", "obligation", "promise", "offer",
    "proposal", "demand", "claim", "right", "title", "estate", "property",
    "possession", "share", "portion", "sum", "amount", "debt", "credit",
    "dollar", "piece", "weight", "means", "effect", "cause", "consequence",
    "result", "success", "failure", "loss", "gain", "victory", "defeat",
    "battle", "attack", "defense", "retreat", "march", "campaign", "expedition",
]

TRANSITIVE_VERBS = [
    "have", "make", "take", "give", "send", "receive", "write", "read",
    "know", "see", "find", "keep", "hold", "bring", "carry", "leave",
    "render", "offer", "accept", "refuse", "demand", "obtain", "secure",
    "procure", "furnish", "supply", "deliver", "convey", "transmit",
    "communicate", "inform", "advise", "direct", "order", "command",
    "instruct", "require", "request", "desire", "wish", "expect", "hope",
    "fear", "doubt", "believe", "consider", "judge", "observe", "remark",
    "mention", "declare", "assure", "promise", "engage", "undertake",
    "perform", "execute", "complete", "finish", "begin", "continue",
    "pursue", "follow", "attend", "serve", "assist", "support", "protect",
    "defend", "oppose", "resist", "prevent", "avoid", "escape", "lose",
    "gain", "win", "conquer", "defeat", "destroy", "ruin", "injure",
    "oblige", "favor", "honor", "respect", "esteem", "love", "hate",
    "forget", "remember", "recall", "regret", "lament", "enjoy", "suffer",
    "bear", "endure", "maintain", "preserve", "employ", "use", "spend",
    "pay", "owe", "buy", "sell", "exchange", "settle", "establish",
    "appoint", "choose", "elect", "name", "call", "visit", "meet",
    "join", "unite", "divide", "separate", "dissolve", "conclude",
]

INTRANSITIVE_VERBS = [
    "go", "come", "arrive", "depart", "return", "remain", "stay", "wait",
    "travel", "proceed", "advance", "retire", "retreat", "march", "sail",
    "land", "embark", "rest", "sleep", "wake", "rise", "fall", "stand",
    "sit", "walk", "ride", "run", "hasten", "delay", "linger", "succeed",
    "fail", "prosper", "suffer", "live", "die", "happen", "occur", "appear",
    "vanish", "increase", "diminish", "improve", "decline", "change",
    "continue", "cease", "begin", "end", "speak", "answer", "reply",
    "agree", "consent", "object", "complain", "rejoice",
]

ADJECTIVES = [
    "good", "great", "little", "old", "young", "new", "long", "short",
    "high", "low", "small", "large", "strong", "weak", "rich", "poor",
    "happy", "unhappy", "easy", "difficult", "hard", "soft", "warm",
    "cold", "hot", "dry", "wet", "clear", "dark", "bright", "deep",
    "wide", "narrow", "near", "distant", "late", "early", "quick",
    "slow", "certain", "uncertain", "true", "false", "just", "unjust",
    "honest", "faithful", "secret", "public", "private", "common",
    "particular", "general", "necessary", "useful", "important",
    "considerable", "principal", "present", "absent", "ready", "able",
    "willing", "anxious", "eager", "careful", "prudent", "wise",
    "foolish", "brave", "bold", "timid", "gentle", "kind", "cruel",
    "severe", "mild", "calm", "quiet", "violent", "dangerous", "safe",
    "free", "whole", "entire", "full", "empty", "open", "close",
    "agreeable", "pleasant", "favorable", "adverse", "fortunate",
]

ADVERBS = [
    "very", "most", "much", "well", "soon", "now", "then", "here",
    "there", "often", "never", "always", "sometimes", "again", "too",
    "also", "only", "perhaps", "certainly", "directly", "immediately",
    "presently", "shortly", "lately", "already", "yet", "still",
    "therefore", "however", "indeed", "truly", "greatly", "highly",
    "entirely", "extremely",
]

PREPOSITIONS = [
    "of", "in", "to", "with", "from", "by", "on", "at", "into", "upon",
    "over", "under", "through", "against", "between", "among", "before",
    "after", "during", "without", "within", "toward", "near",
]

CONJUNCTIONS = ["and", "but", "or", "because", "while", "when", "if", "though"]

MODALS = ["will", "would", "shall", "should", "may", "might", "must", "can", "could"]


def author_vocabulary() -> set[str]:
    """Every lemma the generator can emit (uninflected)."""
    vocab = set()
    for lst in (
        DETERMINERS, PRONOUNS, NOUNS, TRANSITIVE_VERBS, INTRANSITIVE_VERBS,
        ADJECTIVES, ADVERBS, PREPOSITIONS, CONJUNCTIONS, MODALS,
    ):
        vocab.update(lst)
    vocab.update(["not", "was", "were", "is", "be", "been", "had", "has", "do", "did"])
    return vocab


def _zipf_pick(rng: random.Random, items: list[str]) -> str:
    # Weight 1/(rank+1)^0.85: frequent head, long tail, like running text.
    weights = [1.0 / (i + 1) ** 0.85 for i in range(len(items))]
    return rng.choices(items, weights=weights, k=1)[0]


_SINGULAR_ONLY_DETS = {"a", "this", "that", "every", "each", "another"}
_PLURAL_PRONOUNS = {"we", "they", "you"}


class _Author:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def noun_phrase(self) -> tuple[list[str], bool]:
        """Tokens plus whether the head is plural."""
        r = self.rng.random()
        if r < 0.22:
            p = _zipf_pick(self.rng, PRONOUNS)
            return [p], p in _PLURAL_PRONOUNS
        out = [_zipf_pick(self.rng, DETERMINERS)]
        if self.rng.random() < 0.35:
            out.append(_zipf_pick(self.rng, ADJECTIVES))
        head = _zipf_pick(self.rng, NOUNS)
        plural = out[0] not in _SINGULAR_ONLY_DETS and self.rng.random() < 0.22
        out.append(s_form(head) if plural else head)
        return out, plural

    def verb(self, lemmas: list[str], plural_subject: bool) -> list[str]:
        v = _zipf_pick(self.rng, lemmas)
        r = self.rng.random()
        if r < 0.40:
            past = IRREGULAR_VERBS[v][0] if v in IRREGULAR_VERBS else ed_form(v)
            return [past]
        if r < 0.60:
            return [v] if plural_subject else [s_form(v)]
        if r < 0.75:
            return [_zipf_pick(self.rng, MODALS), v]
        if r < 0.88:
            return ["were" if plural_subject else "was", ing_form(v)]
        return [v]

    def prep_phrase(self) -> list[str]:
        return [_zipf_pick(self.rng, PREPOSITIONS), *self.noun_phrase()[0]]

    def clause(self) -> list[str]:
        rng = self.rng
        r = rng.random()
        if r < 0.38:
            subj, plural = self.noun_phrase()
            out = subj + self.verb(TRANSITIVE_VERBS, plural) + self.noun_phrase()[0]
            if rng.random() < 0.4:
                out += self.prep_phrase()
            return out
        if r < 0.62:
            subj, plural = self.noun_phrase()
            out = subj + self.verb(INTRANSITIVE_VERBS, plural)
            if rng.random() < 0.6:
                out += self.prep_phrase()
            if rng.random() < 0.25:
                out.append(_zipf_pick(rng, ADVERBS))
            return out
        if r < 0.78:
            subj, plural = self.noun_phrase()
            return subj + ["were" if plural else "was", _zipf_pick(rng, ADJECTIVES)]
        if r < 0.9:
            subj, plural = self.noun_phrase()
            out = subj + self.verb(TRANSITIVE_VERBS, plural)
            out += [_zipf_pick(rng, DETERMINERS), _zipf_pick(rng, ADJECTIVES)]
            out.append(_zipf_pick(rng, NOUNS))
            return out
        subj, plural = self.noun_phrase()
        return (
            subj
            + ["were" if plural else "was", "not", _zipf_pick(rng, ADJECTIVES)]
            + self.prep_phrase()
        )

    def sentence(self) -> list[str]:
        out = self.clause()
        while self.rng.random() < 0.3 and len(out) < 24:
            out.append(_zipf_pick(self.rng, CONJUNCTIONS))
            out.extend(self.clause())
        out.append(".")
        return out


def generate_book(seed: int, n_tokens: int) -> list[str]:
    """Lowercase word tokens with '.' sentence ends, at least n_tokens long."""
    author = _Author(random.Random(seed))
    out: list[str] = []
    while len(out) < n_tokens:
        out.extend(author.sentence())
    return out
