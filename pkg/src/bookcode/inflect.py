"""Rule-based English inflector.

Generates the regular inflected forms of a lemma (plural / 3rd person,
past, past participle, gerund) with a table of irregular verbs and noun
plurals.  Over-generation is deliberate: a wrong form is just a lattice
candidate the language model will penalize.  Closed-class function words
pass through uninflected.
"""

from __future__ import annotations

from functools import lru_cache

VOWELS = "aeiou"

# base -> (past, past participle)
IRREGULAR_VERBS: dict[str, tuple[str, str]] = {
    "arise": ("arose", "arisen"), "awake": ("awoke", "awoken"), "be": ("was", "been"),
    "bear": ("bore", "borne"), "beat": ("beat", "beaten"), "become": ("became", "become"),
    "befall": ("befell", "befallen"), "begin": ("began", "begun"), "behold": ("beheld", "beheld"),
    "bend": ("bent", "bent"), "beset": ("beset", "beset"), "bet": ("bet", "bet"),
    "bid": ("bid", "bid"), "bind": ("bound", "bound"), "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"), "blow": ("blew", "blown"), "break": ("broke", "broken"),
    "breed": ("bred", "bred"), "bring": ("brought", "brought"), "build": ("built", "built"),
    "burn": ("burnt", "burnt"), "burst": ("burst", "burst"), "buy": ("bought", "bought"),
    "cast": ("cast", "cast"), "catch": ("caught", "caught"), "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"), "come": ("came", "come"), "cost": ("cost", "cost"),
    "creep": ("crept", "crept"), "cut": ("cut", "cut"), "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"), "do": ("did", "done"), "draw": ("drew", "drawn"),
    "dream": ("dreamt", "dreamt"), "drink": ("drank", "drunk"), "drive": ("drove", "driven"),
    "dwell": ("dwelt", "dwelt"), "eat": ("ate", "eaten"), "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"), "feel": ("felt", "felt"), "fight": ("fought", "fought"),
    "find": ("found", "found"), "flee": ("fled", "fled"), "fling": ("flung", "flung"),
    "fly": ("flew", "flown"), "forbid": ("forbade", "forbidden"), "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"), "forsake": ("forsook", "forsaken"),
    "foresee": ("foresaw", "foreseen"), "foretell": ("foretold", "foretold"),
    "freeze": ("froze", "frozen"), "get": ("got", "gotten"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grind": ("ground", "ground"), "grow": ("grew", "grown"),
    "hang": ("hung", "hung"), "have": ("had", "had"), "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"), "hit": ("hit", "hit"), "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"), "keep": ("kept", "kept"), "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"), "lay": ("laid", "laid"), "lead": ("led", "led"),
    "leap": ("leapt", "leapt"), "learn": ("learnt", "learnt"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"), "lie": ("lay", "lain"),
    "light": ("lit", "lit"), "lose": ("lost", "lost"), "make": ("made", "made"),
    "mean": ("meant", "meant"), "meet": ("met", "met"), "mislead": ("misled", "misled"),
    "mistake": ("mistook", "mistaken"), "outgrow": ("outgrew", "outgrown"),
    "outrun": ("outran", "outrun"), "overcome": ("overcame", "overcome"),
    "overtake": ("overtook", "overtaken"), "overthrow": ("overthrew", "overthrown"),
    "partake": ("partook", "partaken"), "pay": ("paid", "paid"), "put": ("put", "put"),
    "quit": ("quit", "quit"), "read": ("read", "read"), "rebuild": ("rebuilt", "rebuilt"),
    "repay": ("repaid", "repaid"), "rid": ("rid", "rid"), "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"), "rise": ("rose", "risen"), "run": ("ran", "run"),
    "say": ("said", "said"), "see": ("saw", "seen"), "seek": ("sought", "sought"),
    "sell": ("sold", "sold"), "send": ("sent", "sent"), "set": ("set", "set"),
    "sew": ("sewed", "sewn"), "shake": ("shook", "shaken"), "shed": ("shed", "shed"),
    "shine": ("shone", "shone"), "shoot": ("shot", "shot"), "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"), "shut": ("shut", "shut"), "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"), "sit": ("sat", "sat"), "slay": ("slew", "slain"),
    "sleep": ("slept", "slept"), "slide": ("slid", "slid"), "sling": ("slung", "slung"),
    "speak": ("spoke", "spoken"), "speed": ("sped", "sped"), "spend": ("spent", "spent"),
    "spin": ("spun", "spun"), "spit": ("spat", "spat"), "split": ("split", "split"),
    "spread": ("spread", "spread"), "spring": ("sprang", "sprung"), "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"), "stick": ("stuck", "stuck"), "sting": ("stung", "stung"),
    "stink": ("stank", "stunk"), "stride": ("strode", "stridden"), "strike": ("struck", "struck"),
    "strive": ("strove", "striven"), "swear": ("swore", "sworn"), "sweep": ("swept", "swept"),
    "swell": ("swelled", "swollen"), "swim": ("swam", "swum"), "swing": ("swung", "swung"),
    "take": ("took", "taken"), "teach": ("taught", "taught"), "tear": ("tore", "torn"),
    "tell": ("told", "told"), "think": ("thought", "thought"), "throw": ("threw", "thrown"),
    "thrust": ("thrust", "thrust"), "tread": ("trod", "trodden"),
    "undergo": ("underwent", "undergone"), "understand": ("understood", "understood"),
    "undertake": ("undertook", "undertaken"), "undo": ("undid", "undone"),
    "uphold": ("upheld", "upheld"), "upset": ("upset", "upset"), "wake": ("woke", "woken"),
    "wear": ("wore", "worn"), "weave": ("wove", "woven"), "weep": ("wept", "wept"),
    "win": ("won", "won"), "wind": ("wound", "wound"), "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"), "withstand": ("withstood", "withstood"),
    "wring": ("wrung", "wrung"), "write": ("wrote", "written"),
}

# base -> irregular -s form (3rd person or plural)
IRREGULAR_S_FORMS: dict[str, str] = {
    "be": "is", "have": "has",
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "ox": "oxen", "life": "lives", "knife": "knives", "wife": "wives",
    "leaf": "leaves", "loaf": "loaves", "thief": "thieves", "shelf": "shelves",
    "wolf": "wolves", "half": "halves", "calf": "calves", "self": "selves",
    "crisis": "crises", "basis": "bases", "analysis": "analyses",
}

# Closed-class words never inflected.
PASSTHROUGH: frozenset[str] = frozenset("""
    the a an of to in and or but nor if at on for with from as by not no so
    than then that this these those there here when where why how what who
    whom whose which while because although though since until unless upon
    into onto over under above below between among through during without
    within against about after before behind beyond besides despite toward
    towards off out up down again once very too also just only quite rather
    almost always never often sometimes soon now i me him her us them my
    your his its our their mine yours hers ours theirs myself yourself
    himself herself itself ourselves yourselves themselves he she it we
    they you am is are was were shall will would should could may might
    must ought yes any some all both each either neither much many more
    most such same own
""".split())


def _ends_with_cvc(word: str) -> bool:
    """Consonant-vowel-consonant ending, the final-consonant doubling shape."""
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return a not in VOWELS and b in VOWELS and c not in VOWELS and c not in "wxy"


def _double_final(word: str) -> bool:
    # Doubling is stress-dependent; short words are a safe approximation.
    return len(word) <= 4 and _ends_with_cvc(word)


def s_form(word: str) -> str:
    if word in IRREGULAR_S_FORMS:
        return IRREGULAR_S_FORMS[word]
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ies"
    if word.endswith("o") and len(word) > 1 and word[-2] not in VOWELS:
        return word + "es"
    return word + "s"


def ed_form(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ied"
    if _double_final(word):
        return word + word[-1] + "ed"
    return word + "ed"


def ing_form(word: str) -> str:
    if word.endswith("ie"):
        return word[:-2] + "ying"
    if word.endswith("e") and len(word) > 2 and not word.endswith("ee"):
        return word[:-1] + "ing"
    if _double_final(word):
        return word + word[-1] + "ing"
    return word + "ing"


def can_inflect(word: str) -> bool:
    """Single lowercase alphabetic words outside the closed class."""
    return word.isalpha() and word == word.lower() and word not in PASSTHROUGH and len(word) >= 2


@lru_cache(maxsize=65536)
def forms(word: str) -> tuple[str, ...]:
    """Distinct inflected forms of a lemma, base first; duplicates collapse.

    A word the inflector cannot handle yields just itself.
    """
    if not can_inflect(word):
        return (word,)
    if word in IRREGULAR_VERBS:
        past, pp = IRREGULAR_VERBS[word]
    else:
        past = pp = ed_form(word)
    out = [word, s_form(word), past, pp, ing_form(word)]
    seen: dict[str, None] = {}
    for f in out:
        seen.setdefault(f)
    return tuple(seen)


def marker_of(base: str, form: str) -> str:
    """Inflection marker for a form: the tail after the longest common prefix.

    Matches how transcribers abbreviate (be/being -> "ing", take/taken -> "n",
    oblige/obliged -> "d").
    """
    n = min(len(base), len(form))
    i = 0
    while i < n and base[i] == form[i]:
        i += 1
    return form[i:]


def matching_forms(base: str, marker: str) -> tuple[str, ...]:
    """Forms of `base` consistent with a transcription marker.

    Tries the exact marker relation first, then a suffix match; an empty
    result means the marker cannot be reconciled with the inflector's forms.
    """
    candidates = [f for f in forms(base) if f != base]
    exact = tuple(f for f in candidates if marker_of(base, f) == marker)
    if exact:
        return exact
    return tuple(f for f in candidates if f.endswith(marker))


class Delemmatizer:
    """Inverse inflector over a fixed vocabulary: surface form -> (base, marker)."""

    def __init__(self, vocabulary):
        self._inverse: dict[str, tuple[str, str]] = {}
        for base in sorted(set(vocabulary)):
            for form in forms(base):
                if form == base:
                    continue
                # First (alphabetically smallest) base wins; deterministic.
                self._inverse.setdefault(form, (base, marker_of(base, form)))

    def lookup(self, surface: str) -> tuple[str, str] | None:
        return self._inverse.get(surface)

    def __len__(self) -> int:
        return len(self._inverse)
