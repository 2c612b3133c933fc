"""Porter suffix-stripping stemmer (classic 1980 rule set, steps 1a-5b).

Words are analysed as [C](VC)^m[V] where C/V are maximal consonant/vowel
runs; m is the "measure" that gates most rules.  Within each step only the
rule with the longest matching suffix is considered; if its condition
fails, the step performs no change.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        # y is a vowel when preceded by a consonant ("syzygy"),
        # a consonant otherwise ("toy", leading "y").
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Count VC sequences: one per vowel-run followed by a consonant-run."""
    m = 0
    prev_cons = True
    for i in range(len(stem)):
        cons = _is_consonant(stem, i)
        if cons and not prev_cons:
            m += 1
        prev_cons = cons
    return m


def _contains_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    # Final consonant-vowel-consonant where the last consonant is not w, x, y.
    if len(word) < 3:
        return False
    n = len(word)
    return (
        _is_consonant(word, n - 3)
        and not _is_consonant(word, n - 2)
        and _is_consonant(word, n - 1)
        and word[-1] not in "wxy"
    )


def _apply_rule_list(word: str, rules) -> str:
    """Apply the longest-matching rule of a step, or nothing.

    ``rules`` is a list of (suffix, replacement, condition) with condition
    evaluated on the stem (word minus suffix); ``None`` means no condition.
    Only the longest matching suffix is ever considered.
    """
    best = None
    for suffix, replacement, condition in rules:
        if word.endswith(suffix):
            if best is None or len(suffix) > len(best[0]):
                best = (suffix, replacement, condition)
    if best is None:
        return word
    suffix, replacement, condition = best
    stem = word[: len(word) - len(suffix)]
    if condition is None or condition(stem):
        return stem + replacement
    return word


def _step1a(word: str) -> str:
    return _apply_rule_list(
        word,
        [
            ("sses", "ss", None),
            ("ies", "i", None),
            ("ss", "ss", None),
            ("s", "", None),
        ],
    )


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-3]
        if _measure(stem) > 0:
            return stem + "ee"
        return word
    stripped = None
    if word.endswith("ed") and _contains_vowel(word[:-2]):
        stripped = word[:-2]
    elif word.endswith("ing") and _contains_vowel(word[:-3]):
        stripped = word[:-3]
    if stripped is None:
        return word
    # Cleanup pass after removing -ed/-ing.
    if stripped.endswith(("at", "bl", "iz")):
        return stripped + "e"
    if _ends_double_consonant(stripped) and stripped[-1] not in "lsz":
        return stripped[:-1]
    if _measure(stripped) == 1 and _ends_cvc(stripped):
        return stripped + "e"
    return stripped


def _step1c(word: str) -> str:
    if word.endswith("y") and _contains_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


_STEP2_RULES = [
    ("ational", "ate"),
    ("tional", "tion"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("izer", "ize"),
    ("abli", "able"),
    ("alli", "al"),
    ("entli", "ent"),
    ("eli", "e"),
    ("ousli", "ous"),
    ("ization", "ize"),
    ("ation", "ate"),
    ("ator", "ate"),
    ("alism", "al"),
    ("iveness", "ive"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("biliti", "ble"),
]

_STEP3_RULES = [
    ("icate", "ic"),
    ("ative", ""),
    ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"),
    ("ful", ""),
    ("ness", ""),
]

_STEP4_SUFFIXES = [
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
]


def _step2(word: str) -> str:
    rules = [(s, r, lambda stem: _measure(stem) > 0) for s, r in _STEP2_RULES]
    return _apply_rule_list(word, rules)


def _step3(word: str) -> str:
    rules = [(s, r, lambda stem: _measure(stem) > 0) for s, r in _STEP3_RULES]
    return _apply_rule_list(word, rules)


def _step4(word: str) -> str:
    def plain(stem: str) -> bool:
        return _measure(stem) > 1

    def ion_cond(stem: str) -> bool:
        return _measure(stem) > 1 and stem.endswith(("s", "t"))

    rules = [
        (s, "", ion_cond if s == "ion" else plain) for s in _STEP4_SUFFIXES
    ]
    return _apply_rule_list(word, rules)


def _step5a(word: str) -> str:
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return word


def _step5b(word: str) -> str:
    if (
        _measure(word) > 1
        and _ends_double_consonant(word)
        and word.endswith("l")
    ):
        return word[:-1]
    return word


_cache: dict[str, str] = {}


def stem(word: str) -> str:
    """Stem a lowercase word; words of length <= 2 are returned unchanged."""
    cached = _cache.get(word)
    if cached is not None:
        return cached
    result = word
    if len(word) > 2:
        for step in (
            _step1a, _step1b, _step1c,
            _step2, _step3, _step4,
            _step5a, _step5b,
        ):
            result = step(result)
    if len(_cache) < 1 << 20:
        _cache[word] = result
    return result
