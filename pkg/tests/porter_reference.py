"""Independent Porter stemmer used as a cross-check oracle.

Deliberately written with a different structure from icrm.porter (regex
suffix tables driven by a consonant/vowel classification string) so the
two implementations only agree if both transcribe the classic rule set
correctly. Test-only; never imported by the package.
"""

import re

_VOWELS = "aeiou"


def cv_pattern(word: str) -> str:
    """Classify each letter as 'c' or 'v'."""
    kinds = []
    for i, ch in enumerate(word):
        if ch in _VOWELS:
            kinds.append("v")
        elif ch == "y":
            kinds.append("c" if i == 0 or kinds[i - 1] == "v" else "v")
        else:
            kinds.append("c")
    return "".join(kinds)


def measure(stem: str) -> int:
    return len(re.findall("vc", cv_pattern(stem)))


def has_vowel(stem: str) -> bool:
    return "v" in cv_pattern(stem)


def ends_double_c(word: str) -> bool:
    return len(word) >= 2 and word[-1] == word[-2] and cv_pattern(word)[-1] == "c"


def ends_cvc(word: str) -> bool:
    return (
        len(word) >= 3
        and cv_pattern(word).endswith("cvc")
        and word[-1] not in "wxy"
    )


def _longest_suffix_rule(word, table):
    """Pick the rule with the longest suffix matching the word, if any."""
    match = None
    for suffix, repl, cond in table:
        if word.endswith(suffix) and (match is None or len(suffix) > len(match[0])):
            match = (suffix, repl, cond)
    return match


def _run_table(word, table):
    match = _longest_suffix_rule(word, table)
    if match is None:
        return word
    suffix, repl, cond = match
    stem = word[: -len(suffix)] if suffix else word
    if cond is None or cond(stem):
        return stem + repl
    return word


def reference_stem(word: str) -> str:
    if len(word) <= 2:
        return word
    w = word

    # step 1a
    w = _run_table(w, [
        ("sses", "ss", None), ("ies", "i", None), ("ss", "ss", None), ("s", "", None),
    ])

    # step 1b
    if w.endswith("eed"):
        if measure(w[:-3]) > 0:
            w = w[:-1]  # eed -> ee
    else:
        removed = False
        if w.endswith("ed") and has_vowel(w[:-2]):
            w = w[:-2]
            removed = True
        elif w.endswith("ing") and has_vowel(w[:-3]):
            w = w[:-3]
            removed = True
        if removed:
            if re.search("(at|bl|iz)$", w):
                w += "e"
            elif ends_double_c(w) and not re.search("[lsz]$", w):
                w = w[:-1]
            elif measure(w) == 1 and ends_cvc(w):
                w += "e"

    # step 1c
    if w.endswith("y") and has_vowel(w[:-1]):
        w = w[:-1] + "i"

    m_pos = lambda stem: measure(stem) > 0
    m_gt1 = lambda stem: measure(stem) > 1

    # step 2
    w = _run_table(w, [(s, r, m_pos) for s, r in [
        ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
        ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
        ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
        ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
        ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ]])

    # step 3
    w = _run_table(w, [(s, r, m_pos) for s, r in [
        ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
        ("ical", "ic"), ("ful", ""), ("ness", ""),
    ]])

    # step 4
    ion_cond = lambda stem: measure(stem) > 1 and re.search("[st]$", stem)
    w = _run_table(w, [
        (s, "", ion_cond if s == "ion" else m_gt1) for s in [
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
            "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
        ]
    ])

    # step 5a
    if w.endswith("e"):
        stem = w[:-1]
        m = measure(stem)
        if m > 1 or (m == 1 and not ends_cvc(stem)):
            w = stem

    # step 5b
    if measure(w) > 1 and ends_double_c(w) and w.endswith("l"):
        w = w[:-1]

    return w
