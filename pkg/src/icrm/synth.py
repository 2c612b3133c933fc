"""Synthetic timestamped corpora for desk-scale experiments and tests.

Messages are bags of coded vocabulary words ("hamwNNN", "spamwNNN" plus an
optional shared pool "bothwNNN"). The words survive the preprocessing
pipeline unchanged: length >= 3, not stopwords, and each maps to itself
under stemming, so per-class vocabularies stay disjoint at the feature
level when no shared pool is requested.
"""

from __future__ import annotations

from datetime import date, timedelta

import numpy as np

from .corpus import HAM, SPAM, Dataset, Message
from .porter import stem


def _vocab(prefix: str, size: int) -> list[str]:
    words = [f"{prefix}{i:03d}" for i in range(size)]
    stems = {stem(w) for w in words}
    if len(stems) != len(words):
        raise AssertionError(f"vocabulary {prefix}* does not stem injectively")
    return words


def synthetic_dataset(
    n_ham: int = 300,
    n_spam: int = 300,
    vocab_per_class: int = 200,
    shared_vocab: int = 0,
    words_per_message: tuple[int, int] = (20, 40),
    seed: int = 0,
    name: str = "synthetic",
    start: date = date(2000, 1, 1),
) -> Dataset:
    """Generate a two-class corpus with controllable vocabulary overlap.

    ``shared_vocab`` words are drawn by both classes, diluting the class
    signal; with 0 the vocabularies are fully disjoint. Timestamps advance
    one day per message within each class, so per-class order is the
    generation order.
    """
    rng = np.random.default_rng(seed)
    shared = _vocab("bothw", shared_vocab)
    pools = {
        HAM: _vocab("hamw", vocab_per_class) + shared,
        SPAM: _vocab("spamw", vocab_per_class) + shared,
    }
    lo, hi = words_per_message
    dataset = Dataset(name=name)
    for label, count in ((HAM, n_ham), (SPAM, n_spam)):
        pool = pools[label]
        for i in range(count):
            k = int(rng.integers(lo, hi + 1))
            words = [pool[int(j)] for j in rng.integers(0, len(pool), size=k)]
            dataset.by_label(label).append(
                Message(
                    id=f"{label}-{i:05d}",
                    timestamp=start + timedelta(days=i),
                    label=label,
                    subject=" ".join(words[:3]),
                    body=" ".join(words[3:]),
                )
            )
    return dataset
