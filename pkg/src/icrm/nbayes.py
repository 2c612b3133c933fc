"""Multinomial Naive Bayes with Boolean attributes over the same features.

The baseline shares the exact preprocessing pipeline (first/last unique
stems, same cap) so comparisons isolate the classification rule. Each
feature counts at most once per training document; estimates are add-one
smoothed over the training vocabulary and the posterior is evaluated in
log space with two-class normalization. A message is spam when
P(spam | features) > 0.5, strictly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .corpus import HAM, SPAM, LABELS, Message
from .textprep import preprocess


class ModelError(Exception):
    """Raised when classifying with an untrained or unreadable model."""


@dataclass
class NbModel:
    doc_count: dict[str, int] = field(default_factory=lambda: {HAM: 0, SPAM: 0})
    feature_doc_count: dict[str, dict[str, int]] = field(
        default_factory=lambda: {HAM: {}, SPAM: {}}
    )
    vocabulary: set[str] = field(default_factory=set)


def nb_train(
    messages: Iterable[Message],
    n: int = 50,
    stopwords: frozenset[str] | None = None,
) -> NbModel:
    """Accumulate Boolean per-document feature counts from labeled messages."""
    model = NbModel()
    for msg in messages:
        sample = preprocess(msg, n, stopwords)
        model.doc_count[msg.label] += 1
        counts = model.feature_doc_count[msg.label]
        for feature in sample:  # sample is already distinct per message
            counts[feature] = counts.get(feature, 0) + 1
            model.vocabulary.add(feature)
    return model


def nb_posterior(model: NbModel, sample: Iterable[str]) -> float:
    """P(spam | sample) with add-one smoothing, computed in log space.

    Features outside the training vocabulary still contribute their
    smoothed probability. An empty sample reduces to the class priors.
    """
    if any(model.doc_count[label] <= 0 for label in LABELS):
        raise ModelError("model must contain training documents for both classes")
    total_docs = sum(model.doc_count.values())
    vocab_size = len(model.vocabulary)
    log_like = {}
    for label in LABELS:
        counts = model.feature_doc_count[label]
        denom = vocab_size + sum(counts.values())
        ll = math.log(model.doc_count[label] / total_docs)
        for feature in sample:
            if denom == 0:
                continue  # degenerate: no features ever seen in training
            ll += math.log((1 + counts.get(feature, 0)) / denom)
        log_like[label] = ll
    # P(spam|x) = exp(ls) / (exp(ls) + exp(lh)), computed stably.
    diff = log_like[HAM] - log_like[SPAM]
    if diff > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(diff))


def nb_classify(
    model: NbModel,
    msg: Message,
    n: int = 50,
    stopwords: frozenset[str] | None = None,
) -> str:
    """Spam iff the posterior strictly exceeds 0.5 (ties go to ham)."""
    sample = preprocess(msg, n, stopwords)
    return SPAM if nb_posterior(model, sample) > 0.5 else HAM


class NaiveBayesClassifier:
    """Train-once wrapper; classification never mutates the model."""

    def __init__(self, n: int = 50, stopwords: frozenset[str] | None = None):
        self.n = n
        self.stopwords = stopwords
        self.model: NbModel | None = None

    def train(self, messages: Iterable[Message]) -> None:
        self.model = nb_train(messages, self.n, self.stopwords)

    def classify(self, msg: Message) -> str:
        if self.model is None:
            raise ModelError("classifier has not been trained")
        return nb_classify(self.model, msg, self.n, self.stopwords)

    # -- persistence (same versioned convention as the ICRM snapshot) ---

    _FORMAT = "icrm-nbmodel"
    _VERSION = 1

    def save(self, path) -> None:
        if self.model is None:
            raise ModelError("nothing to save: classifier has not been trained")
        state = {
            "format": self._FORMAT,
            "version": self._VERSION,
            "n": self.n,
            "doc_count": self.model.doc_count,
            "feature_doc_count": self.model.feature_doc_count,
            "vocabulary": sorted(self.model.vocabulary),
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(state, fh, sort_keys=True)

    @classmethod
    def load(cls, path, stopwords: frozenset[str] | None = None) -> "NaiveBayesClassifier":
        try:
            with open(path, encoding="utf-8") as fh:
                state = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ModelError(f"cannot read model file {path}: {exc}") from None
        if not isinstance(state, dict) or state.get("format") != cls._FORMAT:
            raise ModelError(f"{path} is not a Naive Bayes model file")
        if state.get("version") != cls._VERSION:
            raise ModelError(f"unsupported model version {state.get('version')!r}")
        clf = cls(n=state["n"], stopwords=stopwords)
        clf.model = NbModel(
            doc_count={k: int(v) for k, v in state["doc_count"].items()},
            feature_doc_count={
                label: {f: int(c) for f, c in counts.items()}
                for label, counts in state["feature_doc_count"].items()
            },
            vocabulary=set(state["vocabulary"]),
        )
        return clf
