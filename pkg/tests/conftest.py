"""Shared fixtures, stub classifiers, and acceptance-line reporting."""

from dataclasses import dataclass
from datetime import date, timedelta

import numpy as np
import pytest

from icrm.corpus import HAM, Message
from icrm.synth import synthetic_dataset

# One line per acceptance criterion, filled by the test_acceptance decorator
# and echoed after the run regardless of output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_message(label=HAM, subject="", body="", mid=None, day=1):
    return Message(
        id=mid or f"{label}-{day:05d}",
        timestamp=date(2000, 1, 1) + timedelta(days=day - 1),
        label=label,
        subject=subject,
        body=body,
    )


@pytest.fixture(scope="session")
def disjoint_corpus():
    """Fully separable two-class corpus at criterion scale."""
    return synthetic_dataset(n_ham=300, n_spam=300, vocab_per_class=200, seed=11)


@pytest.fixture(scope="session")
def protocol_corpus():
    """Disjoint-vocabulary corpus large enough for the full protocols."""
    return synthetic_dataset(n_ham=1500, n_spam=1500, vocab_per_class=200, seed=5)


@pytest.fixture(scope="session")
def overlap_corpus():
    """Corpus with a shared vocabulary pool (classifiers stay off ceiling)."""
    return synthetic_dataset(
        n_ham=1500, n_spam=1500, vocab_per_class=200, shared_vocab=120, seed=7
    )


# -- stub classifiers for harness tests ------------------------------------


class _LabelEcho:
    def train(self, msgs):
        pass

    def classify(self, msg):
        return msg.label


@dataclass
class PerfectFactory:
    name = "stub-perfect"

    def __call__(self, run_seed):
        return _LabelEcho()


class _CoinFlip:
    def __init__(self, seed):
        self.rng = np.random.default_rng(seed)

    def train(self, msgs):
        pass

    def classify(self, msg):
        return "spam" if self.rng.random() < 0.5 else "ham"


@dataclass
class CoinFlipFactory:
    name = "stub-coin"

    def __call__(self, run_seed):
        return _CoinFlip(run_seed)


class _AllHam:
    def train(self, msgs):
        pass

    def classify(self, msg):
        return "ham"


@dataclass
class AllHamFactory:
    name = "stub-allham"

    def __call__(self, run_seed):
        return _AllHam()


class _QuotaDegrading:
    """Misclassifies at rate base + slope * stream_index, deterministically.

    Errors are planted by quota accumulation rather than random draws so
    recovered drift slopes are essentially noise-free.
    """

    def __init__(self, base, slope):
        self.base = base
        self.slope = slope
        self.index = 0
        self.quota = 0.0
        self.errors = 0

    def train(self, msgs):
        pass

    def classify(self, msg):
        rate = self.base + self.slope * self.index
        self.index += 1
        self.quota += rate
        wrong = self.quota >= self.errors + 1
        if wrong:
            self.errors += 1
            return "spam" if msg.label == "ham" else "ham"
        return msg.label


@dataclass
class QuotaDegradingFactory:
    base: float = 0.05
    slope: float = 0.0005

    name = "stub-degrading"

    def __call__(self, run_seed):
        return _QuotaDegrading(self.base, self.slope)
