"""Cross-regulation classifier core.

Every feature (stemmed word) owns two virtual cell populations: effectors
(E), whose dominance marks the feature as spam-like, and regulators (R),
whose dominance marks it as ham-like. Each message presents its sampled
features on an array of binding slots (``n_a`` slots per feature, shuffled
uniformly); adjacent slot pairs then interact:

* a pair of bound effectors proliferates (both sides, also a lone
  effector next to an empty slot),
* an effector co-bound with a regulator makes only the regulator
  proliferate,
* regulators alone persist unchanged.

Populations only grow unless a per-message death rate is configured, in
which case every known feature decays multiplicatively after each
message. A message's verdict is the sum of per-feature scores
``(R - E) / sqrt(R^2 + E^2)`` over its sample, read after the message's
own interaction pass; a non-positive sum means spam.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .corpus import HAM, SPAM, Message
from .textprep import preprocess

# Slot binding codes.
BIND_E = 0
BIND_R = 1
BIND_EMPTY = 2

# Processing modes.
TRAIN_HAM = "train_ham"
TRAIN_SPAM = "train_spam"
TEST = "test"

# Populations this close to zero (after decay) are clamped out entirely.
_ZERO_CLAMP = 1e-12

# Fixed additive amount a proliferating cell gains per slot-pair event.
# Calibrated so that binding noise on a fresh feature (population ~11 cells
# over 10 slots) cannot flip the initial E/R ordering before reinforcement
# locks it in; large increments destroy the per-feature separation.
DEFAULT_PROLIFERATION = 0.02


class SnapshotError(Exception):
    """Raised for unreadable, foreign, or wrong-version state files."""


@dataclass
class IcrmConfig:
    """Model parameters; defaults follow the reference configuration."""

    n: int = 50                 # max distinct features sampled per message
    n_a: int = 10               # binding slots per sampled feature
    e0_ham: float = 6.0         # initial populations for first-seen features,
    r0_ham: float = 12.0        # by stage: ham training biases regulators,
    e0_spam: float = 6.0        # spam training and testing bias effectors
    r0_spam: float = 5.0
    e0_test: float = 6.0
    r0_test: float = 5.0
    proliferation: float = DEFAULT_PROLIFERATION
    death_rate: float = 0.0     # per-message decay; 0 disables forgetting
    seed: int = 42

    def validate(self) -> None:
        if self.n < 2 or self.n % 2:
            raise ValueError(f"n must be even and >= 2, got {self.n}")
        if self.n_a < 1:
            raise ValueError(f"n_a must be >= 1, got {self.n_a}")
        if not self.e0_ham < self.r0_ham:
            raise ValueError("ham initialisation requires E0 < R0")
        if not self.e0_spam > self.r0_spam:
            raise ValueError("spam initialisation requires E0 > R0")
        if not self.e0_test > self.r0_test:
            raise ValueError("test initialisation requires E0 > R0")
        if self.proliferation <= 0:
            raise ValueError("proliferation must be positive")
        if not 0.0 <= self.death_rate < 1.0:
            raise ValueError("death_rate must be in [0, 1)")

    def initial_populations(self, mode: str) -> tuple[float, float]:
        if mode == TRAIN_HAM:
            return (self.e0_ham, self.r0_ham)
        if mode == TRAIN_SPAM:
            return (self.e0_spam, self.r0_spam)
        if mode == TEST:
            return (self.e0_test, self.r0_test)
        raise ValueError(f"unknown mode {mode!r}")


# The repertoire is the classifier's entire mutable state: feature -> (E, R).
Repertoire = dict[str, tuple[float, float]]


@dataclass
class SlotArray:
    """Per-message antigen presentation: parallel feature/binding lists."""

    features: list[str]
    bound: list[int]

    def __len__(self) -> int:
        return len(self.features)


@dataclass
class Verdict:
    score: float
    per_feature: list[tuple[str, float]]
    label: str


def score_feature(e: float, r: float) -> float:
    """Normalized population imbalance in [-1, 1]; <= 0 reads as spam-like."""
    if e == 0.0 and r == 0.0:
        return 0.0
    # hypot keeps the quotient stable for subnormal and huge populations
    return (r - e) / math.hypot(r, e)


def init_features(
    rep: Repertoire, sample: Iterable[str], mode: str, cfg: IcrmConfig
) -> Repertoire:
    """Insert first-seen features at the stage's initial populations.

    Features already in the repertoire keep their populations: memory
    persists across messages and stages.
    """
    initial = cfg.initial_populations(mode)
    for feature in sample:
        if feature not in rep:
            rep[feature] = initial
    return rep


def build_slot_array(
    sample: list[str], rep: Repertoire, cfg: IcrmConfig, rng: np.random.Generator
) -> SlotArray:
    """Lay out n_a slots per sampled feature and bind cells to them.

    Slot positions are a uniform permutation of the feature multiset; each
    slot for feature f binds an effector with probability E_f/(E_f+R_f),
    a regulator otherwise, and stays empty when both populations are zero.
    """
    total = len(sample) * cfg.n_a
    if total == 0:
        return SlotArray([], [])
    order = rng.permutation(total)
    draws = rng.random(total)
    features = [None] * total
    bound = [BIND_EMPTY] * total
    for pos in range(total):
        feature = sample[int(order[pos]) // cfg.n_a]
        features[pos] = feature
        e, r = rep[feature]
        mass = e + r
        if mass > 0.0:
            bound[pos] = BIND_E if draws[pos] < e / mass else BIND_R
    return SlotArray(features, bound)


def interact(rep: Repertoire, slots: SlotArray, cfg: IcrmConfig) -> Repertoire:
    """Run one interaction pass and apply decay.

    Slots are paired consecutively, a trailing slot is handled alone, and
    all deltas are computed against pre-interaction populations before
    being applied, so pair processing order is irrelevant. With a nonzero
    death rate every repertoire feature then decays by (1 - rate).
    """
    p = cfg.proliferation
    delta_e: dict[str, float] = {}
    delta_r: dict[str, float] = {}
    n = len(slots)
    for i in range(0, n, 2):
        group = [(slots.features[i], slots.bound[i])]
        if i + 1 < n:
            group.append((slots.features[i + 1], slots.bound[i + 1]))
        effectors = [f for f, b in group if b == BIND_E]
        regulators = [f for f, b in group if b == BIND_R]
        if effectors and not regulators:
            for f in effectors:
                delta_e[f] = delta_e.get(f, 0.0) + p
        elif effectors and regulators:
            for f in regulators:
                delta_r[f] = delta_r.get(f, 0.0) + p
        # regulators alone (or empty pairs): no change
    for f, d in delta_e.items():
        e, r = rep[f]
        rep[f] = (e + d, r)
    for f, d in delta_r.items():
        e, r = rep[f]
        rep[f] = (e, r + d)
    rate = cfg.death_rate
    if rate > 0.0:
        keep = 1.0 - rate
        for f, (e, r) in rep.items():
            e *= keep
            r *= keep
            if e < _ZERO_CLAMP and r < _ZERO_CLAMP:
                e = r = 0.0
            rep[f] = (e, r)
    return rep


def process_message(
    rep: Repertoire,
    msg: Message,
    mode: str,
    cfg: IcrmConfig,
    rng: np.random.Generator,
    stopwords: frozenset[str] | None = None,
    sampler: str = "first-last",
) -> Verdict:
    """Run the full per-message cycle and return the verdict.

    The same cycle runs in every stage (only first-seen initial values
    differ): preprocess, initialise new features, bind, interact, then
    score the sampled features from post-interaction populations. An
    empty sample scores 0 and is therefore spam.
    """
    if mode == TRAIN_HAM and msg.label != HAM:
        raise ValueError(f"training mode {mode} on a {msg.label} message")
    if mode == TRAIN_SPAM and msg.label != SPAM:
        raise ValueError(f"training mode {mode} on a {msg.label} message")
    sample = preprocess(
        msg, cfg.n, stopwords, sampler=sampler,
        rng=rng if sampler == "random" else None,
    )
    init_features(rep, sample, mode, cfg)
    slots = build_slot_array(sample, rep, cfg, rng)
    interact(rep, slots, cfg)
    per_feature = [(f, score_feature(*rep[f])) for f in sample]
    score = math.fsum(s for _, s in per_feature)
    return Verdict(
        score=score,
        per_feature=per_feature,
        label=SPAM if score <= 0.0 else HAM,
    )


_TRAIN_MODE = {HAM: TRAIN_HAM, SPAM: TRAIN_SPAM}


class IcrmClassifier:
    """Stateful online classifier: a repertoire plus its random stream.

    Instances are single-writer; snapshots are only meaningful between
    messages. Classification continues to update populations, which is
    how the model adapts to drifting content.
    """

    def __init__(
        self,
        config: IcrmConfig | None = None,
        stopwords: frozenset[str] | None = None,
        sampler: str = "first-last",
    ):
        self.config = config or IcrmConfig()
        self.config.validate()
        self.stopwords = stopwords
        self.sampler = sampler
        self.repertoire: Repertoire = {}
        self.rng = np.random.default_rng(self.config.seed)

    def train_message(self, msg: Message) -> Verdict:
        return process_message(
            self.repertoire, msg, _TRAIN_MODE[msg.label], self.config,
            self.rng, self.stopwords, self.sampler,
        )

    def train(self, messages: Iterable[Message]) -> None:
        for msg in messages:
            self.train_message(msg)

    def verdict(self, msg: Message) -> Verdict:
        return process_message(
            self.repertoire, msg, TEST, self.config, self.rng,
            self.stopwords, self.sampler,
        )

    def classify(self, msg: Message) -> str:
        return self.verdict(msg).label

    # -- persistence ---------------------------------------------------

    _FORMAT = "icrm-state"
    _VERSION = 1

    def save(self, path) -> None:
        """Write a lossless, versioned JSON snapshot of the full state."""
        state = {
            "format": self._FORMAT,
            "version": self._VERSION,
            "config": asdict(self.config),
            "sampler": self.sampler,
            "rng_state": self.rng.bit_generator.state,
            "repertoire": {f: [e, r] for f, (e, r) in self.repertoire.items()},
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(state, fh, sort_keys=True)

    @classmethod
    def load(cls, path, stopwords: frozenset[str] | None = None) -> "IcrmClassifier":
        try:
            with open(path, encoding="utf-8") as fh:
                state = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SnapshotError(f"cannot read state file {path}: {exc}") from None
        if not isinstance(state, dict) or state.get("format") != cls._FORMAT:
            raise SnapshotError(f"{path} is not a classifier state file")
        if state.get("version") != cls._VERSION:
            raise SnapshotError(
                f"unsupported state version {state.get('version')!r}"
            )
        clf = cls(
            IcrmConfig(**state["config"]),
            stopwords=stopwords,
            sampler=state.get("sampler", "first-last"),
        )
        clf.repertoire = {
            f: (float(e), float(r)) for f, (e, r) in state["repertoire"].items()
        }
        clf.rng.bit_generator.state = state["rng_state"]
        return clf
