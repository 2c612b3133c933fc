"""Immune cross-regulation spam classification library.

An online text classifier driven by competing per-feature effector and
regulator cell populations, alongside a Naive Bayes baseline and the
static / sliding-window evaluation harnesses used to compare them.
"""

from .corpus import (
    Dataset,
    HAM,
    IngestResult,
    Message,
    SPAM,
    Split,
    ingest_enron_dir,
    make_split,
    merge_by_ratio,
    read_canonical,
    write_canonical,
)
from .evaluation import (
    ConfusionCounts,
    DriftSummary,
    EvalReport,
    IcrmFactory,
    NbFactory,
    RunMetrics,
    eval_dynamic,
    eval_static,
    linear_fit,
    metrics_from_counts,
    paired_t_test,
)
from .model import IcrmClassifier, IcrmConfig, Verdict, score_feature
from .nbayes import NaiveBayesClassifier, NbModel, nb_classify, nb_posterior, nb_train
from .porter import stem
from .synth import synthetic_dataset
from .textprep import preprocess, tokenize

__version__ = "0.1.0"

__all__ = [
    "ConfusionCounts",
    "Dataset",
    "DriftSummary",
    "EvalReport",
    "HAM",
    "IcrmClassifier",
    "IcrmConfig",
    "IcrmFactory",
    "IngestResult",
    "Message",
    "NaiveBayesClassifier",
    "NbFactory",
    "NbModel",
    "RunMetrics",
    "SPAM",
    "Split",
    "Verdict",
    "eval_dynamic",
    "eval_static",
    "ingest_enron_dir",
    "linear_fit",
    "make_split",
    "merge_by_ratio",
    "metrics_from_counts",
    "nb_classify",
    "nb_posterior",
    "nb_train",
    "paired_t_test",
    "preprocess",
    "read_canonical",
    "score_feature",
    "stem",
    "synthetic_dataset",
    "tokenize",
    "write_canonical",
]
