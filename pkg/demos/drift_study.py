#!/usr/bin/env python3
"""Sliding-window evaluation: error proportions over an ordered stream.

Trains once on the first 100 messages per class, classifies the remaining
2800-message stream exactly once in timestamp order (the cross-regulation
classifier keeps adapting online, Naive Bayes stays frozen), then fits
least-squares drift lines to the windowed false-positive and
false-negative proportions. Slopes near zero mean no concept drift.
"""

from icrm import synthetic_dataset
from icrm.evaluation import IcrmFactory, NbFactory, eval_dynamic

dataset = synthetic_dataset(
    n_ham=1500, n_spam=1500, vocab_per_class=200, shared_vocab=40, seed=7
)

for factory in (IcrmFactory(), NbFactory()):
    report = eval_dynamic(dataset, factory, train_per_class=100, window=200, shift=10)
    print(f"{report.classifier}: {len(report.metrics)} windows")
    print(f"  F-score  {report.mean('f_score'):.3f} +/- {report.sd('f_score'):.3f}")
    print(f"  accuracy {report.mean('accuracy'):.3f} +/- {report.sd('accuracy'):.3f}")
    print(
        f"  %FP mean {report.mean('pct_fp'):.3f}  "
        f"slope {report.drift_fp.slope:+.6f} per window (R2 {report.drift_fp.r_squared:.2f})"
    )
    print(
        f"  %FN mean {report.mean('pct_fn'):.3f}  "
        f"slope {report.drift_fn.slope:+.6f} per window (R2 {report.drift_fn.r_squared:.2f})"
    )

print(
    "\nEmit the same numbers as CSV for plotting with:"
    "\n  icrm eval dynamic both --data <corpus.jsonl> --out reports/"
)
