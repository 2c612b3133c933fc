#!/usr/bin/env python3
"""Train the cross-regulation classifier on a synthetic corpus and inspect it.

Walks the whole pipeline once: generate a timestamped two-class corpus,
build a chronological train/test split, train online, classify the test
stream, and peek at the per-feature populations that drive the verdicts.
"""

from icrm import IcrmClassifier, IcrmConfig, make_split, synthetic_dataset
from icrm.evaluation import counts_from_records, metrics_from_counts

dataset = synthetic_dataset(n_ham=300, n_spam=300, vocab_per_class=200, seed=11)
split = make_split(dataset, train_per_class=100, test_size=200, spam_ratio=0.5)

clf = IcrmClassifier(IcrmConfig(seed=42))
clf.train(split.train)

records = [(msg.label, clf.classify(msg)) for msg in split.test]
metrics = metrics_from_counts(counts_from_records(records))
print(f"accuracy  {metrics.accuracy:.3f}")
print(f"f-score   {metrics.f_score:.3f}")

# Every feature owns an effector/regulator population pair; regulator
# dominance marks ham-like features, effector dominance spam-like ones.
print("\nsample of the repertoire after the run:")
for feature in list(clf.repertoire)[:3] + list(clf.repertoire)[-3:]:
    e, r = clf.repertoire[feature]
    kind = "ham-like " if r > e else "spam-like"
    print(f"  {feature:<12} E={e:7.2f}  R={r:7.2f}  -> {kind}")

# One unseen message end to end, with per-feature scores.
probe = dataset.spam[250]
verdict = clf.verdict(probe)
print(f"\nprobe message {probe.id}: {verdict.label} (score {verdict.score:+.3f})")
for feature, score in verdict.per_feature[:5]:
    print(f"  {feature:<12} {score:+.3f}")
