"""Command-line surface: ingest, classify, eval, report.

Settings resolve in three layers: built-in defaults, then a flat
``key = value`` config file (``--config``), then explicit CLI flags.
Exit codes: 0 success, 1 usage/config error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import fields as dataclass_fields
from datetime import date
from pathlib import Path

from .corpus import (
    CorpusError,
    HAM,
    ingest_enron_dir,
    read_canonical,
    write_canonical,
)
from .corpus import Message, split_subject
from .evaluation import (
    EvalError,
    compare_reports,
    eval_dynamic,
    eval_static,
    format_summary_table,
    format_ttest_block,
    make_factory,
    write_runs_csv,
    write_summary_csv,
    write_ttest_csv,
)
from .model import DEFAULT_PROLIFERATION, IcrmClassifier, IcrmConfig, SnapshotError
from .nbayes import ModelError
from .textprep import load_stopwords

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ConfigError(Exception):
    pass


# Defaults follow the reference settings wherever one is stated.
DEFAULTS: dict[str, object] = {
    "seed": 42,
    "n": 50,
    "n_a": 10,
    "e0_ham": 6.0,
    "r0_ham": 12.0,
    "e0_spam": 6.0,
    "r0_spam": 5.0,
    "e0_test": 6.0,
    "r0_test": 5.0,
    "proliferation": DEFAULT_PROLIFERATION,
    "death_rate": 0.0,
    "runs": 10,
    "train_per_class": 100,
    "test_size": 200,
    "spam_ratio": 0.5,
    "shuffle_test": False,
    "balance": None,            # None: balance whenever spam_ratio != 0.5
    "window": 200,
    "shift": 10,
    "jobs": 1,
    "limit": 1500,
    "out": "icrm-out",
    "stopwords": None,
    "feature_sampler": "first-last",
}

_BOOL_STRINGS = {"true": True, "yes": True, "1": True,
                 "false": False, "no": False, "0": False}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _coerce(key: str, raw: str):
    default = DEFAULTS[key]
    if key == "balance" or isinstance(default, bool):
        value = _BOOL_STRINGS.get(raw.strip().lower())
        if value is None:
            raise ConfigError(f"config key {key!r}: expected a boolean, got {raw!r}")
        return value
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, float):
        return float(raw)
    return raw


def _parse_config_file(path) -> dict:
    settings = {}
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"config line {lineno}: expected 'key = value'")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ConfigError(f"config line {lineno}: unknown key {key!r}")
        try:
            settings[key] = _coerce(key, raw.strip())
        except ValueError:
            raise ConfigError(
                f"config line {lineno}: bad value {raw.strip()!r} for {key!r}"
            ) from None
    return settings


def _merge_settings(args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS)
    if getattr(args, "config", None):
        settings.update(_parse_config_file(args.config))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if settings["feature_sampler"] not in ("first-last", "random"):
        raise ConfigError(
            f"feature_sampler must be 'first-last' or 'random', "
            f"got {settings['feature_sampler']!r}"
        )
    return settings


def _icrm_config(settings: dict) -> IcrmConfig:
    kwargs = {f.name: settings[f.name] for f in dataclass_fields(IcrmConfig)}
    cfg = IcrmConfig(**kwargs)
    try:
        cfg.validate()
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def _load_stopwords(settings: dict):
    path = settings.get("stopwords")
    if path is None:
        return None  # modules fall back to the shipped list
    try:
        return load_stopwords(path)
    except OSError as exc:
        raise ConfigError(f"cannot read stopword file: {exc}") from None


# -- commands -------------------------------------------------------------


def cmd_ingest(args) -> int:
    settings = _merge_settings(args)
    result = ingest_enron_dir(args.src_dir, limit_per_class=settings["limit"])
    write_canonical(result.dataset, args.out_file)
    ds = result.dataset
    print(f"ham: {len(ds.ham)}  spam: {len(ds.spam)}  rejected: {result.rejected}")
    print(f"wrote {args.out_file}")
    return EXIT_OK


def cmd_classify(args) -> int:
    settings = _merge_settings(args)
    clf = IcrmClassifier.load(args.state_file, stopwords=_load_stopwords(settings))
    try:
        text = Path(args.message_file).read_text("utf-8", errors="replace")
    except OSError as exc:
        raise CorpusError(f"cannot read message file: {exc}") from None
    subject, body = split_subject(text)
    msg = Message(
        id=Path(args.message_file).name,
        timestamp=date(1970, 1, 1),
        label=HAM,  # placeholder; the test stage never reads the label
        subject=subject,
        body=body,
    )
    verdict = clf.verdict(msg)
    print(f"{verdict.label} {verdict.score:.6f}")
    if args.explain:
        for feature, score in verdict.per_feature:
            print(f"  {feature} {score:+.6f}")
    return EXIT_OK


def cmd_eval(args) -> int:
    settings = _merge_settings(args)
    cfg = _icrm_config(settings)
    stopwords = _load_stopwords(settings)
    dataset = read_canonical(args.data)
    out_dir = Path(settings["out"])
    out_dir.mkdir(parents=True, exist_ok=True)
    kinds = ["icrm", "nb"] if args.model == "both" else [args.model]
    reports = []
    for kind in kinds:
        factory = make_factory(kind, cfg, stopwords, settings["feature_sampler"])
        if args.mode == "static":
            report = eval_static(
                dataset,
                factory,
                runs=settings["runs"],
                train_per_class=settings["train_per_class"],
                test_size=settings["test_size"],
                spam_ratio=settings["spam_ratio"],
                shuffle_test=settings["shuffle_test"],
                seed=settings["seed"],
                balance=settings["balance"],
                jobs=settings["jobs"],
            )
        else:
            report = eval_dynamic(
                dataset,
                factory,
                train_per_class=settings["train_per_class"],
                window=settings["window"],
                shift=settings["shift"],
                seed=settings["seed"],
            )
        write_runs_csv(report, out_dir / f"{args.mode}_{kind}.csv")
        write_summary_csv(report, out_dir / f"{args.mode}_{kind}_summary.csv")
        reports.append(report)
    print(format_summary_table(reports, dataset.name))
    if len(reports) == 2:
        rows = compare_reports(reports[0], reports[1])
        write_ttest_csv(rows, out_dir / f"{args.mode}_ttest.csv")
        print(format_ttest_block(rows, reports[0].classifier, reports[1].classifier))
    return EXIT_OK


def cmd_report(args) -> int:
    out_dir = Path(args.path)
    if not out_dir.is_dir():
        raise CorpusError(f"not a report directory: {out_dir}")
    summaries = sorted(out_dir.glob("*_summary.csv"))
    ttests = sorted(out_dir.glob("*_ttest.csv"))
    if not summaries and not ttests:
        raise CorpusError(f"no report files under {out_dir}")
    for path in summaries:
        print(path.name)
        for line in path.read_text("utf-8").splitlines():
            metric, _, rest = line.partition(",")
            mean, _, rest = rest.partition(",")
            sd, _, rest = rest.partition(",")
            if metric == "metric":
                continue
            slope, _, r2 = rest.partition(",")
            extra = f"  slope {slope} R2 {r2}" if slope else ""
            print(f"  {metric:<12} {mean} +/- {sd}{extra}")
    for path in ttests:
        print(path.name)
        for line in path.read_text("utf-8").splitlines()[1:]:
            metric, t, p = line.split(",")
            print(f"  {metric:<12} t = {float(t):+.3f}  p = {float(p):.3f}")
    return EXIT_OK


# -- argument wiring -------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="randomization seed (default 42)")
    common.add_argument("--config", help="flat key = value settings file")
    common.add_argument("--out", help="output directory for report files")
    common.add_argument("--jobs", type=int, help="parallel evaluation runs")
    common.add_argument("--stopwords", help="override the shipped stopword list")
    return common


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="icrm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser(
        "ingest", parents=[common], help="convert an Enron-spam tree to canonical form"
    )
    p_ingest.add_argument("src_dir")
    p_ingest.add_argument("out_file")
    p_ingest.add_argument("--limit", type=int, help="messages kept per class (default 1500)")
    p_ingest.set_defaults(handler=cmd_ingest)

    p_classify = sub.add_parser(
        "classify", parents=[common], help="classify one message file with a saved state"
    )
    p_classify.add_argument("state_file")
    p_classify.add_argument("message_file")
    p_classify.add_argument("--explain", action="store_true",
                            help="also print one score line per sampled feature")
    p_classify.set_defaults(handler=cmd_classify)

    p_eval = sub.add_parser(
        "eval", parents=[common], help="run an evaluation protocol"
    )
    p_eval.add_argument("mode", choices=["static", "dynamic"])
    p_eval.add_argument("model", choices=["icrm", "nb", "both"])
    p_eval.add_argument("--data", required=True, help="canonical dataset file")
    p_eval.add_argument("--runs", type=int)
    p_eval.add_argument("--train-per-class", type=int, dest="train_per_class")
    p_eval.add_argument("--test-size", type=int, dest="test_size")
    p_eval.add_argument("--spam-ratio", type=float, dest="spam_ratio")
    p_eval.add_argument("--shuffle-test", action=argparse.BooleanOptionalAction,
                        dest="shuffle_test", default=None)
    p_eval.add_argument("--balance", action=argparse.BooleanOptionalAction,
                        default=None, help="balanced evaluation counting")
    p_eval.add_argument("--window", type=int)
    p_eval.add_argument("--shift", type=int)
    p_eval.add_argument("--n", type=int, help="feature sample cap")
    p_eval.add_argument("--n-a", type=int, dest="n_a", help="slots per feature")
    p_eval.add_argument("--e0-ham", type=float, dest="e0_ham")
    p_eval.add_argument("--r0-ham", type=float, dest="r0_ham")
    p_eval.add_argument("--e0-spam", type=float, dest="e0_spam")
    p_eval.add_argument("--r0-spam", type=float, dest="r0_spam")
    p_eval.add_argument("--e0-test", type=float, dest="e0_test")
    p_eval.add_argument("--r0-test", type=float, dest="r0_test")
    p_eval.add_argument("--proliferation", type=float)
    p_eval.add_argument("--feature-sampler", choices=["first-last", "random"],
                        dest="feature_sampler",
                        help="ablation switch for the feature selection rule")
    p_eval.add_argument("--death-rate", type=float, dest="death_rate")
    p_eval.set_defaults(handler=cmd_eval)

    p_report = sub.add_parser(
        "report", parents=[common], help="re-render tables from an output directory"
    )
    p_report.add_argument("path")
    p_report.set_defaults(handler=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"icrm: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CorpusError, SnapshotError, ModelError, EvalError) as exc:
        print(f"icrm: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
