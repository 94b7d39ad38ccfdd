"""Command-line front end: score CoNLL-U input, evaluate corpora, compare systems.

Exit codes: 0 success, 2 input parse/validation failure, 3 lexicon load
failure. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .aggregation import (
    BothEmpty,
    EmptyInput,
    aggregate,
    map_to_class,
    metric_from_name,
    metric_name,
)
from .conllu import ConlluError, parse_conllu_file
from .evaluation import (
    BadPolarity,
    EmptyDataset,
    MissingColumn,
    evaluate,
    compare_report,
    filter_binary,
    load_dataset,
    predict_compositional,
    predict_proximity,
)
from .lexicon import LexiconError, LexiconSet, load_lexicons
from .scoring import score_sentence

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LEXICON = 3

LEXICON_DIR_ENV = "BRANCHPOL_LEXICON_DIR"
DEFAULT_LEXICON_FILES = {
    "sentiment": "sentiment_es.tsv",
    "intensifier": "intensifiers_es.tsv",
    "negator": "negators_es.txt",
}
COMPARE_TAUS = (0.7, 0.8, 1.0)

_INPUT_ERRORS = (
    ConlluError,
    MissingColumn,
    BadPolarity,
    EmptyDataset,
    EmptyInput,
    BothEmpty,
    FileNotFoundError,
)


def _default_lexicon(kind: str) -> str | None:
    root = os.environ.get(LEXICON_DIR_ENV)
    if root is None:
        return None
    return str(Path(root) / DEFAULT_LEXICON_FILES[kind])


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sentiment-lex", default=_default_lexicon("sentiment"),
                        help=f"sentiment lexicon TSV (default: ${LEXICON_DIR_ENV}/sentiment_es.tsv)")
    parser.add_argument("--intensifier-lex", default=_default_lexicon("intensifier"),
                        help=f"intensifier lexicon TSV (default: ${LEXICON_DIR_ENV}/intensifiers_es.tsv)")
    parser.add_argument("--negator-lex", default=_default_lexicon("negator"),
                        help=f"negator list (default: ${LEXICON_DIR_ENV}/negators_es.txt)")
    parser.add_argument("--metric", choices=["mean", "weighted-last", "extreme"],
                        default="extreme", help="review aggregation metric")
    parser.add_argument("--last-weight", type=float, default=2.0,
                        help="weight of the final sentence for --metric weighted-last")
    parser.add_argument("--out", type=Path, default=None, help="also write JSON output here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchpol",
        description="Compositional sentiment scoring over CoNLL-U dependency trees.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    score = subparsers.add_parser("score", help="score one CoNLL-U file")
    score.add_argument("conllu", type=Path, help="CoNLL-U input file")
    score.add_argument("--explain", action="store_true", help="emit per-branch trace JSON")
    _add_common_flags(score)
    score.set_defaults(func=cmd_score)

    ev = subparsers.add_parser("evaluate", help="evaluate on a manifest CSV")
    ev.add_argument("manifest", type=Path, help="dataset manifest CSV")
    ev.add_argument("--binary", action="store_true",
                    help="restrict to gold classes 1 and 5")
    _add_common_flags(ev)
    ev.set_defaults(func=cmd_evaluate)

    cmp_ = subparsers.add_parser("compare", help="compare against the proximity baseline")
    cmp_.add_argument("manifest", type=Path, help="dataset manifest CSV")
    cmp_.add_argument("--binary", action="store_true",
                      help="restrict to gold classes 1 and 5")
    cmp_.add_argument("--baseline-window", type=int, default=3,
                      help="proximity window size (tokens)")
    cmp_.add_argument("--baseline-tau", type=float, action="append", default=None,
                      choices=COMPARE_TAUS, help="threshold(s); repeatable (default: all three)")
    _add_common_flags(cmp_)
    cmp_.set_defaults(func=cmd_compare)
    return parser


def _load_lexicons(args: argparse.Namespace) -> LexiconSet:
    for flag, value in (
        ("--sentiment-lex", args.sentiment_lex),
        ("--intensifier-lex", args.intensifier_lex),
        ("--negator-lex", args.negator_lex),
    ):
        if value is None:
            raise FileNotFoundError(
                f"no lexicon configured: pass {flag} or set ${LEXICON_DIR_ENV}"
            )
    return load_lexicons(args.sentiment_lex, args.intensifier_lex, args.negator_lex)


def _write_out(args: argparse.Namespace, payload: str) -> None:
    if args.out is not None:
        args.out.write_text(payload, encoding="utf-8")


def cmd_score(args: argparse.Namespace, lexicons: LexiconSet) -> int:
    sentences = parse_conllu_file(args.conllu)
    metric = metric_from_name(args.metric, args.last_weight)
    scored = [score_sentence(sentence, lexicons) for sentence in sentences]
    if not scored:
        raise EmptyInput(f"no sentences in {args.conllu}")
    record = {"sentences": [], "metric": metric_name(metric)}
    for index, result in enumerate(scored, start=1):
        print(f"sentence {index}: {result.score}")
        traces = [trace.as_dict() for trace in result.traces]
        if args.explain:
            for trace in traces:
                print(json.dumps(trace))
        record["sentences"].append({"index": index, "score": result.score, "traces": traces})
    review = aggregate([result.score for result in scored], metric)
    predicted = map_to_class(review)
    print(f"review: {review} ({metric_name(metric)})")
    print(f"class: {predicted}")
    record["review"] = review
    record["class"] = predicted
    _write_out(args, json.dumps(record, indent=2) + "\n")
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace, lexicons: LexiconSet) -> int:
    records = load_dataset(args.manifest)
    if args.binary:
        records = filter_binary(records)
    metric = metric_from_name(args.metric, args.last_weight)
    report = evaluate(
        records,
        lambda record: predict_compositional(record, lexicons, metric),
        system_name=f"compositional({metric_name(metric)})",
    )
    rendered = compare_report([report])
    print(rendered, end="")
    _write_out(args, json.dumps([report.as_dict()], indent=2) + "\n")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, lexicons: LexiconSet) -> int:
    records = load_dataset(args.manifest)
    if args.binary:
        records = filter_binary(records)
    metric = metric_from_name(args.metric, args.last_weight)
    taus = tuple(args.baseline_tau) if args.baseline_tau else COMPARE_TAUS
    reports = [
        evaluate(
            records,
            lambda record: predict_compositional(record, lexicons, metric),
            system_name=f"compositional({metric_name(metric)})",
        )
    ]
    for tau in taus:
        reports.append(
            evaluate(
                records,
                lambda record, t=tau: predict_proximity(
                    record, lexicons, args.baseline_window, t
                ),
                system_name=f"proximity(window={args.baseline_window},tau={tau})",
            )
        )
    rendered = compare_report(reports)
    print(rendered, end="")
    _write_out(args, json.dumps([report.as_dict() for report in reports], indent=2) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lexicons = _load_lexicons(args)
    except (LexiconError, FileNotFoundError, OSError) as err:
        print(f"error: cannot load lexicons: {err}", file=sys.stderr)
        return EXIT_LEXICON
    try:
        return args.func(args, lexicons)
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    raise SystemExit(main())
