"""Command line entry point: ``lrl-tagger {convert,stats,train,eval,predict}``.

Exit codes: 0 success, 2 usage or data error, 3 backend runtime missing.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .config import load_run_config, tagger_home
from .corpus import FORMATS, read_corpus, split_train_test, tag_distribution, export_distribution_csv, write_corpus
from .errors import BackendUnavailable, EmptyCorpus, IoFailure, TaggerError
from .evaluation import evaluate_tagger, export_report_csv, render_confusion, render_report
from .tagger import POSTagger

log = logging.getLogger("lrl_tagger")

EXIT_OK = 0
EXIT_DATA = 2
EXIT_BACKEND = 3


def _read_nonempty(path, fmt):
    corpus = read_corpus(path, fmt)
    if len(corpus) == 0:
        raise EmptyCorpus(f"{path} contains no sentences")
    return corpus


def _resolve_bundle(value: str) -> Path:
    path = Path(value)
    if not path.exists() and not path.is_absolute():
        cached = tagger_home() / value
        if cached.exists():
            return cached
    return path


def cmd_convert(args) -> int:
    corpus = read_corpus(args.input, args.format)
    write_corpus(corpus, args.out)
    print(f"sentences={len(corpus)} tokens={corpus.token_count}")
    return EXIT_OK


def cmd_stats(args) -> int:
    corpus = _read_nonempty(args.input, args.format)
    dist = tag_distribution(corpus)
    print(f"sentences={len(corpus)} tokens={corpus.token_count} tags={len(dist.counts)}")
    width = max(len(t) for t in dist.counts)
    for tag, count, frac in dist.ranked():
        print(f"{tag:<{width}}  {count:>7}  {frac:.6f}")
    share = dist.top_share(2)
    print(f"top2_share={share:.6f}")
    if share > 0.5:
        print("top-2 share > 0.5")
    if args.csv:
        export_distribution_csv(dist, args.csv)
    if args.plot:
        from .plots import distribution_bars

        try:
            distribution_bars(dist.ranked(), args.plot)
        except OSError as exc:
            raise IoFailure(f"cannot write {args.plot}: {exc}") from exc
    return EXIT_OK


def cmd_train(args) -> int:
    config = load_run_config(args.config)
    run_dir = Path(args.output_dir) / config.language if args.output_dir else config.run_dir
    started = time.perf_counter()
    corpus = _read_nonempty(config.train_path, config.format)
    run_dir.mkdir(parents=True, exist_ok=True)
    if config.eval_path is not None:
        train, test = corpus, _read_nonempty(config.eval_path, config.format)
    else:
        train, test = split_train_test(corpus, config.split.fraction, config.split.seed)
        write_corpus(train, run_dir / "train.tsv")
    write_corpus(test, run_dir / "test.tsv")

    tagger = POSTagger.fit(train, config.backend)
    bundle = tagger.save(run_dir / "bundle")
    elapsed = time.perf_counter() - started
    print(f"bundle={bundle}")
    print(f"test={run_dir / 'test.tsv'}")
    print(
        f"language={config.language} backend={config.backend.backend_id} "
        f"train_sentences={len(train)} train_tokens={train.token_count} "
        f"test_sentences={len(test)} tags={len(tagger.codec)} seconds={elapsed:.2f}"
    )
    return EXIT_OK


def cmd_eval(args) -> int:
    bundle = _resolve_bundle(args.bundle)
    tagger = POSTagger.load(bundle)
    test = _read_nonempty(args.input, args.format)
    report = evaluate_tagger(tagger, test)
    out = Path(args.out) if args.out else bundle.parent / "eval"
    out.mkdir(parents=True, exist_ok=True)
    print(render_report(report), end="")
    export_report_csv(report, out / "report.csv")
    render_confusion(report, out / "confusion.csv", "csv")
    if not args.no_plot:
        render_confusion(report, out / "confusion.png", "png")
    print(f"outputs={out}")
    return EXIT_OK


def cmd_predict(args) -> int:
    tagger = POSTagger.load(_resolve_bundle(args.bundle))
    if args.text is not None:
        sentences = [args.text]
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot read {args.input}: {exc}") from exc
        sentences = [line for line in text.splitlines() if line.strip()]
    blocks = []
    for sentence in sentences:
        pairs = tagger.predict(sentence)
        blocks.append("\n".join(f"{w}\t{t}" for w, t in pairs))
    print("\n\n".join(blocks))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrl-tagger", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="normalise a corpus file to two-column form")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=sorted(FORMATS), default="parallel")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stats", help="tag distribution of a corpus")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=sorted(FORMATS), default="two_column")
    p.add_argument("--csv", help="write tag,count,fraction CSV here")
    p.add_argument("--plot", help="write a bar chart here (png/svg)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("train", help="fit a tagger from a run config and save the bundle")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir", help="override the config's output_dir")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="classification report and confusion matrix for a bundle")
    p.add_argument("--bundle", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=sorted(FORMATS), default="two_column")
    p.add_argument("--out", help="output directory (default: <bundle>/../eval)")
    p.add_argument("--no-plot", action="store_true", help="skip the confusion heatmap")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("predict", help="tag text with a saved bundle")
    p.add_argument("--bundle", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--text")
    src.add_argument("--in", dest="input", help="file with one whitespace-tokenized sentence per line")
    p.set_defaults(func=cmd_predict)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DATA if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BackendUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    except (TaggerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
