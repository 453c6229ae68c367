"""Command-line interface.

Subcommands:
    label    name every embedding dimension at a single theta
    sweep    evaluate a theta grid per lexical resource
    metrics  report coverage metrics for a single configuration

Exit codes: 0 success, 1 runtime/data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .embeddings import (
    EmbeddingFormat,
    NormalizationScope,
    NormalizedEmbeddingTable,
    normalize,
    parse_embeddings,
    read_embeddings,
)
from .errors import Lex2vecError
from .labeling import DimensionLabeling, Theta, cap_labels, label_dimensions, top_k_frequent
from .lexicon import LEXICON_FORMATS, Lexicon, load_lexicon, merge_lexicons
from .metrics import (
    SweepReport,
    SweepRow,
    avg_labels_per_dimension,
    sweep,
    unnamed_ratio,
)
from .report import (
    dumps_document,
    labeling_to_document,
    render_labeling_tsv,
    render_sweep_tsv,
    report_to_document,
)

DEFAULT_THETA = 0.75
DEFAULT_THETA_GRID = (0.81, 0.79, 0.77, 0.75)

_EMBEDDING_FORMATS = {
    "auto": EmbeddingFormat.AUTO,
    "word2vec": EmbeddingFormat.WORD2VEC_TEXT,
    "glove": EmbeddingFormat.GLOVE_TEXT,
}


@dataclass
class RunConfig:
    """Resolved options for one invocation."""

    embeddings_path: str
    lexicons: tuple[tuple[str, str], ...]  # (path, format) pairs
    embedding_format: str = "auto"
    norm_scope: NormalizationScope = "dimension"
    theta: float = DEFAULT_THETA
    theta_grid: tuple[float, ...] = DEFAULT_THETA_GRID
    label_filter: tuple[str, int] | None = None  # ("cap" | "topk", limit)
    output_path: str | None = None
    json_output: bool = False
    keep_contributors: bool = False
    avg_mode: str = "all"
    distinct_labels: bool = False


def _theta_arg(text: str) -> float:
    try:
        return Theta(float(text)).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _theta_grid_arg(text: str) -> tuple[float, ...]:
    parts = [p for chunk in text.split(",") for p in chunk.split() if p]
    if not parts:
        raise argparse.ArgumentTypeError("theta grid must contain at least one value")
    return tuple(_theta_arg(p) for p in parts)


def _lexicon_arg(text: str) -> tuple[str, str]:
    path, sep, fmt = text.rpartition(":")
    if not sep or not path or fmt not in LEXICON_FORMATS:
        raise argparse.ArgumentTypeError(
            f"expected PATH:FORMAT with FORMAT one of {', '.join(LEXICON_FORMATS)}"
        )
    return path, fmt


def _filter_arg(text: str) -> tuple[str, int] | None:
    if text == "none":
        return None
    kind, sep, raw_limit = text.partition(":")
    if not sep or kind not in ("cap", "topk"):
        raise argparse.ArgumentTypeError("expected 'none', 'cap:LIMIT', or 'topk:K'")
    try:
        limit = int(raw_limit)
    except ValueError:
        raise argparse.ArgumentTypeError(f"limit {raw_limit!r} is not an integer") from None
    if limit < 1:
        raise argparse.ArgumentTypeError("filter limit must be >= 1")
    return kind, limit


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lex2vec",
        description="Name word-embedding dimensions with lexical-resource labels.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--embeddings", "-e", required=True, metavar="PATH",
        help="embedding file in Word2Vec or GloVe text form ('-' reads stdin)",
    )
    common.add_argument(
        "--embedding-format", choices=sorted(_EMBEDDING_FORMATS), default="auto",
        help="input layout (default: auto-detect from the first line)",
    )
    common.add_argument(
        "--norm-scope", choices=("dimension", "word", "global"), default="dimension",
        help="what min-max normalization ranges over (default: dimension)",
    )
    common.add_argument(
        "--lexicon", "-l", action="append", type=_lexicon_arg, required=True,
        metavar="PATH:FORMAT", dest="lexicons",
        help=f"lexical resource; FORMAT is one of {', '.join(LEXICON_FORMATS)} (repeatable)",
    )
    common.add_argument(
        "--output", "-o", default=None, metavar="PATH",
        help="write here instead of stdout",
    )
    common.add_argument(
        "--json", action="store_true", dest="json_output",
        help="emit a JSON document instead of TSV",
    )

    label = subparsers.add_parser(
        "label", parents=[common],
        help="name every dimension at a single theta",
    )
    label.add_argument(
        "--theta", type=_theta_arg, default=DEFAULT_THETA,
        help=f"band threshold, 0.5 < theta <= 1.0 (default: {DEFAULT_THETA})",
    )
    label.add_argument(
        "--filter", type=_filter_arg, default=None, dest="label_filter",
        metavar="SPEC", help="per-dimension label filter: none, cap:LIMIT, or topk:K",
    )
    label.add_argument(
        "--contributors", action="store_true", dest="keep_contributors",
        help="include per-dimension contributor records in JSON output",
    )

    sweep_cmd = subparsers.add_parser(
        "sweep", parents=[common],
        help="evaluate a theta grid for each lexical resource",
    )
    sweep_cmd.add_argument(
        "--theta-grid", type=_theta_grid_arg, default=DEFAULT_THETA_GRID,
        metavar="T1,T2,...",
        help="comma-separated thetas (default: %s)" % ",".join(map(str, DEFAULT_THETA_GRID)),
    )
    sweep_cmd.add_argument(
        "--avg-mode", choices=("all", "named"), default="all",
        help="dimensions counted in the TSV average column (default: all)",
    )
    sweep_cmd.add_argument(
        "--distinct-labels", action="store_true",
        help="average distinct labels per dimension instead of label mass",
    )

    metrics_cmd = subparsers.add_parser(
        "metrics", parents=[common],
        help="coverage metrics for one theta",
    )
    metrics_cmd.add_argument(
        "--theta", type=_theta_arg, default=DEFAULT_THETA,
        help=f"band threshold, 0.5 < theta <= 1.0 (default: {DEFAULT_THETA})",
    )
    metrics_cmd.add_argument(
        "--filter", type=_filter_arg, default=None, dest="label_filter",
        metavar="SPEC", help="apply a label filter before measuring",
    )
    metrics_cmd.add_argument(
        "--avg-mode", choices=("all", "named"), default="all",
        help="dimensions counted in the TSV average column (default: all)",
    )
    metrics_cmd.add_argument(
        "--distinct-labels", action="store_true",
        help="average distinct labels per dimension instead of label mass",
    )
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        embeddings_path=args.embeddings,
        lexicons=tuple(args.lexicons),
        embedding_format=args.embedding_format,
        norm_scope=args.norm_scope,
        theta=getattr(args, "theta", DEFAULT_THETA),
        theta_grid=tuple(getattr(args, "theta_grid", DEFAULT_THETA_GRID)),
        label_filter=getattr(args, "label_filter", None),
        output_path=args.output,
        json_output=args.json_output,
        keep_contributors=getattr(args, "keep_contributors", False),
        avg_mode=getattr(args, "avg_mode", "all"),
        distinct_labels=getattr(args, "distinct_labels", False),
    )


def _fail(stage: str, exc: Exception) -> int:
    print(f"lex2vec: {stage} error: {exc}", file=sys.stderr)
    return 1


def _load_normalized(config: RunConfig) -> NormalizedEmbeddingTable:
    fmt = _EMBEDDING_FORMATS[config.embedding_format]
    if config.embeddings_path == "-":
        table = parse_embeddings(sys.stdin, fmt)
    else:
        table = read_embeddings(config.embeddings_path, fmt)
    return normalize(table, config.norm_scope)


def _load_lexicons(config: RunConfig) -> list[Lexicon]:
    return [load_lexicon(path, fmt) for path, fmt in config.lexicons]


def _apply_filter(labeling: DimensionLabeling, config: RunConfig) -> DimensionLabeling:
    if config.label_filter is None:
        return labeling
    kind, limit = config.label_filter
    if kind == "cap":
        return cap_labels(labeling, limit)
    return top_k_frequent(labeling, limit)


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def run_label(config: RunConfig) -> int:
    """Load, normalize, label, filter, and emit the per-dimension names."""
    try:
        table = _load_normalized(config)
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("parse", exc)
    try:
        lexicon = merge_lexicons(_load_lexicons(config))
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("lexicon", exc)
    try:
        labeling = label_dimensions(
            table, lexicon, config.theta, keep_contributors=config.keep_contributors
        )
        labeling = _apply_filter(labeling, config)
        if config.json_output:
            text = dumps_document(labeling_to_document(labeling))
        else:
            text = render_labeling_tsv(labeling)
    except (Lex2vecError, ValueError) as exc:
        return _fail("label", exc)
    try:
        _write_output(text, config.output_path)
    except OSError as exc:
        return _fail("write", exc)
    return 0


def run_sweep(config: RunConfig) -> int:
    """Evaluate the theta grid per resource and emit the report."""
    try:
        table = _load_normalized(config)
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("parse", exc)
    try:
        lexicons = _load_lexicons(config)
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("lexicon", exc)
    try:
        report = sweep(table, lexicons, config.theta_grid, distinct=config.distinct_labels)
        if config.json_output:
            text = dumps_document(report_to_document(report))
        else:
            text = render_sweep_tsv(report, avg_mode=config.avg_mode)
    except (Lex2vecError, ValueError) as exc:
        return _fail("label", exc)
    try:
        _write_output(text, config.output_path)
    except OSError as exc:
        return _fail("write", exc)
    return 0


def run_metrics(config: RunConfig) -> int:
    """Emit a one-row report for a single (lexicons, theta) configuration."""
    try:
        table = _load_normalized(config)
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("parse", exc)
    try:
        lexicon = merge_lexicons(_load_lexicons(config))
    except (Lex2vecError, OSError, ValueError) as exc:
        return _fail("lexicon", exc)
    try:
        labeling = label_dimensions(table, lexicon, config.theta)
        labeling = _apply_filter(labeling, config)
        ratio = unnamed_ratio(labeling)
        avg_all = avg_labels_per_dimension(labeling, "all", config.distinct_labels)
        avg_named = (
            None
            if ratio == 1.0
            else avg_labels_per_dimension(labeling, "named", config.distinct_labels)
        )
        report = SweepReport(
            (SweepRow(config.theta, lexicon.resource_name, ratio, avg_all, avg_named),)
        )
        if config.json_output:
            text = dumps_document(report_to_document(report))
        else:
            text = render_sweep_tsv(report, avg_mode=config.avg_mode)
    except (Lex2vecError, ValueError) as exc:
        return _fail("label", exc)
    try:
        _write_output(text, config.output_path)
    except OSError as exc:
        return _fail("write", exc)
    return 0


_HANDLERS = {"label": run_label, "sweep": run_sweep, "metrics": run_metrics}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
