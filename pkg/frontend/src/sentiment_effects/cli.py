"""Command line front-end: compute effect documents and render figures.

``compute`` scores one word pair over the base sentences and writes the
external-effects JSON document; ``figures`` turns sweep files written by
the core CLI into image files. Errors surface as ``error: ...`` on stderr
with exit status 2, mirroring the core tool.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .completions import BASE_SENTENCES, CompletionSpec
from .effects import (
    DEFAULT_MODEL,
    LexiconScorer,
    TransformerScorer,
    compute_effects,
    dump_effects_document,
)
from .errors import CompletionError, LexiconFormatError
from .figures import render_figure


def _emit_text(out_path: str, text: str) -> None:
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _read_bases(path: str) -> tuple[str, ...]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    bases = tuple(line.strip() for line in lines if line.strip())
    if not bases:
        raise CompletionError(f"base sentence file {path!r} is empty")
    return bases


def cmd_compute(args: argparse.Namespace) -> int:
    words = tuple(w.strip() for w in args.pair.split(","))
    if len(words) != 2:
        raise CompletionError(f"--pair {args.pair!r} must name exactly two comma-separated words")
    bases = BASE_SENTENCES if args.bases is None else _read_bases(args.bases)
    spec = CompletionSpec(bases=bases, pair=words)
    if args.scorer == "lexicon":
        if args.lexicon is None:
            raise LexiconFormatError("--scorer lexicon needs --lexicon WEIGHTS.json")
        scorer = LexiconScorer.from_file(args.lexicon)
    else:
        scorer = TransformerScorer(args.model)
    _emit_text(args.out, dump_effects_document(compute_effects(spec, scorer)))
    return 0


def cmd_figures(args: argparse.Namespace) -> int:
    render_figure(args.sweep, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentiment-effects",
        description="Measure signed completion effects on a sentiment "
        "classifier and render figures from decomposition sweep files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="write the effects document for one word pair")
    p.add_argument("--pair", default="not,bad", help="the two words, comma separated")
    p.add_argument("--bases", default=None, help="file with one base sentence per line")
    p.add_argument("--scorer", choices=("model", "lexicon"), default="model")
    p.add_argument("--model", default=DEFAULT_MODEL, help="sequence-classification model id")
    p.add_argument("--lexicon", default=None, help="weights file for --scorer lexicon")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("figures", help="render sweep files into one figure")
    p.add_argument(
        "--sweep",
        action="append",
        required=True,
        help="sweep file from the core CLI; repeat for side-by-side panels",
    )
    p.add_argument("--out", required=True, help="image path; format follows the extension")
    p.set_defaults(func=cmd_figures)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # surface package errors as clean CLI failures
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
