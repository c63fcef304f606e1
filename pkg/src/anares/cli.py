"""Command-line entry point.

Subcommands: `split` raw text into sentences, `resolve` bracketed parse
trees into anaphor-antecedent pairs (or annotated / substituted text via
--format; `annotate` and `substitute` are aliases), and `score` a pairs
file against MUC-style gold markup.  Diagnostics go to stderr; data
streams carry only the declared formats.  Exit codes: 2 missing file,
3 malformed input, 64 bad usage.
"""

import argparse
import sys

from . import muc_eval, resolver, splitter
from .lexicon import LexiconError, load_lexicons
from .muc_eval import AlignmentError, MucParseError
from .salience import FACTOR_WEIGHTS
from .treebank import TreeParseError, read_trees

EXIT_OK = 0
EXIT_MISSING_FILE = 2
EXIT_BAD_INPUT = 3
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path, data):
    if path is None or path == "-":
        sys.stdout.write(data)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(data)


def _load_weights(path):
    weights = dict(FACTOR_WEIGHTS)
    text = _read(path)
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("bad weights line %d: %r" % (lineno, line))
        name, value = (part.strip() for part in line.split("=", 1))
        if name not in weights:
            raise ValueError("unknown salience factor %r on line %d"
                             % (name, lineno))
        weights[name] = int(value)
    return weights


def _add_resolve_options(sub, with_format):
    sub.add_argument("input", nargs="?", default="-",
                     help="bracketed parse trees (default: stdin)")
    sub.add_argument("-o", "--output", default="-")
    if with_format:
        sub.add_argument("--format", default="pairs",
                         choices=["pairs", "annotated", "substituted"])
    sub.add_argument("--window", type=int, default=3, metavar="N",
                     help="candidate window in preceding sentences")
    sub.add_argument("--lexicon-dir", metavar="PATH")
    sub.add_argument("--gendered-nouns", choices=["on", "off"],
                     default="off")
    sub.add_argument("--weights", metavar="FILE",
                     help="salience weight overrides (name = value lines)")
    sub.add_argument("--diagnostics", action="store_true",
                     help="emit per-candidate verdicts on stderr")


def build_parser():
    parser = _Parser(prog="anares",
                     description="salience-based pronominal anaphora "
                                 "resolution over constituency parses")
    subs = parser.add_subparsers(dest="command", required=True)

    split = subs.add_parser("split", help="split raw text into sentences")
    split.add_argument("input", nargs="?", default="-")
    split.add_argument("-o", "--output", default="-")
    split.add_argument("--lexicon-dir", metavar="PATH")

    _add_resolve_options(subs.add_parser(
        "resolve", help="resolve anaphors in parsed text"), True)
    _add_resolve_options(subs.add_parser(
        "annotate", help="resolve and mark anaphors inline"), False)
    _add_resolve_options(subs.add_parser(
        "substitute", help="resolve and replace anaphors"), False)

    score = subs.add_parser("score",
                            help="compare a pairs file against gold markup")
    score.add_argument("gold", help="gold text with COREF annotations")
    score.add_argument("pairs", help="resolver pairs output")
    score.add_argument("--trees", required=True, metavar="FILE",
                       help="the parse trees the pairs were produced from")
    score.add_argument("-o", "--output", default="-")
    return parser


_RENDERERS = {
    "pairs": resolver.render_pairs,
    "annotated": resolver.render_annotated,
    "substituted": resolver.render_substituted,
}


def _run_resolve(args, mode):
    lex = load_lexicons(args.lexicon_dir,
                        gendered_nouns=args.gendered_nouns == "on")
    cfg = resolver.ResolverConfig(
        window_sentences=args.window,
        gendered_noun_lexicon=args.gendered_nouns == "on",
        weights=_load_weights(args.weights) if args.weights else None)
    doc = read_trees(_read(args.input))
    records = resolver.resolve_document(doc, lex, cfg)
    if args.diagnostics:
        sys.stderr.write(resolver.render_diagnostics(records, doc))
    _write(args.output, _RENDERERS[mode](records, doc))
    return EXIT_OK


def run(args):
    if args.command == "split":
        cfg = splitter.default_config(args.lexicon_dir)
        sentences = splitter.split_sentences(_read(args.input), cfg)
        _write(args.output, "".join(s + "\n" for s in sentences))
        return EXIT_OK
    if args.command in ("resolve", "annotate", "substitute"):
        mode = getattr(args, "format", None) or \
            {"annotate": "annotated", "substitute": "substituted"}.get(
                args.command, "pairs")
        return _run_resolve(args, mode)
    if args.command == "score":
        doc = read_trees(_read(args.trees))
        outcomes = muc_eval.parse_pairs(_read(args.pairs))
        report = muc_eval.score(outcomes, _read(args.gold), doc)
        _write(args.output, muc_eval.render_report(report))
        return EXIT_OK
    raise _UsageError("unknown command %r" % args.command)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except _UsageError as e:
        sys.stderr.write("anares: %s\n" % e)
        return EXIT_USAGE
    except FileNotFoundError as e:
        sys.stderr.write("anares: file not found: %s\n" % e.filename)
        return EXIT_MISSING_FILE
    except (TreeParseError, MucParseError, AlignmentError, LexiconError,
            ValueError) as e:
        sys.stderr.write("anares: %s\n" % e)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
