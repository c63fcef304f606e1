#!/usr/bin/env python3
"""End-to-end accuracy against a locally licensed MUC-6-style corpus.

The corpus directory must hold one pair of files per document:

    <name>.sgm    gold text with COREF ID/REF markup
    <name>.trees  bracketed constituency parses of the same text, as
                  produced by an external parser fed one sentence per
                  line (see `anares split`)

Usage:
    python scripts/muc6_eval.py [DIRECTORY]

The directory defaults to $ANARES_MUC6_DIR.  Prints one line per
document plus the aggregate machine-readable accuracy line.
"""

import os
import sys
from pathlib import Path

from anares import load_lexicons, read_trees, resolve_document
from anares.muc_eval import score


def main(argv):
    directory = argv[1] if len(argv) > 1 else os.environ.get(
        "ANARES_MUC6_DIR")
    if not directory:
        print(__doc__, file=sys.stderr)
        return 64
    lex = load_lexicons()
    total = correct = 0
    sgml_files = sorted(Path(directory).glob("*.sgm"))
    if not sgml_files:
        print("no .sgm files under %s" % directory, file=sys.stderr)
        return 2
    for sgml_path in sgml_files:
        trees_path = sgml_path.with_suffix(".trees")
        if not trees_path.exists():
            print("skipping %s: no matching .trees file" % sgml_path.name,
                  file=sys.stderr)
            continue
        doc = read_trees(trees_path.read_text())
        records = resolve_document(doc, lex)
        report = score(records, sgml_path.read_text(), doc)
        total += report.total
        correct += report.correct
        print("%-30s correct=%d total=%d" % (sgml_path.name, report.correct,
                                             report.total))
        for warning in report.warnings:
            print("  warning: %s" % warning, file=sys.stderr)
    accuracy = correct / total if total else 0.0
    print("accuracy=%.3f correct=%d total=%d" % (accuracy, correct, total))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
