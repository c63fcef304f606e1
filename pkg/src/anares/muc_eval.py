"""Comparator between coreference-annotated gold text and resolver
output.

Gold annotations use inline SGML COREF markup
(`<COREF ID="1" REF="0" ...>...</COREF>`); REF links are closed
transitively into equivalence classes.  A predicted antecedent counts as
correct when its span names any member of the anaphor's gold class, not
only the nearest one.  Character offsets in the gold text are aligned to
the resolver's token spans with a left-anchored greedy aligner that
skips whitespace.
"""

import re
from dataclasses import dataclass, field

from .mentions import RESOLVABLE_SURFACE_FORMS

RESOLVED = "resolved"
UNRESOLVED = "unresolved"
PLEONASTIC = "pleonastic"

_TAG_RE = re.compile(r"<(/?)([A-Za-z_][\w.-]*)((?:\s[^>]*)?)>")
_ATTR_RE = re.compile(r"([\w-]+)\s*=\s*(?:\"([^\"]*)\"|'([^']*)'|(\S+))")

# parser escapes that differ from the raw characters in gold text
_TOKEN_VARIANTS = {
    "-LRB-": "(", "-RRB-": ")", "-LCB-": "{", "-RCB-": "}",
    "``": '"', "''": '"',
}


class MucParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__("%s at offset %d" % (message, offset))
        self.offset = offset


class AlignmentError(ValueError):
    pass


@dataclass
class GoldAnnotation:
    """One COREF element: ids, an optional REF link and the character
    span in the tag-stripped text.  `token_span` is filled by the
    aligner as (sentence, first token, last token)."""

    mention_id: str
    ref: str | None
    start: int
    end: int
    min_text: str | None = None
    sentence_index: int | None = None
    token_span: tuple | None = None


@dataclass
class PairOutcome:
    """A resolver decision in span form, as read back from a pairs
    file or converted from ResolutionRecords."""

    sentence: int
    start: int
    end: int
    status: str
    ant_sentence: int | None = None
    ant_start: int | None = None
    ant_end: int | None = None


@dataclass
class EvalReport:
    total: int
    correct: int
    accuracy: float
    judgments: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def strip_tags(sgml):
    """The gold text with all SGML tags removed."""
    return _TAG_RE.sub("", sgml)


def parse_gold(sgml):
    """Extract COREF annotations; other tags are stripped and ignored.

    Raises MucParseError on unmatched COREF tags, a REF naming an
    unknown ID, or a cyclic REF graph.
    """
    annotations = []
    stack = []
    pos = 0
    text_len = 0
    for m in _TAG_RE.finditer(sgml):
        text_len += m.start() - pos
        pos = m.end()
        closing, name, attrs = m.group(1), m.group(2), m.group(3)
        if name.upper() != "COREF":
            continue
        if not closing:
            parsed = {k.upper(): (v1 if v1 is not None else
                                  v2 if v2 is not None else v3)
                      for k, v1, v2, v3 in _ATTR_RE.findall(attrs)}
            if "ID" not in parsed:
                raise MucParseError("COREF element without ID", m.start())
            stack.append((parsed, text_len))
        else:
            if not stack:
                raise MucParseError("unmatched </COREF>", m.start())
            parsed, start = stack.pop()
            annotations.append(GoldAnnotation(
                mention_id=parsed["ID"], ref=parsed.get("REF"),
                start=start, end=text_len,
                min_text=parsed.get("MIN")))
    if stack:
        raise MucParseError("unclosed <COREF>", len(sgml))
    ids = {a.mention_id for a in annotations}
    if len(ids) != len(annotations):
        raise MucParseError("duplicate COREF ID", 0)
    for a in annotations:
        if a.ref is not None and a.ref not in ids:
            raise MucParseError(
                "REF=%s names an unknown ID" % a.ref, 0)
    _check_acyclic(annotations)
    annotations.sort(key=lambda a: (a.start, -a.end))
    return annotations


def _check_acyclic(annotations):
    ref = {a.mention_id: a.ref for a in annotations}
    for node in ref:
        seen = set()
        cur = node
        while cur is not None:
            if cur in seen:
                raise MucParseError("cyclic REF chain at ID %s" % cur, 0)
            seen.add(cur)
            cur = ref.get(cur)


def restore_chains(annotations):
    """Partition mention ids into equivalence classes by closing the
    REF links transitively; unlinked mentions form singletons."""
    parent = {a.mention_id: a.mention_id for a in annotations}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in annotations:
        if a.ref is not None:
            parent[find(a.mention_id)] = find(a.ref)
    groups = {}
    for a in annotations:
        groups.setdefault(find(a.mention_id), set()).add(a.mention_id)
    return [frozenset(g) for _, g in sorted(groups.items())]


def align_tokens(doc, text):
    """Character offsets of every document token inside `text`,
    whitespace-insensitive and left-anchored."""
    offsets = []
    p = 0
    for toks in doc.tokens:
        row = []
        for tok in toks:
            while p < len(text) and text[p].isspace():
                p += 1
            matched = None
            for variant in (tok, _TOKEN_VARIANTS.get(tok)):
                if variant and text.startswith(variant, p):
                    matched = variant
                    break
            if matched is None:
                raise AlignmentError(
                    "cannot align token %r at text offset %d" % (tok, p))
            row.append((p, p + len(matched)))
            p += len(matched)
        offsets.append(row)
    return offsets


def _char_to_token_span(offsets, start, end):
    """Tokens overlapping the character range, if they share a sentence."""
    hits = []
    for s, row in enumerate(offsets):
        for i, (a, b) in enumerate(row):
            if a < end and b > start:
                hits.append((s, i))
    if not hits or any(s != hits[0][0] for s, _ in hits):
        return None
    return (hits[0][0], hits[0][1], hits[-1][1])


def outcomes_from_records(records):
    out = []
    for r in records:
        m = r.anaphor.mention
        o = PairOutcome(m.sentence_index, m.span[0], m.span[1], r.status)
        if r.status == RESOLVED:
            o.ant_sentence = r.antecedent.sentence_index
            o.ant_start, o.ant_end = r.antecedent.span
        out.append(o)
    return out


_PAIR_RE = re.compile(
    r'^(\d+):(\d+)-(\d+) "(?:[^"]*)" '
    r'(?:<- (\d+):(\d+)-(\d+) "(?:[^"]*)"|(NULL)|(PLEONASTIC))$')


def parse_pairs(text):
    """Read a pairs file back into PairOutcome rows."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        m = _PAIR_RE.match(line)
        if m is None:
            raise MucParseError("bad pairs line %d: %r" % (lineno, line),
                                lineno)
        o = PairOutcome(int(m.group(1)), int(m.group(2)), int(m.group(3)),
                        UNRESOLVED if m.group(7) else
                        PLEONASTIC if m.group(8) else RESOLVED)
        if o.status == RESOLVED:
            o.ant_sentence = int(m.group(4))
            o.ant_start = int(m.group(5))
            o.ant_end = int(m.group(6))
        out.append(o)
    return out


def _is_resolvable_form(text_piece):
    words = " ".join(text_piece.split()).strip(".,;:!?\"'").lower()
    return words in RESOLVABLE_SURFACE_FORMS


def score(records, gold, doc):
    """Score resolver output against gold COREF markup.

    `records` are ResolutionRecords or PairOutcomes, `gold` is the
    annotated SGML text, `doc` the Document the resolver ran on.  An
    anaphor is correct when its predicted antecedent span names a gold
    mention of its own class (full or MIN span); unresolved and
    pleonastic predictions are correct only for gold mentions with no
    coreference link.  Gold pronoun mentions that cannot be aligned or
    were not extracted count as incorrect.
    """
    if records and hasattr(records[0], "anaphor"):
        records = outcomes_from_records(records)
    annotations = parse_gold(gold)
    text = strip_tags(gold)
    offsets = align_tokens(doc, text)
    warnings = []
    for a in annotations:
        a.token_span = _char_to_token_span(offsets, a.start, a.end)
        if a.token_span is None:
            warnings.append("cannot align gold mention ID=%s %r"
                            % (a.mention_id, text[a.start:a.end]))
        else:
            a.sentence_index = a.token_span[0]
    classes = restore_chains(annotations)
    class_of = {}
    for group in classes:
        for mid in group:
            class_of[mid] = group
    spans = {}
    for a in annotations:
        if a.token_span is None:
            continue
        spans.setdefault(a.token_span, []).append(a)
        if a.min_text:
            piece = text[a.start:a.end]
            at = piece.find(a.min_text)
            if at >= 0:
                min_span = _char_to_token_span(
                    offsets, a.start + at, a.start + at + len(a.min_text))
                if min_span is not None:
                    spans.setdefault(min_span, []).append(a)
    outcome_by_span = {(o.sentence, o.start, o.end): o for o in records}
    judgments = []
    correct = 0
    total = 0
    for g in annotations:
        if not _is_resolvable_form(text[g.start:g.end]):
            continue
        total += 1
        linked = len(class_of[g.mention_id]) > 1
        if g.token_span is None:
            judgments.append((g.mention_id, "alignment-failure", False))
            continue
        o = outcome_by_span.get(g.token_span)
        if o is None:
            judgments.append((g.mention_id, "not-extracted", False))
            continue
        if o.status in (UNRESOLVED, PLEONASTIC):
            ok = not linked
            judgments.append((g.mention_id, o.status, ok))
        else:
            ant_span = (o.ant_sentence, o.ant_start, o.ant_end)
            ok = any(h.mention_id != g.mention_id
                     and h.mention_id in class_of[g.mention_id]
                     for h in spans.get(ant_span, ()))
            judgments.append((g.mention_id, "resolved", ok))
        if judgments[-1][2]:
            correct += 1
    accuracy = correct / total if total else 0.0
    return EvalReport(total=total, correct=correct, accuracy=accuracy,
                      judgments=judgments, warnings=warnings)


def render_report(report):
    """Human-readable summary plus the machine-readable line."""
    lines = ["scored %d annotated anaphors: %d correct (%.1f%%)"
             % (report.total, report.correct, 100.0 * report.accuracy)]
    for mid, status, ok in report.judgments:
        lines.append("  ID=%s %s %s" % (mid, status,
                                        "correct" if ok else "incorrect"))
    for w in report.warnings:
        lines.append("  warning: %s" % w)
    lines.append("accuracy=%.3f correct=%d total=%d"
                 % (report.accuracy, report.correct, report.total))
    return "\n".join(lines) + "\n"
