"""Document-level resolution: pair anaphors with windowed candidates,
filter, rank by salience, break ties by proximity, and grow chains.

Resolution of one document is strictly sequential because later
decisions read earlier chain merges; distinct documents share no state
and can be resolved concurrently.
"""

from dataclasses import dataclass, field, replace

from . import binding
from .lexicon import GENDERED_NOUNS
from .mentions import extract_anaphors, extract_noun_phrases
from .salience import (EquivalenceClass, SalienceFactorSet, merge_chain,
                       weight_of)
from .treebank import PUNCT_TAGS, ancestors, detokenize

RESOLVED = "resolved"
UNRESOLVED = "unresolved"
PLEONASTIC = "pleonastic"


@dataclass
class ResolverConfig:
    window_sentences: int = 3
    gendered_noun_lexicon: bool = False
    weights: dict | None = None


@dataclass
class ResolutionRecord:
    """One anaphor's outcome.  `candidates_considered` keeps
    (mention, verdict, weight) triples for diagnostics; weight is None
    for rejected candidates."""

    anaphor: object
    status: str
    antecedent: object = None
    chain_id: int | None = None
    candidates_considered: list = field(default_factory=list)


def candidate_set(anaphor, mentions, cfg):
    """Mentions in the preceding window and the anaphor's own sentence,
    in document order, the anaphor's own node excluded."""
    low = anaphor.mention.sentence_index - cfg.window_sentences
    s = anaphor.mention.sentence_index
    return [m for m in mentions
            if low <= m.sentence_index <= s
            and m.node.id != anaphor.mention.node.id]


def _judge(anaphor, m, reflexive_nodes):
    """Filter verdict for one anaphor/candidate pair."""
    a_node = anaphor.mention.node
    if any(anc.id == m.node.id for anc in ancestors(a_node)):
        # a phrase dominating the anaphor can never be its antecedent
        return binding.FilterVerdict(False, "DOM")
    same = m.sentence_index == anaphor.mention.sentence_index
    if anaphor.kind.variant == "pronoun":
        if same and m.node.id not in reflexive_nodes:
            return binding.syntactic_filter(anaphor, m)
        if binding.morphological_filter(anaphor.mention.agreement,
                                        m.agreement):
            return binding.FilterVerdict(True)
        return binding.FilterVerdict(False, "MORPH")
    # reflexives and reciprocals need a same-sentence binder
    if not binding.morphological_filter(anaphor.mention.agreement,
                                        m.agreement):
        return binding.FilterVerdict(False, "MORPH")
    if not same:
        return binding.FilterVerdict(False)
    return binding.anaphor_binding(anaphor, m)


def _sentence_offsets(doc):
    out = []
    total = 0
    for toks in doc.tokens:
        out.append(total)
        total += len(toks)
    return out


def resolve_document(doc, lex, cfg=None):
    """Resolve every anaphor of the document, in document order."""
    cfg = cfg or ResolverConfig()
    if cfg.gendered_noun_lexicon and not lex.gendered_nouns:
        lex = replace(lex, gendered_nouns=dict(GENDERED_NOUNS))
    mentions = extract_noun_phrases(doc, lex)
    anaphors = extract_anaphors(doc, lex)
    mention_order = {m.node.id: i for i, m in enumerate(mentions)}
    pleonastic_nodes = {a.mention.node.id for a in anaphors if a.pleonastic}
    reflexive_nodes = {a.mention.node.id for a in anaphors
                       if a.kind.variant in ("reflexive", "reciprocal")}
    offsets = _sentence_offsets(doc)
    classes = {}
    next_class_id = 0
    records = []

    for anaphor in anaphors:
        if anaphor.pleonastic:
            records.append(ResolutionRecord(anaphor, PLEONASTIC))
            continue
        a_start = offsets[anaphor.mention.sentence_index] \
            + anaphor.mention.span[0]
        considered = []
        survivors = []
        for m in candidate_set(anaphor, mentions, cfg):
            if m.node.id in pleonastic_nodes:
                continue
            verdict = _judge(anaphor, m, reflexive_nodes)
            if not verdict.admissible:
                considered.append((m, verdict, None))
                continue
            cls = classes.get(m.node.id)
            factors = cls.factors if cls is not None else m.factors
            w = weight_of(factors, anaphor.mention.sentence_index,
                          cfg.weights)
            considered.append((m, verdict, w))
            m_end = offsets[m.sentence_index] + m.span[1]
            distance = abs(a_start - m_end)
            follows = m_end >= a_start
            survivors.append(((-w, distance, follows,
                               mention_order[m.node.id]), m))
        if not survivors:
            records.append(ResolutionRecord(
                anaphor, UNRESOLVED, candidates_considered=considered))
            continue
        _, winner = min(survivors, key=lambda sv: sv[0])
        cls = classes.get(winner.node.id)
        if cls is None:
            cls = EquivalenceClass(
                next_class_id, [winner],
                SalienceFactorSet(winner.factors.factors,
                                  winner.sentence_index))
            next_class_id += 1
            classes[winner.node.id] = cls
        if all(m.node.id != anaphor.mention.node.id for m in cls.members):
            merge_chain(cls, anaphor.mention)
        else:
            cls.factors = SalienceFactorSet(
                cls.factors.factors | anaphor.mention.factors.factors,
                anaphor.mention.sentence_index)
        classes[anaphor.mention.node.id] = cls
        records.append(ResolutionRecord(
            anaphor, RESOLVED, antecedent=winner, chain_id=cls.id,
            candidates_considered=considered))
    return records


# ---------------------------------------------------------------------------
# output renderers


def _span_label(doc, mention):
    s = mention.sentence_index
    first, last = mention.span
    return '%d:%d-%d "%s"' % (s, first, last, mention.text())


def render_pairs(records, doc):
    """One line per anaphor:
    `<sent>:<start>-<end> "text" <- <sent>:<start>-<end> "text"` for a
    resolved pair, with NULL / PLEONASTIC tails otherwise."""
    lines = []
    for r in records:
        head = _span_label(doc, r.anaphor.mention)
        if r.status == RESOLVED:
            lines.append("%s <- %s" % (head, _span_label(doc, r.antecedent)))
        elif r.status == PLEONASTIC:
            lines.append("%s PLEONASTIC" % head)
        else:
            lines.append("%s NULL" % head)
    return "\n".join(lines) + "\n" if lines else ""


def render_annotated(records, doc):
    """The token stream with a marker after each anaphor: `[=text]` for
    its antecedent, `[=?]` when unresolved, `[pleo]` when pleonastic."""
    markers = {}
    for r in records:
        m = r.anaphor.mention
        if r.status == RESOLVED:
            tag = "[=%s]" % r.antecedent.text()
        elif r.status == PLEONASTIC:
            tag = "[pleo]"
        else:
            tag = "[=?]"
        markers.setdefault((m.sentence_index, m.span[1]), []).append(tag)
    lines = []
    for s, toks in enumerate(doc.tokens):
        parts = []
        for i, tok in enumerate(toks):
            parts.append(tok)
            parts.extend(markers.get((s, i), ()))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def _replacement_tokens(record, doc):
    ant = record.antecedent
    root = doc.sentences[ant.sentence_index]
    toks = [l.token for l in doc.leaves(root)
            if ant.span[0] <= l.span[0] <= ant.span[1]
            and l.label not in PUNCT_TAGS]
    kind = record.anaphor.kind
    if kind.variant == "pronoun" and kind.case == "possessive":
        if not binding.node_is_pronoun(ant.node) \
                and toks and toks[-1] not in ("'s", "'"):
            toks = toks + ["'s"]
    return toks


def render_substituted(records, doc):
    """The token stream with each resolved anaphor replaced by its
    antecedent's tokens (possessive anaphors gain a trailing 's);
    unresolved and pleonastic anaphors stay in place."""
    by_sentence = {}
    for r in records:
        if r.status != RESOLVED:
            continue
        m = r.anaphor.mention
        by_sentence.setdefault(m.sentence_index, []).append(
            (m.span, _replacement_tokens(r, doc)))
    lines = []
    for s, toks in enumerate(doc.tokens):
        repl = sorted(by_sentence.get(s, ()))
        out = []
        i = 0
        while i < len(toks):
            hit = next((r for r in repl if r[0][0] == i), None)
            if hit is not None:
                out.extend(hit[1])
                i = hit[0][1] + 1
            else:
                out.append(toks[i])
                i += 1
        lines.append(detokenize(out))
    return "\n".join(lines) + "\n"


def render_diagnostics(records, doc):
    """Per-anaphor candidate table (for the error stream)."""
    lines = []
    for r in records:
        lines.append("anaphor %s status=%s%s" % (
            _span_label(doc, r.anaphor.mention), r.status,
            "" if r.chain_id is None else " chain=%d" % r.chain_id))
        for m, verdict, w in r.candidates_considered:
            lines.append("  candidate %s admissible=%s rule=%s weight=%s" % (
                _span_label(doc, m), verdict.admissible,
                verdict.rule_fired or "-", "-" if w is None else w))
    return "\n".join(lines) + "\n" if lines else ""
