"""Structural predicates and coreference filters over parse trees.

The predicates recover head-argument and head-adjunct relations from raw
phrase structure: an NP is an argument of the VP it precedes (agent) or
sits under (object), an adjunct of a VP it reaches through a PP, and a
dependent of an NP it reaches through a PP or a possessive.  Auxiliary
verbs produce nested VPs, so a maximal chain of directly nested VPs is
treated as a single head region throughout.

On top of the predicates sit the two pair filters (the six-rule rejection
filter for third-person pronouns and the five-rule admission algorithm
for reflexives/reciprocals), the agreement compatibility check, and the
pleonastic-"it" pattern matcher.
"""

from dataclasses import dataclass

from .treebank import PUNCT_TAGS, following_sibling, preceding_sibling

NP_LABEL = "NP"
VP_LABEL = "VP"
PP_LABEL = "PP"

# Token sets for the pleonastic patterns.  Word matching is
# case-insensitive; the modal-adjective and cognitive-verb lists come
# from the loaded lexicons.
_COPULA = frozenset({"is", "was", "'s", "be", "been", "being", "are",
                     "were"})
_MODAL_AUX = frozenset({"may", "might", "would", "could", "can", "will",
                        "shall", "should", "must", "wo"})
_NEGATION = frozenset({"not", "n't", "never"})
_MAKE_FIND = frozenset({"make", "makes", "made", "making",
                        "find", "finds", "found", "finding"})
_SEEM_VERBS = frozenset({"seem", "seems", "seemed", "appear", "appears",
                         "appeared", "mean", "means", "meant",
                         "follow", "follows", "followed"})
_FOR_PHRASE_WINDOW = 8  # max tokens scanned for "to" after "for NP"


@dataclass
class FilterVerdict:
    """Outcome of a pair filter; `rule_fired` names the deciding rule
    (rejection rule for the pronoun filter, admission rule for the
    binding algorithm, "MORPH" for a bare agreement rejection)."""

    admissible: bool
    rule_fired: str | None = None


# ---------------------------------------------------------------------------
# head regions


def vp_chain_region(vp):
    """Ids of every VP in the maximal chain of directly nested VPs
    around `vp` (auxiliary structure collapses into one head region)."""
    top = vp
    while top.parent_node() is not None and top.parent_node().label == VP_LABEL:
        top = top.parent_node()
    region = set()
    stack = [top]
    while stack:
        v = stack.pop()
        region.add(v.id)
        for c in v.child_nodes():
            if c.label == VP_LABEL:
                stack.append(c)
    return region


def _is_possessor_child(node):
    """True when `node` sits in determiner position inside its parent NP:
    it carries a POS child, or is immediately followed by a POS sibling."""
    parent = node.parent_node()
    if parent is None or parent.label != NP_LABEL:
        return False
    if not node.is_leaf and any(
            c.label == "POS" for c in node.child_nodes()):
        return True
    sibs = parent.child_nodes()
    idx = parent.children.index(node.id)
    return idx + 1 < len(sibs) and sibs[idx + 1].label == "POS"


def argument_heads(node):
    """Ids of the VPs `node` is an argument of: the VP region it is a
    direct child of, the region of its following sibling VP (agent), and
    the agent region of a conjoined parent NP."""
    heads = set()
    parent = node.parent_node()
    if parent is not None and parent.label == VP_LABEL:
        heads |= vp_chain_region(parent)
    w = following_sibling(node, VP_LABEL)
    if w is not None:
        heads |= vp_chain_region(w)
    if (parent is not None and parent.label == NP_LABEL
            and any(c.label == "CC" for c in parent.child_nodes())):
        w = following_sibling(parent, VP_LABEL)
        if w is not None:
            heads |= vp_chain_region(w)
    return heads


def adjunct_heads(node):
    """Ids of the VPs `node` is an adjunct of: the region of a VP
    reached as child-of-PP-child-of-VP."""
    parent = node.parent_node()
    if parent is None or parent.label != PP_LABEL:
        return set()
    grand = parent.parent_node()
    if grand is None or grand.label != VP_LABEL:
        return set()
    return vp_chain_region(grand)


def np_containers(node):
    """Ids of the NPs that immediately contain `node`: the NP above a
    PP attachment, or the NP `node` is a determiner of (a possessor
    phrase or a PRP$ in determiner position)."""
    out = set()
    parent = node.parent_node()
    if parent is not None and parent.label == PP_LABEL:
        grand = parent.parent_node()
        if grand is not None and grand.label == NP_LABEL:
            out.add(grand.id)
    q = determiner_of(node)
    if q is not None:
        out.add(q.id)
    return out


def node_is_pronoun(node):
    """A mention counts as a pronoun when its sole lexical leaf carries
    a pronoun tag."""
    doc = node.doc
    leaves = [l for l in doc.leaves(node) if l.label not in ("POS",)]
    lexical = [l for l in leaves if not _is_punct(l)]
    return len(lexical) == 1 and lexical[0].label in ("PRP", "PRP$")


def _is_punct(leaf):
    return leaf.label in PUNCT_TAGS


def slot_rank(node):
    """Coarse argument-slot ranking used for "fills a higher slot":
    subject > direct object > indirect object > everything else."""
    parent = node.parent_node()
    if following_sibling(node, VP_LABEL) is not None:
        return 3
    if (parent is not None and parent.label == NP_LABEL
            and any(c.label == "CC" for c in parent.child_nodes())
            and following_sibling(parent, VP_LABEL) is not None):
        return 3
    if parent is not None and parent.label == VP_LABEL:
        np_children = [c for c in parent.child_nodes()
                       if c.label == NP_LABEL]
        pos = [i for i, c in enumerate(np_children) if c.id == node.id]
        if pos:
            if len(np_children) == 1 or pos[0] == 1:
                return 2
            if pos[0] == 0:
                return 1
    return 0


# ---------------------------------------------------------------------------
# domain predicates


def in_argument_domain(p, n):
    """True iff `p` and `n` are arguments of the same head region.
    Symmetric by construction."""
    if p.id == n.id or p.sentence_index != n.sentence_index:
        return False
    return bool(argument_heads(p) & argument_heads(n))


def in_adjunct_domain(p, n):
    """True iff `p` is the object of a preposition adjoined to a VP and
    `n` is a child or sibling of that VP region."""
    if p.id == n.id or p.sentence_index != n.sentence_index:
        return False
    region = adjunct_heads(p)
    if not region:
        return False
    doc = p.doc
    for vid in region:
        v = doc.nodes[vid]
        if n.parent == v.id:
            return True
        if v.parent is not None and n.parent == v.parent and n.id != v.id:
            return True
    return False


def in_np_domain(p, n):
    """True iff `p` hangs off a PP whose nearest preceding NP sibling is
    a possessive phrase built on `n` (`n` itself, or a child of it that
    precedes the POS marker)."""
    if p.id == n.id or p.sentence_index != n.sentence_index:
        return False
    parent = p.parent_node()
    if parent is None or parent.label != PP_LABEL:
        return False
    w = preceding_sibling(parent, NP_LABEL)
    if w is None:
        return False
    w_children = w.child_nodes()
    has_pos = any(c.label == "POS" for c in w_children)
    if n.id == w.id and has_pos:
        return True
    if n.parent == w.id:
        idx = w.children.index(n.id)
        return any(c.label == "POS" for c in w_children[idx + 1:])
    return False


def contained_in(p, q):
    """Transitive containment: `p` is an argument/adjunct/possessive
    dependent of `q`, possibly through intermediate phrases (any non-NP
    phrase is contained in its parent)."""
    if p.sentence_index != q.sentence_index or p.id == q.id:
        return False
    doc = p.doc
    seen = set()
    stack = list(_immediate_containers(p))
    while stack:
        rid = stack.pop()
        if rid in seen:
            continue
        seen.add(rid)
        if rid == q.id:
            return True
        r = doc.nodes[rid]
        if r.label == NP_LABEL:
            stack.extend(_immediate_containers(r))
        elif r.parent is not None:
            stack.append(r.parent)
    return False


def _immediate_containers(node):
    return argument_heads(node) | adjunct_heads(node) | np_containers(node)


def determiner_of(node):
    """The NP that `node` is a determiner of (a PRP$ in determiner
    position or a possessor phrase), or None."""
    parent = node.parent_node()
    if parent is None or parent.label != NP_LABEL:
        return None
    if node.label == "PRP$" or _is_possessor_child(node):
        return parent
    return None


def _has_noun_determiner(q):
    """True when NP `q` carries a possessive determiner (a possessor NP
    or a PRP$); plain articles do not count."""
    for c in q.child_nodes():
        if c.label == "PRP$" or _is_possessor_child(c):
            return True
    return False


def _sentence_nps(node):
    doc = node.doc
    root = doc.sentences[node.sentence_index]
    out = []
    stack = [root]
    while stack:
        n = stack.pop()
        if n.label == NP_LABEL:
            out.append(n)
        stack.extend(reversed(n.child_nodes()))
    return out


# ---------------------------------------------------------------------------
# pair filters


def morphological_filter(a, b):
    """Agreement compatibility of two feature sets: incompatible only
    when some feature has two known, differing values ("unknown" agrees
    with anything)."""
    for x, y in ((a.number, b.number), (a.person, b.person),
                 (a.gender, b.gender), (a.animacy, b.animacy)):
        if x != "unknown" and y != "unknown" and x != y:
            return False
    return True


def syntactic_filter(p, n):
    """Intrasentential rejection filter for a third-person pronoun `p`
    against a non-reflexive, non-reciprocal candidate mention `n`.

    Returns the first rejection rule that fires:
      SF-1 agreement clash; SF-2 argument domain; SF-3 adjunct domain;
      SF-4 candidate contained in the pronoun's argument head (candidate
      not itself a pronoun); SF-5 NP domain; SF-6 candidate contained in
      the NP the pronoun is a determiner of.
    """
    p_node = p.mention.node
    n_node = n.node
    if not morphological_filter(p.mention.agreement, n.agreement):
        return FilterVerdict(False, "SF-1")
    if in_argument_domain(p_node, n_node):
        return FilterVerdict(False, "SF-2")
    if in_adjunct_domain(p_node, n_node):
        return FilterVerdict(False, "SF-3")
    if not node_is_pronoun(n_node):
        for hid in argument_heads(p_node):
            if contained_in(n_node, p_node.doc.nodes[hid]):
                return FilterVerdict(False, "SF-4")
    if in_np_domain(p_node, n_node):
        return FilterVerdict(False, "SF-5")
    q = determiner_of(p_node)
    if q is not None and contained_in(n_node, q):
        return FilterVerdict(False, "SF-6")
    return FilterVerdict(True)


def anaphor_binding(a, n):
    """Intrasentential admission algorithm for a reflexive or reciprocal
    `a` against candidate mention `n` (agreement is checked upstream).

    Returns the first admission rule that holds:
      AB-1 same argument domain with `n` in a higher slot; AB-2 adjunct
      domain; AB-3 NP domain; AB-4 `a` attached to a determinerless NP
      that shares a domain with `n`; AB-5 `a` is a possessive determiner
      of an NP that shares a domain with `n`.
    """
    a_node = a.mention.node
    n_node = n.node
    if in_argument_domain(a_node, n_node) and \
            slot_rank(n_node) > slot_rank(a_node):
        return FilterVerdict(True, "AB-1")
    if in_adjunct_domain(a_node, n_node):
        return FilterVerdict(True, "AB-2")
    if in_np_domain(a_node, n_node):
        return FilterVerdict(True, "AB-3")
    if argument_heads(n_node):
        parent = a_node.parent_node()
        for q in _sentence_nps(a_node):
            if q.id in (a_node.id, n_node.id) or _has_noun_determiner(q):
                continue
            if not (in_argument_domain(q, n_node)
                    or in_adjunct_domain(q, n_node)):
                continue
            if a_node.parent == q.id:
                return FilterVerdict(True, "AB-4")
            if (parent is not None and parent.label == PP_LABEL
                    and parent.parent == q.id):
                return FilterVerdict(True, "AB-4")
    q = determiner_of(a_node)
    if q is not None:
        if in_argument_domain(q, n_node) and \
                slot_rank(n_node) > slot_rank(q):
            return FilterVerdict(True, "AB-5")
        if in_adjunct_domain(q, n_node):
            return FilterVerdict(True, "AB-5")
    return FilterVerdict(False)


# ---------------------------------------------------------------------------
# pleonastic pronouns


def _clause_tokens(node):
    """Lowercased sentence tokens plus the position of `node`'s first
    token.  All patterns are anchored at the pronoun, so the sentence is
    the matching clause; small clauses ("makes it easy to ...") keep
    their left context visible this way."""
    doc = node.doc
    toks = [t.lower() for t in doc.tokens[node.sentence_index]]
    return toks, node.span[0]


def _to_follows(tokens, start):
    """Accept a direct "to", or "for NP ... to" within a short window."""
    if start < len(tokens) and tokens[start] == "to":
        return True
    if start < len(tokens) and tokens[start] == "for":
        return "to" in tokens[start + 1:start + 1 + _FOR_PHRASE_WINDOW]
    return False


def pleonastic_it(node, lex):
    """Pattern match around one "it" leaf; `node` is its mention node."""
    toks, i = _clause_tokens(node)
    if i < 0 or i >= len(toks) or toks[i] != "it":
        return False

    # "NP makes / finds it Modaladj (for NP) to VP"
    if i > 0 and toks[i - 1] in _MAKE_FIND:
        if i + 1 < len(toks) and toks[i + 1] in lex.modal_adjectives \
                and _to_follows(toks, i + 2):
            return True

    j = i + 1
    if j < len(toks) and toks[j] in _MODAL_AUX:
        j += 1
    if j < len(toks) and toks[j] in _NEGATION:
        j += 1
    if j >= len(toks):
        return False

    # "it seems / appears / means / follows (that) S"
    if toks[j] in _SEEM_VERBS:
        return True
    if toks[j] not in _COPULA:
        return False
    j += 1
    if j < len(toks) and toks[j] in _NEGATION:
        j += 1
    if j >= len(toks):
        return False
    w = toks[j]
    rest = j + 1

    # "it is Modaladj that S" / "it is Modaladj (for NP) to VP"
    if w in lex.modal_adjectives:
        if rest < len(toks) and toks[rest] == "that":
            return True
        if _to_follows(toks, rest):
            return True
    # "it is Cogv-ed that S"
    if w in lex.cognitive_verbs:
        if rest < len(toks) and toks[rest] == "that":
            return True
    # "it is time to VP"
    if w == "time" and rest < len(toks) and toks[rest] == "to":
        return True
    # "it is thanks to NP that S"
    if w == "thanks" and rest < len(toks) and toks[rest] == "to" \
            and "that" in toks[rest + 1:]:
        return True
    return False


def detect_pleonastic(it, lex):
    """True iff the anaphor is a pleonastic "it" per the surface
    patterns; always False for any other token."""
    node = it.mention.node
    doc = node.doc
    lexical = [l for l in doc.leaves(node) if not _is_punct(l)]
    if len(lexical) != 1 or lexical[0].token.lower() != "it":
        return False
    return pleonastic_it(node, lex)
