"""Noun-phrase and anaphor extraction with agreement annotation.

Extraction produces the two lists the resolver pairs up: every noun
phrase in the document, and every resolvable anaphor (third-person
pronouns in nominative, accusative or possessive case, reflexives, and
the two-token reciprocals "each other" / "one another").  Each mention
carries agreement features, grammatical roles read off the tree, and
the salience factors those roles license.
"""

from dataclasses import dataclass, field

from . import binding
from .salience import SalienceFactorSet, factors_for_roles
from .treebank import (PUNCT_TAGS, ancestors, child_index,
                       following_sibling, preceding_sibling)

NOMINAL_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS", "PRP"})

# surface form -> (number, person, gender, animacy)
PRONOUN_FEATURES = {
    "he": ("singular", "third", "masculine", "animate"),
    "him": ("singular", "third", "masculine", "animate"),
    "his": ("singular", "third", "masculine", "animate"),
    "himself": ("singular", "third", "masculine", "animate"),
    "she": ("singular", "third", "feminine", "animate"),
    "her": ("singular", "third", "feminine", "animate"),
    "hers": ("singular", "third", "feminine", "animate"),
    "herself": ("singular", "third", "feminine", "animate"),
    "it": ("singular", "third", "unknown", "inanimate"),
    "its": ("singular", "third", "unknown", "inanimate"),
    "itself": ("singular", "third", "unknown", "inanimate"),
    "they": ("plural", "third", "unknown", "unknown"),
    "them": ("plural", "third", "unknown", "unknown"),
    "their": ("plural", "third", "unknown", "unknown"),
    "theirs": ("plural", "third", "unknown", "unknown"),
    "themselves": ("plural", "third", "unknown", "unknown"),
    "i": ("singular", "first", "unknown", "animate"),
    "me": ("singular", "first", "unknown", "animate"),
    "my": ("singular", "first", "unknown", "animate"),
    "mine": ("singular", "first", "unknown", "animate"),
    "myself": ("singular", "first", "unknown", "animate"),
    "we": ("plural", "first", "unknown", "animate"),
    "us": ("plural", "first", "unknown", "animate"),
    "our": ("plural", "first", "unknown", "animate"),
    "ours": ("plural", "first", "unknown", "animate"),
    "ourselves": ("plural", "first", "unknown", "animate"),
    "you": ("unknown", "second", "unknown", "animate"),
    "your": ("unknown", "second", "unknown", "animate"),
    "yours": ("unknown", "second", "unknown", "animate"),
    "yourself": ("singular", "second", "unknown", "animate"),
    "yourselves": ("plural", "second", "unknown", "animate"),
}

THIRD_PERSON_PRONOUNS = frozenset({
    "he", "him", "his", "she", "her", "hers", "it", "its",
    "they", "them", "their", "theirs"})
THIRD_PERSON_REFLEXIVES = frozenset({
    "himself", "herself", "itself", "themselves"})
RECIPROCAL_PAIRS = frozenset({("each", "other"), ("one", "another")})
RESOLVABLE_SURFACE_FORMS = (THIRD_PERSON_PRONOUNS | THIRD_PERSON_REFLEXIVES
                            | {"each other", "one another"})

_FIRST_PERSON_NOM_ACC = frozenset({"i", "me", "we", "us"})
_SECOND_PERSON_NOM_ACC = frozenset({"you"})


@dataclass
class AgreementFeatures:
    number: str = "unknown"
    person: str = "third"
    gender: str = "unknown"
    animacy: str = "unknown"


@dataclass
class Mention:
    """A noun phrase (or determiner-position pronoun) with its
    agreement features, grammatical roles and local salience factors.
    `span` normally equals the node span; reciprocals narrow it to the
    two reciprocal tokens."""

    node: object
    sentence_index: int
    agreement: AgreementFeatures
    roles: frozenset
    factors: SalienceFactorSet
    span: tuple

    def text(self):
        return self.node.doc.text(self.node, self.span)


@dataclass
class AnaphorKind:
    variant: str                # "pronoun" | "reflexive" | "reciprocal"
    case: str | None = None    # set for third-person pronouns only


@dataclass
class Anaphor:
    mention: Mention
    kind: AnaphorKind
    pleonastic: bool = False


def lexical_leaves(node):
    return [l for l in node.doc.leaves(node) if l.label not in PUNCT_TAGS]


def head_leaf(np):
    """Rightmost direct child with a nominal tag; otherwise the
    rightmost leaf of the phrase."""
    if np.is_leaf:
        return np
    for c in reversed(np.child_nodes()):
        if c.is_leaf and c.label in NOMINAL_TAGS:
            return c
    return np.doc.leaves(np)[-1]


def _vp_verb_tag(vp):
    for c in vp.child_nodes():
        if c.is_leaf and (c.label.startswith("VB") or c.label == "MD"):
            return c.label
    return None


def compute_number(np):
    """Number of a noun phrase: the verb tag when the phrase is the
    agent of a VP (VBZ singular, VBP plural), otherwise the word "and"
    inside a multi-word phrase, otherwise the head tag."""
    w = following_sibling(np, "VP")
    if w is not None:
        tag = _vp_verb_tag(w)
        if tag == "VBZ":
            return "singular"
        if tag == "VBP":
            return "plural"
    words = [l.token.lower() for l in lexical_leaves(np)]
    if len(words) > 1 and "and" in words:
        return "plural"
    head = head_leaf(np)
    if head.label in ("NN", "NNP"):
        return "singular"
    if head.label in ("NNS", "NNPS"):
        return "plural"
    return "unknown"


def compute_person(np):
    """Person defaults to third; a plural phrase containing a first or
    second person nominative/accusative pronoun takes that person, and a
    bare first/second-person pronoun is marked directly."""
    words = [l.token.lower() for l in lexical_leaves(np)]
    if len(words) == 1 and words[0] in PRONOUN_FEATURES:
        return PRONOUN_FEATURES[words[0]][1]
    if compute_number(np) == "plural":
        if any(w in _FIRST_PERSON_NOM_ACC for w in words):
            return "first"
        if any(w in _SECOND_PERSON_NOM_ACC for w in words):
            return "second"
    return "third"


def compute_gender_animacy(np, lex):
    """Gender and animacy from pronoun form or the name lists (head
    token first, then the full phrase string); a name hit also marks the
    phrase animate.  There is no default gender."""
    words = [l.token.lower() for l in lexical_leaves(np)]
    if len(words) == 1 and words[0] in PRONOUN_FEATURES:
        return PRONOUN_FEATURES[words[0]][2], PRONOUN_FEATURES[words[0]][3]
    head = head_leaf(np).token.lower()
    full = " ".join(words)
    for key in (head, full):
        if key in lex.male_names:
            return "masculine", "animate"
        if key in lex.female_names:
            return "feminine", "animate"
    if head in lex.gendered_nouns:
        return lex.gendered_nouns[head], "animate"
    return "unknown", "unknown"


def grammatical_roles(np):
    """The roles licensed by the tree structure: subject (parent is S),
    existential (second VP child next to an expletive-there NP), direct
    object / indirect object (NP children of a VP), head noun (not
    contained in another NP) and non-adverbial (no ADVP ancestor)."""
    roles = set()
    parent = np.parent_node()
    if parent is not None and parent.label == "S":
        roles.add("subject")
    if parent is not None and parent.label == "VP":
        if child_index(np) == 1:
            w = preceding_sibling(parent, "NP")
            if w is not None and not w.is_leaf \
                    and w.child_nodes()[0].label == "EX":
                roles.add("existential")
        np_children = [c for c in parent.child_nodes() if c.label == "NP"]
        pos = [i for i, c in enumerate(np_children) if c.id == np.id]
        if pos:
            if len(np_children) == 1 or pos[0] == 1:
                roles.add("direct_object")
            elif pos[0] == 0:
                roles.add("indirect_object_or_oblique")
    if not any(a.label == "NP" and binding.contained_in(np, a)
               for a in ancestors(np)):
        roles.add("head_noun")
    if not any(a.label == "ADVP" for a in ancestors(np)):
        roles.add("non_adverbial")
    return frozenset(roles)


def _agreement_for(node, lex):
    words = [l.token.lower() for l in lexical_leaves(node)]
    if len(words) == 1 and words[0] in PRONOUN_FEATURES:
        number, person, gender, animacy = PRONOUN_FEATURES[words[0]]
        return AgreementFeatures(number, person, gender, animacy)
    gender, animacy = compute_gender_animacy(node, lex)
    return AgreementFeatures(compute_number(node), compute_person(node),
                             gender, animacy)


def build_mention(node, lex, span=None):
    roles = grammatical_roles(node)
    return Mention(node=node, sentence_index=node.sentence_index,
                   agreement=_agreement_for(node, lex), roles=roles,
                   factors=factors_for_roles(roles, node.sentence_index),
                   span=node.span if span is None else span)


def extract_noun_phrases(doc, lex):
    """One annotated Mention per NP node, in document order."""
    out = []
    for root in doc.sentences:
        stack = [root]
        order = []
        while stack:
            n = stack.pop()
            if n.label == "NP":
                order.append(n)
            stack.extend(reversed(n.child_nodes()))
        out.extend(build_mention(n, lex) for n in order)
    return out


def _pronoun_case(word, tag, roles):
    if tag == "PRP$":
        return "possessive"
    if word in ("his", "hers", "its", "their", "theirs"):
        return "possessive"
    if word in ("he", "she", "they"):
        return "nominative"
    if word in ("him", "them", "her"):
        return "accusative"
    # "it": nominative in subject position, accusative elsewhere
    return "nominative" if "subject" in roles else "accusative"


def _mention_node_for_leaf(leaf):
    """The NP wrapping a lone pronoun, or the leaf itself when the
    pronoun shares its phrase (determiner position)."""
    parent = leaf.parent_node()
    if parent is not None and parent.label == "NP":
        if [l.id for l in lexical_leaves(parent)] == [leaf.id]:
            return parent
    return leaf


def _covering_np(first_leaf, second_leaf):
    cur = first_leaf.parent_node()
    best = None
    while cur is not None:
        if cur.span[0] <= first_leaf.span[0] and \
                cur.span[1] >= second_leaf.span[1]:
            if best is None:
                best = cur
            if cur.label == "NP":
                return cur
        cur = cur.parent_node()
    return best if best is not None else first_leaf


def extract_anaphors(doc, lex):
    """All resolvable anaphors in document order, pleonastic "it"
    occurrences flagged."""
    np_mentions = {m.node.id: m for m in extract_noun_phrases(doc, lex)}
    out = []
    for root in doc.sentences:
        found = []
        leaves = doc.leaves(root)
        in_reciprocal = set()
        for i in range(len(leaves) - 1):
            pair = (leaves[i].token.lower(), leaves[i + 1].token.lower())
            if pair not in RECIPROCAL_PAIRS:
                continue
            node = _covering_np(leaves[i], leaves[i + 1])
            span = (leaves[i].span[0], leaves[i + 1].span[0])
            mention = build_mention(node, lex, span=span)
            mention.agreement = AgreementFeatures(number="plural")
            found.append(Anaphor(mention, AnaphorKind("reciprocal")))
            in_reciprocal.update((leaves[i].id, leaves[i + 1].id))
        for leaf in leaves:
            if leaf.id in in_reciprocal:
                continue
            word = leaf.token.lower()
            if word in THIRD_PERSON_REFLEXIVES:
                variant = "reflexive"
            elif word in THIRD_PERSON_PRONOUNS:
                variant = "pronoun"
            else:
                continue
            node = _mention_node_for_leaf(leaf)
            mention = np_mentions.get(node.id) or build_mention(node, lex)
            if variant == "pronoun":
                kind = AnaphorKind("pronoun",
                                   _pronoun_case(word, leaf.label,
                                                 mention.roles))
            else:
                kind = AnaphorKind(variant)
            pleonastic = word == "it" and binding.pleonastic_it(node, lex)
            found.append(Anaphor(mention, kind, pleonastic))
        found.sort(key=lambda a: a.mention.span[0])
        out.extend(found)
    return out
