"""Reader and query layer for bracketed constituency parse trees.

Input is Treebank-style bracketed notation, one or more trees per line or
one tree spread over several lines; tree boundaries are determined solely
by parenthesis balance.  Documents are immutable once built and all
queries here are pure, so they are safe to share between readers.
"""

from dataclasses import dataclass, field

# Tags whose leaves are excluded when rendering the surface text of a
# noun phrase (the leaves stay in the tree and keep their token indices).
PUNCT_TAGS = frozenset({".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#"})

# Closing tokens that attach to the preceding token when detokenizing.
_CLOSING_TOKENS = frozenset({".", ",", ":", ";", "!", "?", ")", "]", "}",
                             "''", "'", "n't", "%"})
_OPENING_TOKENS = frozenset({"(", "[", "{", "``"})


class TreeParseError(ValueError):
    """Malformed bracketed input; `offset` is a character offset."""

    def __init__(self, message, offset):
        super().__init__("%s at offset %d" % (message, offset))
        self.offset = offset


@dataclass
class TreeNode:
    """One constituent or token of a parse tree.

    A node carries a token iff it has no children (leaf = lexical item).
    `span` is the inclusive (first, last) token index range within the
    node's sentence; `children` and `parent` are node ids resolved
    through the owning Document.
    """

    id: int
    label: str
    token: str | None
    children: list[int]
    parent: int | None
    span: tuple[int, int]
    sentence_index: int
    doc: "Document | None" = field(default=None, repr=False, compare=False)

    @property
    def is_leaf(self):
        return self.token is not None

    def child_nodes(self):
        return [self.doc.nodes[i] for i in self.children]

    def parent_node(self):
        return None if self.parent is None else self.doc.nodes[self.parent]


@dataclass
class Document:
    """An indexed collection of parsed sentences.

    `sentences` holds one root node per sentence, `nodes` is the id-indexed
    node table (ids are assigned in reading order and are document-wide),
    and `tokens` keeps the ordered token list of each sentence.
    """

    sentences: list[TreeNode]
    nodes: list[TreeNode]
    tokens: list[list[str]]

    def leaves(self, node):
        """All leaf nodes under `node`, left to right."""
        if node.is_leaf:
            return [node]
        out = []
        stack = [node]
        while stack:
            n = stack.pop()
            if n.is_leaf:
                out.append(n)
            else:
                stack.extend(reversed(n.child_nodes()))
        return out

    def span_tokens(self, sentence_index, span):
        first, last = span
        return self.tokens[sentence_index][first:last + 1]

    def text(self, node, span=None):
        """Surface text of `node` (or an explicit span), punctuation skipped."""
        if span is None:
            span = node.span
        first, last = span
        words = [leaf.token for leaf in self.leaves(
            self.sentences[node.sentence_index])
            if first <= leaf.span[0] <= last and leaf.label not in PUNCT_TAGS]
        return " ".join(words)

    def sentence_count(self):
        return len(self.sentences)


def _tokenize(text):
    """Yield (kind, value, offset) with kind in {'(', ')', 'atom'}."""
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            yield ch, ch, i
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield "atom", text[i:j], i
            i = j


def read_trees(text):
    """Parse bracketed trees into a Document.

    Raises TreeParseError with a character offset on unbalanced
    parentheses, stray tokens outside trees, empty input, or leaves
    that carry both a token and children.
    """
    toks = list(_tokenize(text))
    doc = Document(sentences=[], nodes=[], tokens=[])
    pos = 0

    def parse_node(at, sentence_index, counter):
        # toks[at] is the opening paren of this node
        open_off = toks[at][2]
        at += 1
        if at >= len(toks):
            raise TreeParseError("unbalanced parentheses", len(text))
        label = ""
        if toks[at][0] == "atom":
            label = toks[at][1]
            at += 1
        children = []
        token = None
        while at < len(toks) and toks[at][0] != ")":
            kind, value, off = toks[at]
            if kind == "atom":
                if children:
                    raise TreeParseError(
                        "structural error: token after child nodes", off)
                if token is not None:
                    raise TreeParseError(
                        "structural error: multiple tokens under one tag", off)
                token = value
                at += 1
            else:  # '('
                if token is not None:
                    raise TreeParseError(
                        "structural error: leaf with children", off)
                at, child = parse_node(at, sentence_index, counter)
                children.append(child)
        if at >= len(toks):
            raise TreeParseError("unbalanced parentheses", len(text))
        at += 1  # consume ')'
        if token is None and not children:
            raise TreeParseError("empty node", open_off)
        if token is not None:
            span = (counter[0], counter[0])
            counter[0] += 1
        else:
            span = (children[0].span[0], children[-1].span[1])
        node = TreeNode(id=len(doc.nodes), label=label, token=token,
                        children=[c.id for c in children], parent=None,
                        span=span, sentence_index=sentence_index, doc=doc)
        doc.nodes.append(node)
        for c in children:
            c.parent = node.id
        return at, node

    while pos < len(toks):
        kind, value, off = toks[pos]
        if kind != "(":
            raise TreeParseError("expected '(' but found %r" % value, off)
        counter = [0]
        pos, root = parse_node(pos, len(doc.sentences), counter)
        # Normalize parser wrapper roots: an unlabeled single-child root
        # stands for the wrapped sentence node.
        if root.label == "" and len(root.children) == 1:
            root = doc.nodes[root.children[0]]
            root.parent = None
        elif root.label == "":
            root.label = "TOP"
        doc.sentences.append(root)
        doc.tokens.append([leaf.token for leaf in doc.leaves(root)])
    if not doc.sentences:
        raise TreeParseError("empty input", 0)
    return doc


def render_node(node):
    """Bracketed notation for one node."""
    if node.is_leaf:
        return "(%s %s)" % (node.label, node.token)
    return "(%s %s)" % (node.label,
                        " ".join(render_node(c) for c in node.child_nodes()))


def render_trees(doc):
    """Bracketed notation for the whole document, one sentence per line."""
    return "\n".join(render_node(root) for root in doc.sentences) + "\n"


def ancestors(n):
    """Parent chain of `n`, from immediate parent up to the sentence root."""
    out = []
    cur = n.parent_node()
    while cur is not None:
        out.append(cur)
        cur = cur.parent_node()
    return out


def siblings(n):
    p = n.parent_node()
    return [] if p is None else p.child_nodes()


def following_sibling(n, label):
    """First sibling after `n` whose label matches, or None."""
    after = False
    for s in siblings(n):
        if s.id == n.id:
            after = True
        elif after and s.label == label:
            return s
    return None


def preceding_sibling(n, label):
    """Nearest sibling before `n` whose label matches, or None."""
    best = None
    for s in siblings(n):
        if s.id == n.id:
            break
        if s.label == label:
            best = s
    return best


def child_index(n):
    """Position of `n` among its parent's children, or None for a root."""
    p = n.parent_node()
    if p is None:
        return None
    return p.children.index(n.id)


def detokenize(tokens):
    """Join a token stream into readable text (clitics and closing
    punctuation attach to the preceding token)."""
    out = []
    for tok in tokens:
        attach = (tok in _CLOSING_TOKENS or tok.startswith("'")) and out
        if out and not attach and out[-1] not in _OPENING_TOKENS:
            out.append(" ")
        out.append(tok)
    return "".join(out)
