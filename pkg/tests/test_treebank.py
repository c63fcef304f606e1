import pytest
from hypothesis import given, strategies as st

from anares.treebank import (TreeParseError, ancestors, detokenize,
                             following_sibling, preceding_sibling,
                             read_trees, render_trees)
from gold_examples import FIGURE_TREE


def test_reads_auxiliary_chain_sentence():
    doc = read_trees(FIGURE_TREE)
    assert doc.sentence_count() == 1
    assert doc.tokens[0] == ["He", "'ll", "work", "at", "the", "factory",
                             "."]
    nps = [n for n in doc.nodes if n.label == "NP"]
    assert len(nps) == 2


def test_reads_minimal_tree():
    doc = read_trees("(X (Y a))")
    assert doc.sentence_count() == 1
    assert doc.tokens == [["a"]]


def test_unbalanced_input_reports_offset():
    text = "(S (NP (PRP He)"
    with pytest.raises(TreeParseError) as err:
        read_trees(text)
    assert "unbalanced" in str(err.value)
    assert err.value.offset == len(text)


def test_stray_close_paren_reports_offset():
    with pytest.raises(TreeParseError) as err:
        read_trees("(X (Y a)))")
    assert err.value.offset == 9


def test_empty_input_is_an_error():
    with pytest.raises(TreeParseError):
        read_trees("   \n ")


def test_leaf_with_children_is_structural_error():
    with pytest.raises(TreeParseError) as err:
        read_trees("(S (NP (PRP He (X y))))")
    assert "leaf with children" in str(err.value)


def test_multiple_trees_per_line_and_across_lines():
    doc = read_trees("(S (NP (PRP He)) (VP (VBD left))) (S (NP (PRP She))\n"
                     "(VP (VBD\nstayed)))")
    assert doc.sentence_count() == 2
    assert doc.tokens == [["He", "left"], ["She", "stayed"]]
    assert all(n.sentence_index == i
               for i, root in enumerate(doc.sentences)
               for n in doc.leaves(root))


def test_unlabeled_wrapper_root_is_unwrapped():
    doc = read_trees("( (S (NP (PRP He)) (VP (VBD left))))")
    assert doc.sentences[0].label == "S"
    assert doc.sentences[0].parent is None


def test_special_escaped_tokens_survive():
    doc = read_trees("(S (NP (-LRB- -LRB-) (NNP Acme) (-RRB- -RRB-)) "
                     "(VP (VBD grew)))")
    assert doc.tokens[0] == ["-LRB-", "Acme", "-RRB-", "grew"]
    np = next(n for n in doc.nodes if n.label == "NP")
    assert doc.text(np) == "Acme"  # bracket escapes render as punctuation


def test_following_sibling():
    doc = read_trees("(S (NP (PRP He)) (VP (VBD left)))")
    np = next(n for n in doc.nodes if n.label == "NP")
    vp = next(n for n in doc.nodes if n.label == "VP")
    assert following_sibling(np, "VP").id == vp.id
    assert following_sibling(vp, "NP") is None


def test_following_sibling_skips_intervening_labels():
    doc = read_trees("(S (NP (PRP He)) (ADVP (RB quickly)) "
                     "(VP (VBD left)))")
    np = next(n for n in doc.nodes if n.label == "NP")
    vp = next(n for n in doc.nodes if n.label == "VP")
    assert following_sibling(np, "VP").id == vp.id


def test_preceding_sibling_prefers_nearest():
    doc = read_trees("(NP (NP (NN a)) (NP (NN b)) (PP (IN of)))")
    pp = next(n for n in doc.nodes if n.label == "PP")
    got = preceding_sibling(pp, "NP")
    assert doc.text(got) == "b"
    first_np = doc.sentences[0].child_nodes()[0]
    assert preceding_sibling(first_np, "NP") is None


def test_preceding_sibling_possessive_structure():
    doc = read_trees("(S (NP (NP (NNP John) (POS 's)) (NN portrait) "
                     "(PP (IN of) (NP (PRP him)))))")
    pp = next(n for n in doc.nodes if n.label == "PP")
    got = preceding_sibling(pp, "NP")
    assert doc.text(got) == "John 's"


def test_ancestors_on_figure_tree():
    doc = read_trees(FIGURE_TREE)
    root = doc.sentences[0]
    assert ancestors(root) == []
    he = next(n for n in doc.nodes if n.token == "He")
    assert [a.label for a in ancestors(he)] == ["NP", "S", "S1"]
    factory = next(n for n in doc.nodes if n.token == "factory")
    assert [a.label for a in ancestors(factory)] == \
        ["NP", "PP", "VP", "VP", "S", "S1"]


def test_round_trip_is_structurally_identical(corpus_doc):
    rendered = render_trees(corpus_doc)
    again = read_trees(rendered)
    assert render_trees(again) == rendered
    assert again.tokens == corpus_doc.tokens
    assert [n.label for n in again.nodes] == \
        [n.label for n in corpus_doc.nodes]


def test_ancestor_spans_cover_descendants(corpus_doc):
    for n in corpus_doc.nodes:
        for a in ancestors(n):
            assert a.span[0] <= n.span[0] and n.span[1] <= a.span[1]


def test_sibling_queries_share_parent(corpus_doc):
    for n in corpus_doc.nodes:
        for label in ("NP", "VP", "PP"):
            for got in (following_sibling(n, label),
                        preceding_sibling(n, label)):
                if got is not None:
                    assert got.id != n.id
                    assert got.parent == n.parent


_LABELS = st.sampled_from(["S", "NP", "VP", "PP", "ADJP"])
_TAGS = st.sampled_from(["NN", "VBD", "DT", "IN", "PRP"])
_WORDS = st.sampled_from(["cat", "saw", "the", "near", "it", "x1"])


@st.composite
def _tree_text(draw, depth=0):
    if depth >= 3 or draw(st.booleans()):
        return "(%s %s)" % (draw(_TAGS), draw(_WORDS))
    kids = draw(st.lists(_tree_text(depth=depth + 1), min_size=1,
                         max_size=3))
    return "(%s %s)" % (draw(_LABELS), " ".join(kids))


@given(_tree_text())
def test_round_trip_property(text):
    doc = read_trees(text)
    assert render_trees(doc).strip() == text
    again = read_trees(render_trees(doc))
    assert again.tokens == doc.tokens


def test_detokenize():
    assert detokenize(["He", "'ll", "work", "."]) == "He'll work."
    assert detokenize(["John", "'s", "car", ",", "too"]) == "John's car, too"
