"""anares: salience-based resolution of third-person pronouns and
lexical anaphors over bracketed constituency parse trees."""

from .lexicon import Lexicons, load_lexicons
from .mentions import (AgreementFeatures, Anaphor, AnaphorKind, Mention,
                       extract_anaphors, extract_noun_phrases)
from .resolver import (ResolutionRecord, ResolverConfig, render_annotated,
                       render_pairs, render_substituted, resolve_document)
from .salience import SalienceFactorSet, weight_of
from .splitter import SplitConfig, split_sentences
from .treebank import Document, TreeNode, TreeParseError, read_trees

__version__ = "0.1.0"

__all__ = [
    "AgreementFeatures", "Anaphor", "AnaphorKind", "Document", "Lexicons",
    "Mention", "ResolutionRecord", "ResolverConfig", "SalienceFactorSet",
    "SplitConfig", "TreeNode", "TreeParseError", "extract_anaphors",
    "extract_noun_phrases", "load_lexicons", "read_trees",
    "render_annotated", "render_pairs", "render_substituted",
    "resolve_document", "split_sentences", "weight_of",
]
