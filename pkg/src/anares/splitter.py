"""Rule-based sentence boundary detection for raw text.

Prepares input for an external constituency parser: boundaries are
proposed at sentence-ending punctuation (period, question mark,
exclamation mark, quotation mark) and accepted when the next significant
character is a capital letter, a digit, or end of text.  An abbreviation
list suppresses false boundaries after forms like "Mr."; matching is
exact and case-sensitive.

Known, deliberate limitations: newlines are never boundaries (titles
glue onto the next sentence), a sentence genuinely ending in a listed
abbreviation is joined to its successor, and all-lowercase text is never
split.
"""

from dataclasses import dataclass, field

from .lexicon import lexicon_dir, _read_list

_SENTENCE_PUNCT = frozenset({".", "?", "!"})
_QUOTE_CHARS = frozenset({'"', "'", "”", "’"})
_ATTACHED_CLOSERS = "\"')]”’"


@dataclass
class SplitConfig:
    abbreviations: frozenset
    boundary_chars: frozenset = field(
        default_factory=lambda: frozenset({".", "?", "!", '"'}))


def default_config(directory=None):
    path = lexicon_dir(directory) / "abbreviations.txt"
    return SplitConfig(abbreviations=_read_list(path, lowercase=False))


def _normalize(segment):
    return " ".join(segment.split())


def split_sentences(text, cfg=None):
    """Split raw text into sentences.  Whitespace inside a sentence is
    collapsed to single spaces; nothing else is altered, so joining the
    output with spaces reproduces the whitespace-collapsed input."""
    if cfg is None:
        cfg = default_config()
    if not text or not text.strip():
        return []
    sentences = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch not in cfg.boundary_chars:
            i += 1
            continue
        if ch in _QUOTE_CHARS:
            # a quote closes a sentence only when it hugs the previous
            # word (an opening quote follows whitespace)
            if i == 0 or text[i - 1].isspace() \
                    or text[i - 1] in cfg.boundary_chars:
                i += 1
                continue
            end = i + 1
        else:
            # a run of sentence punctuation is one candidate at its end
            j = i
            while j + 1 < n and text[j + 1] in _SENTENCE_PUNCT \
                    and text[j + 1] in cfg.boundary_chars:
                j += 1
            if text[j] == ".":
                k = j
                while k > 0 and not text[k - 1].isspace():
                    k -= 1
                if text[k:j + 1] in cfg.abbreviations:
                    i = j + 1
                    continue
            end = j + 1
            while end < n and text[end] in _ATTACHED_CLOSERS:
                end += 1
        m = end
        while m < n and text[m].isspace():
            m += 1
        # a boundary needs following whitespace (or end of text) and a
        # capital letter, digit or nothing after it
        if m >= n or (m > end and (text[m].isupper() or text[m].isdigit())):
            segment = _normalize(text[start:end])
            if segment:
                sentences.append(segment)
            start = end
        i = end
    tail = _normalize(text[start:])
    if tail:
        sentences.append(tail)
    return sentences
