"""Word lists backing agreement detection, pleonastic patterns and the
sentence splitter.

Five plain-text files (one entry per line, `#` comments allowed) are
bundled under anares/data and can be overridden with a directory of the
same file names: male_names.txt, female_names.txt, modal_adjectives.txt,
cognitive_verbs.txt, abbreviations.txt.  The cognitive-verb file holds
the passive-participle forms the pleonastic patterns match against.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

DATA_DIR_ENV = "ANARES_DATA_DIR"
_BUNDLED = Path(__file__).parent / "data"

_FILES = {
    "male_names": "male_names.txt",
    "female_names": "female_names.txt",
    "modal_adjectives": "modal_adjectives.txt",
    "cognitive_verbs": "cognitive_verbs.txt",
    "abbreviations": "abbreviations.txt",
}

# Optional gendered-common-noun table (off by default): maps head nouns to
# a gender; a hit also marks the phrase animate.
GENDERED_NOUNS = {
    "woman": "feminine", "women": "feminine", "girl": "feminine",
    "girls": "feminine", "lady": "feminine", "ladies": "feminine",
    "mother": "feminine", "mothers": "feminine", "sister": "feminine",
    "sisters": "feminine", "daughter": "feminine", "daughters": "feminine",
    "wife": "feminine", "wives": "feminine", "aunt": "feminine",
    "aunts": "feminine", "grandmother": "feminine", "queen": "feminine",
    "queens": "feminine", "actress": "feminine", "waitress": "feminine",
    "man": "masculine", "men": "masculine", "boy": "masculine",
    "boys": "masculine", "gentleman": "masculine", "gentlemen": "masculine",
    "father": "masculine", "fathers": "masculine", "brother": "masculine",
    "brothers": "masculine", "son": "masculine", "sons": "masculine",
    "husband": "masculine", "husbands": "masculine", "uncle": "masculine",
    "uncles": "masculine", "grandfather": "masculine", "king": "masculine",
    "kings": "masculine", "waiter": "masculine",
}


class LexiconError(ValueError):
    pass


@dataclass
class Lexicons:
    """Loaded word lists.  All entries are lowercase-normalized."""

    male_names: frozenset
    female_names: frozenset
    modal_adjectives: frozenset
    cognitive_verbs: frozenset
    abbreviations: frozenset
    gendered_nouns: dict = field(default_factory=dict)


def _read_list(path, lowercase=True):
    entries = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            entries.append(line.lower() if lowercase else line)
    return frozenset(entries)


def lexicon_dir(override=None):
    if override is not None:
        return Path(override)
    env = os.environ.get(DATA_DIR_ENV)
    return Path(env) if env else _BUNDLED


def load_lexicons(directory=None, gendered_nouns=False):
    """Load the five lists from `directory` (bundled data by default).

    Raises LexiconError when a file is missing or one of the four
    agreement/pattern lists is empty.  Abbreviations keep their case:
    the splitter matches them case-sensitively.
    """
    base = lexicon_dir(directory)
    loaded = {}
    for name, fname in _FILES.items():
        path = base / fname
        if not path.exists():
            raise LexiconError("missing lexicon file: %s" % path)
        loaded[name] = _read_list(path, lowercase=(name != "abbreviations"))
    for name in ("male_names", "female_names", "modal_adjectives",
                 "cognitive_verbs"):
        if not loaded[name]:
            raise LexiconError("lexicon %s is empty" % name)
    return Lexicons(gendered_nouns=dict(GENDERED_NOUNS) if gendered_nouns
                    else {}, **loaded)
