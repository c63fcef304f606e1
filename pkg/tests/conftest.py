from pathlib import Path

import pytest

from anares import load_lexicons, read_trees

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lex():
    return load_lexicons()


@pytest.fixture(scope="session")
def lex_gendered():
    return load_lexicons(gendered_nouns=True)


@pytest.fixture(scope="session")
def corpus_doc():
    return read_trees((DATA / "corpus.trees").read_text())


@pytest.fixture(scope="session")
def data_dir():
    return DATA
