"""Salience weights and anaphoric-chain bookkeeping.

Each candidate carries a set of structural salience factors; its weight
is the sum of the factor weights, each halved once per sentence of
distance to the anaphor (integer floor division keeps comparisons
exact).  Sentence recency is positional: it contributes its full weight
only when the factor set is anchored in the anaphor's own sentence and
is never stored in the set itself.

Mentions resolved to the same referent form an equivalence class whose
factor set is the running union of its members' sets, re-anchored at the
latest member, so a chain refreshed in a recent sentence regains full
strength.
"""

from dataclasses import dataclass

FACTOR_WEIGHTS = {
    "sentence_recency": 100,
    "subject_emphasis": 80,
    "existential_emphasis": 70,
    "accusative_emphasis": 50,
    "indirect_object_emphasis": 40,
    "head_noun_emphasis": 80,
    "non_adverbial_emphasis": 50,
}

STRUCTURAL_FACTORS = frozenset(FACTOR_WEIGHTS) - {"sentence_recency"}

# grammatical role -> salience factor
ROLE_FACTORS = {
    "subject": "subject_emphasis",
    "existential": "existential_emphasis",
    "direct_object": "accusative_emphasis",
    "indirect_object_or_oblique": "indirect_object_emphasis",
    "head_noun": "head_noun_emphasis",
    "non_adverbial": "non_adverbial_emphasis",
}


@dataclass(frozen=True)
class SalienceFactorSet:
    """Structural factors active for one mention or chain, anchored at
    the sentence the degradation distance is measured from."""

    factors: frozenset
    anchor_sentence: int


@dataclass
class EquivalenceClass:
    """A chain of mentions taken to name one discourse referent."""

    id: int
    members: list
    factors: SalienceFactorSet


def factors_for_roles(roles, sentence_index):
    return SalienceFactorSet(
        frozenset(ROLE_FACTORS[r] for r in roles if r in ROLE_FACTORS),
        sentence_index)


def weight_of(f, anaphor_sentence, weights=None):
    """Salience weight of factor set `f` for an anaphor in the given
    sentence.  Raises ValueError when the anaphor precedes the anchor."""
    w = FACTOR_WEIGHTS if weights is None else weights
    d = anaphor_sentence - f.anchor_sentence
    if d < 0:
        raise ValueError(
            "anaphor sentence %d precedes factor anchor %d"
            % (anaphor_sentence, f.anchor_sentence))
    total = w["sentence_recency"] if d == 0 else 0
    for name in f.factors:
        total += w[name] // (2 ** d)
    return total


def merge_chain(cls, new_member):
    """Absorb `new_member` into the chain: factors become the union and
    the anchor advances to the new member's sentence."""
    cls.members.append(new_member)
    cls.factors = SalienceFactorSet(
        cls.factors.factors | new_member.factors.factors,
        new_member.sentence_index)
    return cls
