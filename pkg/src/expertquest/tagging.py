"""Token classification for the noun/verb filter.

The pipeline keeps only nouns and verbs before stemming and hashing. A full
statistical tagger can be plugged in through the ``Tagger`` protocol; the
shipped default is a deterministic, dependency-free rule tagger:

1. a lexicon of English function words, common adjectives and adverbs,
   all mapped to ``Other`` (these are what the filter exists to drop);
2. a lexicon of irregular verb forms mapped to ``Verb``;
3. suffix heuristics (-ing / -ed for verbs, -ly for adverbs);
4. ``Noun`` as the fallback for unknown tokens.

Misclassifying a noun as a verb (or vice versa) is harmless here because
both classes survive the filter; only the ``Other`` decisions change the
outcome.
"""

from __future__ import annotations

import enum
from typing import Protocol


class TokenClass(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    OTHER = "other"


class Tagger(Protocol):
    def classify(self, word: str) -> TokenClass:
        """Classify one cleaned lowercase token."""


_DETERMINERS = """
a an the this that these those some any each every either neither no all both
half such same own other another much many more most few fewer less least
several enough certain various
""".split()

_PRONOUNS = """
i you he she it we they me him her us them mine yours hers ours theirs my your
his its our their myself yourself himself herself itself ourselves yourselves
themselves who whom whose which what whatever whoever whichever something
anything nothing everything someone anyone everyone nobody somebody anybody
everybody one ones
""".split()

_PREPOSITIONS = """
up over under on in at by for with without from to of off into onto through
between among amongst about against during before after above below down out
near across behind beyond around along upon within toward towards via per
despite except until unless since like unlike amid beneath beside besides
inside outside underneath throughout past
""".split()

_CONJUNCTIONS = """
and or but nor so yet if while because although though whether than as when
where whenever wherever once
""".split()

_AUXILIARIES = """
is are was were be been being am do does did done doing have has had having
will would can could shall should may might must ought need dare
""".split()

_ADVERBS = """
not very too also just now never always often again here there then well
really quite rather almost already still even only soon together away back
ever far forward instead maybe meanwhile nearly nowadays often perhaps
quite seldom sometimes somewhat therefore thus today tomorrow tonight
yesterday yes
""".split()

_ADJECTIVES = """
white black red green blue brown yellow orange purple pink grey gray golden
big small large little long short high low old new young good bad great free
full open easy hard fast slow early late hot cold warm cool dark light heavy
strong weak rich poor happy sad angry glad sorry sure true false real whole
main major minor nice fine deep flat wide narrow thick thin clean dirty dry
wet quick ready simple common rare recent former latter next last first
second third final busy dead alive right wrong left public private local
foreign national international possible impossible important special general
particular available necessary
""".split()

_FUNCTION_WORDS = frozenset(
    _DETERMINERS + _PRONOUNS + _PREPOSITIONS + _CONJUNCTIONS + _AUXILIARIES
    + _ADVERBS + _ADJECTIVES
)

_IRREGULAR_VERBS = frozenset(
    """
    ran went said made got took came saw knew gave found thought told became
    left felt brought began kept held wrote stood heard meant met paid ate
    spoke drove bought broke sat lost won sent built fell grew drew threw
    flew rose chose sang sank swam rang wore tore spent slept taught caught
    fought sought sold forgot understood led read put cut hit set shut spread
    cost bet quit hurt burst struck swung spun dug hung stuck swore woke
    froze rode shook beat bit blew forgave hid lay laid lit shone shot slid
    stole strove wept wound
    """.split()
)

# -ly nouns that must not be dropped by the adverb heuristic
_LY_EXCEPTIONS = frozenset(
    """
    family assembly supply reply apply multiply italy july fly butterfly
    firefly rally ally belly jelly bully monopoly anomaly
    """.split()
)


class RuleTagger:
    """Deterministic lexicon-plus-heuristics tagger."""

    def classify(self, word: str) -> TokenClass:
        if word in _FUNCTION_WORDS:
            return TokenClass.OTHER
        if word in _IRREGULAR_VERBS:
            return TokenClass.VERB
        if word.endswith("ing") and len(word) > 4:
            return TokenClass.VERB
        if word.endswith("ed") and len(word) > 3:
            return TokenClass.VERB
        if word.endswith("ly") and len(word) > 3 and word not in _LY_EXCEPTIONS:
            return TokenClass.OTHER
        return TokenClass.NOUN


DEFAULT_TAGGER = RuleTagger()
