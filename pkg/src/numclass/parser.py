"""Parse romanized, space-segmented quantified noun phrases.

Two patterns are accepted::

    NUM CLS no NOUN     e.g. "2 hiki no inu"
    NOUN no CLS         e.g. "pen no hako"

NUM is a decimal numeral without leading zeros, ``suu`` (some) or ``nan``
(how many).  Tokens are case-sensitive lexicon keys.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Union

from numclass.lexicon import ClassifierEntry, ClassifierType, Lexicon, NounEntry, PartOfSpeech

SOME_TOKEN = "suu"
INTERROGATIVE_TOKEN = "nan"

_WS = re.compile(r" +")
_INTEGER = re.compile(r"-?[0-9]+")

# classifier types allowed to head "N no C"
NNOC_TYPES = frozenset({ClassifierType.GROUP, ClassifierType.METRIC_CONTAINER})


@dataclass(frozen=True)
class Count:
    value: int

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"count must be positive, got {self.value}")

    @property
    def token(self) -> str:
        return str(self.value)

    @property
    def is_plural(self) -> bool:
        return self.value > 1


@dataclass(frozen=True)
class Some:
    token = SOME_TOKEN
    is_plural = True


@dataclass(frozen=True)
class Interrogative:
    token = INTERROGATIVE_TOKEN
    is_plural = True


NumeralSpec = Union[Count, Some, Interrogative]


class Pattern(enum.Enum):
    XCNON = "XCnoN"
    NNOC = "NnoC"


@dataclass(frozen=True)
class SourceNP:
    pattern: Pattern
    classifier: ClassifierEntry
    noun: NounEntry
    numeral: Optional[NumeralSpec] = None

    def tokens(self) -> list:
        if self.pattern is Pattern.NNOC:
            return [self.noun.ja, "no", self.classifier.ja]
        return [self.numeral.token, self.classifier.ja, "no", self.noun.ja]

    def render(self) -> str:
        return " ".join(self.tokens())


class ParseError(ValueError):
    pass


class UnknownLemmaError(ParseError):
    def __init__(self, token: str, table: str) -> None:
        super().__init__(f"unknown lemma {token!r} (searched {table})")
        self.token = token
        self.table = table


class PatternMismatchError(ParseError):
    pass


class NumeralError(ParseError):
    pass


class JosushiHeadError(ParseError):
    def __init__(self, token: str) -> None:
        super().__init__(
            f"{token!r} is a josushi-only classifier and cannot head an N-no-C phrase"
        )
        self.token = token


class ClassifierHeadError(ParseError):
    def __init__(self, token: str, ctype: ClassifierType) -> None:
        super().__init__(
            f"{token!r} is a {ctype.value} classifier; only group and container "
            "classifiers head an N-no-C phrase"
        )
        self.token = token


def parse_numeral(token: str) -> NumeralSpec:
    if token == SOME_TOKEN:
        return Some()
    if token == INTERROGATIVE_TOKEN:
        return Interrogative()
    if _INTEGER.fullmatch(token):
        value = int(token)
        if value < 1:
            raise NumeralError(f"numeral {token!r} is not positive")
        if token.startswith("0"):
            raise NumeralError(f"numeral {token!r} has a leading zero")
        return Count(value)
    raise PatternMismatchError(f"expected a numeral, {SOME_TOKEN!r} or {INTERROGATIVE_TOKEN!r}, got {token!r}")


def _noun(token: str, lex: Lexicon) -> NounEntry:
    try:
        return lex.nouns[token]
    except KeyError:
        raise UnknownLemmaError(token, "nouns") from None


def _classifier(token: str, lex: Lexicon) -> ClassifierEntry:
    try:
        return lex.classifiers[token]
    except KeyError:
        raise UnknownLemmaError(token, "classifiers") from None


def parse_np(line: str, lex: Lexicon) -> SourceNP:
    if not line:
        raise PatternMismatchError("empty line")
    if line != line.strip(" "):
        raise PatternMismatchError("leading or trailing space")
    tokens = _WS.split(line)

    if len(tokens) == 4 and tokens[2] == "no":
        numeral = parse_numeral(tokens[0])
        return SourceNP(
            Pattern.XCNON,
            classifier=_classifier(tokens[1], lex),
            noun=_noun(tokens[3], lex),
            numeral=numeral,
        )

    if len(tokens) == 3 and tokens[1] == "no":
        noun = _noun(tokens[0], lex)
        cls = _classifier(tokens[2], lex)
        if cls.pos is PartOfSpeech.JOSUSHI:
            raise JosushiHeadError(cls.ja)
        if cls.ctype not in NNOC_TYPES:
            raise ClassifierHeadError(cls.ja, cls.ctype)
        return SourceNP(Pattern.NNOC, classifier=cls, noun=noun)

    raise PatternMismatchError(
        f"{line!r} matches neither 'NUM CLS no NOUN' nor 'NOUN no CLS'"
    )
