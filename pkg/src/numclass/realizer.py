"""English surface realization of transfer plans."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from numclass.lexicon import ClassifierType, Countability, Lexicon
from numclass.parser import Count, Interrogative, NumeralSpec, Pattern, Some, SourceNP
from numclass.transfer import AttributeKind, EmbeddedNumber, TransferPlan


class NumberFeature(enum.Enum):
    SINGULAR = "sg"
    PLURAL = "pl"


class Role(enum.Enum):
    REFERENTIAL = "referential"
    ASCRIPTIVE = "ascriptive"
    PREMODIFIER = "premodifier"


@dataclass(frozen=True)
class EnglishNP:
    surface: str
    head_number: NumberFeature
    agreement: NumberFeature
    # set only for same-dimension attribute phrases ("a height of 10m")
    measure_phrase: Optional[str] = None
    attribute_noun: Optional[str] = None


_SIBILANTS = ("s", "x", "z", "ch", "sh")
_VOWELS = "aeiou"


def pluralize(word: str, explicit: Optional[str] = None) -> str:
    if explicit:
        return explicit
    if word.endswith(_SIBILANTS):
        return word + "es"
    if len(word) > 1 and word[-1] == "y" and word[-2] not in _VOWELS:
        return word[:-1] + "ies"
    return word + "s"


# Vowel letters pronounced with an initial /j/ or /w/ take "a".
_A_BEFORE_VOWEL = frozenset(
    """
    eucalyptus eulogy eunuch euphemism euphoria euro euros europe european ewe ewes
    once one ones ubiquitous ukulele unanimous unicorn unicycle unification uniform
    uniforms union unions unique unit units unitary united unity universal universe
    university uranium urinal urine usable usage use used useful useless user users
    usual usurer utensil utensils uterus utilitarian utility utopia uvula
    """.split()
)

# Silent "h" takes "an".
_AN_BEFORE_H = frozenset(
    """
    heir heiress heirloom heirs honest honestly honesty honor honorable honorary
    honors honour honourable honours hour hourglass hourly hours
    """.split()
)


def indefinite_article(word: str) -> str:
    w = word.split()[0].lower() if word.strip() else word.lower()
    if w in _A_BEFORE_VOWEL:
        return "a"
    if w in _AN_BEFORE_H:
        return "an"
    return "an" if w[:1] in _VOWELS else "a"


def render_numeral(n: NumeralSpec, head_countable: bool) -> str:
    if isinstance(n, Count):
        return str(n.value)
    if isinstance(n, Some):
        return "some"
    if isinstance(n, Interrogative):
        return "how many" if head_countable else "how much"
    raise TypeError(f"not a numeral spec: {n!r}")


def _noun_form(plan: TransferPlan, plural: bool) -> str:
    if plan.countability is Countability.PLURALIA_TANTUM:
        return plan.noun_en
    return pluralize(plan.noun_en, plan.noun_plural) if plural else plan.noun_en


def _classifier_phrase(plan: TransferPlan, numeral: NumeralSpec) -> str:
    """Numeral plus classifier word; joined units ("10m") only fuse with digits."""
    word = plan.classifier_en
    num = render_numeral(numeral, head_countable=True)
    if plan.joined:
        return f"{num}{word}" if isinstance(numeral, Count) else f"{num} {word}"
    if numeral.is_plural:
        word = pluralize(word, plan.classifier_plural)
    return f"{num} {word}"


def _embedded_plural(plan: TransferPlan, head_plural: bool) -> bool:
    if plan.embedded_number is EmbeddedNumber.PLURAL:
        return True
    if plan.embedded_number is EmbeddedNumber.AGREE_WITH_HEAD:
        return head_plural
    return False


def _number(plural: bool) -> NumberFeature:
    return NumberFeature.PLURAL if plural else NumberFeature.SINGULAR


def _agreement(plan: TransferPlan, head: NumberFeature) -> NumberFeature:
    # measure phrases default to singular verbs; containers and the rest follow the head
    if plan.ctype is ClassifierType.METRIC_MEASURE:
        return NumberFeature.SINGULAR
    return head


def _realize_attribute(np: SourceNP, plan: TransferPlan) -> EnglishNP:
    sg = NumberFeature.SINGULAR
    if plan.attribute_path.kind is AttributeKind.SAME_DIMENSION_MEASURE:
        measure = _classifier_phrase(plan, np.numeral)
        surface = f"{indefinite_article(plan.noun_en)} {plan.noun_en} of {measure}"
        return EnglishNP(surface, sg, sg, measure_phrase=measure, attribute_noun=np.noun.ja)
    if plan.classifier_en is None:
        amount = render_numeral(np.numeral, head_countable=False)
    else:
        amount = _classifier_phrase(plan, np.numeral)
    return EnglishNP(f"the {plan.noun_en} of {amount}", sg, sg)


def realize(np: SourceNP, plan: TransferPlan, lex: Lexicon) -> EnglishNP:
    if plan.attribute_path is not None:
        return _realize_attribute(np, plan)

    if np.pattern is Pattern.NNOC:
        word = plan.classifier_en
        noun = _noun_form(plan, _embedded_plural(plan, head_plural=False))
        sg = NumberFeature.SINGULAR
        surface = f"{indefinite_article(word)} {word} of {noun}"
        return EnglishNP(surface, sg, _agreement(plan, sg))

    head_plural = np.numeral.is_plural
    head = _number(head_plural)
    if plan.classifier_en is None:
        num = render_numeral(np.numeral, head_countable=True)
        surface = f"{num} {_noun_form(plan, head_plural)}"
    else:
        noun = _noun_form(plan, _embedded_plural(plan, head_plural))
        surface = f"{_classifier_phrase(plan, np.numeral)} of {noun}"
    return EnglishNP(surface, head, _agreement(plan, head))


class AttributeRoleError(ValueError):
    pass


def convert_attribute_np(np: EnglishNP, role: Role, lex: Lexicon) -> str:
    """Recast a same-dimension attribute phrase for ascriptive or prenominal use.

    "a height of 10m" becomes "10m high" when the attribute has an adjective,
    and "a price of 10 yen" becomes "10 yen in price" otherwise.  Both forms
    also work before a noun ("a 10m high building").
    """
    if np.measure_phrase is None or np.attribute_noun is None:
        raise AttributeRoleError(f"{np.surface!r} is not a same-dimension attribute phrase")
    role = Role(role)
    if role is Role.REFERENTIAL:
        return np.surface
    noun = lex.nouns[np.attribute_noun]
    if noun.attribute.adjective:
        return f"{np.measure_phrase} {noun.attribute.adjective}"
    return f"{np.measure_phrase} in {noun.en}"
