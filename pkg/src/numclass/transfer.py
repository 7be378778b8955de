"""Transfer: decide how a classifier phrase is rendered in English.

`plan` looks only at the classifier type and the noun's countability
preference (never at the numeral value) and produces a `TransferPlan`
that the realizer turns into a string.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from numclass.lexicon import (
    UNIT_TYPES,
    ClassifierEntry,
    ClassifierType,
    Countability,
    Lexicon,
    NounEntry,
)
from numclass.parser import Pattern, SourceNP

FC = Countability.FULLY_COUNTABLE
SC = Countability.STRONGLY_COUNTABLE
WC = Countability.WEAKLY_COUNTABLE
UC = Countability.UNCOUNTABLE
PT = Countability.PLURALIA_TANTUM

DEFAULT_CLASSIFIER = "piece"


class Strategy(enum.Enum):
    INDIVIDUATE = "individuate"
    PART = "part"
    DEFAULT = "default"


class EmbeddedNumber(enum.Enum):
    SINGULAR_BARE = "singular_bare"
    PLURAL = "plural"
    AGREE_WITH_HEAD = "agree_with_head"


class Agreement(enum.Enum):
    SINGULAR = "singular"
    # plural-capable: resolves to the head's number at realization
    PLURAL = "plural"
    FOLLOW_NUMBER = "follow_number"


class AttributeKind(enum.Enum):
    AMOUNT_OF_UNIT = "amount_of_unit"
    SAME_DIMENSION_MEASURE = "same_dimension_measure"


@dataclass(frozen=True)
class AttributePlan:
    kind: AttributeKind
    dimension: str


@dataclass(frozen=True)
class TransferPlan:
    ctype: ClassifierType
    noun_en: str
    countability: Countability
    embedded_number: EmbeddedNumber
    agreement: Agreement
    strategy: Optional[Strategy] = None
    classifier_en: Optional[str] = None
    classifier_plural: Optional[str] = None
    joined: bool = False
    noun_plural: Optional[str] = None
    attribute_path: Optional[AttributePlan] = None
    steps: tuple = ()


class NoRealization(Exception):
    """The classifier/noun combination has no English rendering."""


_STRATEGY_GRID = {
    ClassifierType.UNIT_GENERAL: {
        FC: Strategy.INDIVIDUATE,
        SC: Strategy.INDIVIDUATE,
        WC: Strategy.INDIVIDUATE,
        UC: Strategy.DEFAULT,
        PT: Strategy.DEFAULT,
    },
    ClassifierType.UNIT_TYPICAL: {
        FC: Strategy.INDIVIDUATE,
        SC: Strategy.PART,
        WC: Strategy.PART,
        UC: Strategy.PART,
        PT: Strategy.PART,
    },
    ClassifierType.UNIT_SPECIAL: {c: Strategy.PART for c in Countability},
}


def select_strategy(ctype: ClassifierType, countability: Countability) -> Strategy:
    if ctype not in UNIT_TYPES:
        raise ValueError(f"{ctype.value} is not a unit classifier type")
    return _STRATEGY_GRID[ctype][countability]


def _semcat_match(cls: ClassifierEntry, noun: NounEntry) -> Optional[str]:
    for semcat, en in cls.by_semcat:
        if semcat in noun.semcats:
            return en
    return None


def resolve_classifier_en(cls: ClassifierEntry, noun: NounEntry) -> str:
    """English word for `cls`, picked by the noun's semantic categories when a rule matches."""
    return _semcat_match(cls, noun) or cls.en


def default_classifier_for(noun: NounEntry) -> str:
    return noun.default_classifier or DEFAULT_CLASSIFIER


def _classifier_plural(cls: ClassifierEntry, word: str) -> Optional[str]:
    # the explicit plural belongs to cls.en only
    return cls.plural if word == cls.en else None


def _plan_unit(cls: ClassifierEntry, noun: NounEntry, steps: tuple = ()) -> TransferPlan:
    strategy = select_strategy(cls.ctype, noun.countability)
    base = TransferPlan(
        ctype=cls.ctype,
        noun_en=noun.en,
        noun_plural=noun.plural,
        countability=noun.countability,
        embedded_number=EmbeddedNumber.SINGULAR_BARE,
        agreement=Agreement.FOLLOW_NUMBER,
        strategy=strategy,
        steps=steps,
    )
    if strategy is Strategy.INDIVIDUATE:
        plan = replace(base, embedded_number=EmbeddedNumber.AGREE_WITH_HEAD)
    elif strategy is Strategy.PART:
        word = resolve_classifier_en(cls, noun)
        plan = replace(base, classifier_en=word, classifier_plural=_classifier_plural(cls, word))
    else:
        # a noun's own default wins; otherwise a semcat-conditioned translation
        # of the classifier (the -mai case) stands in for "piece"
        word = None
        if noun.default_classifier is None:
            word = _semcat_match(cls, noun)
        plan = replace(base, classifier_en=word or default_classifier_for(noun))

    if noun.countability is PT:
        plan = pluralia_fallback(plan, noun, cls)
    return plan


def pluralia_fallback(plan: TransferPlan, noun: NounEntry, cls: ClassifierEntry) -> TransferPlan:
    """Rework a unit-classifier plan for a plural-only noun.

    Tried in order: the noun's default classifier (not for special
    classifiers), then the noun's non-plural-only alternative translation,
    then "X C of N" with N left in its plural form.
    """
    if noun.countability is not PT or cls.ctype not in UNIT_TYPES:
        raise ValueError("pluralia_fallback needs a pluralia tantum noun and a unit classifier")

    special = cls.ctype is ClassifierType.UNIT_SPECIAL
    if noun.default_classifier is not None and not special:
        return replace(
            plan,
            strategy=Strategy.DEFAULT,
            classifier_en=noun.default_classifier,
            classifier_plural=None,
            embedded_number=EmbeddedNumber.SINGULAR_BARE,
            steps=plan.steps + (f"pt-default-classifier:{noun.default_classifier}",),
        )
    if noun.alt is not None:
        alt_noun = replace(
            noun,
            en=noun.alt.en,
            countability=noun.alt.countability,
            plural=noun.alt.plural,
            default_classifier=None,
            alt=None,
        )
        return _plan_unit(cls, alt_noun, plan.steps + (f"pt-alt:{noun.alt.en}",))
    if special:
        raise NoRealization(
            f"special classifier {cls.ja!r} cannot count pluralia tantum noun "
            f"{noun.ja!r}, which has no alternative translation"
        )
    if plan.strategy is Strategy.INDIVIDUATE:
        # unreachable with the strategy grid; kept as a guard
        word = resolve_classifier_en(cls, noun)
        plan = replace(plan, strategy=Strategy.PART, classifier_en=word,
                       classifier_plural=_classifier_plural(cls, word))
    return replace(
        plan,
        embedded_number=EmbeddedNumber.SINGULAR_BARE,
        steps=plan.steps + ("pt-bare-plural",),
    )


def _structural_plan(cls: ClassifierEntry, noun: NounEntry) -> TransferPlan:
    c = noun.countability
    if cls.ctype.is_metric:
        embedded = EmbeddedNumber.PLURAL if c in (FC, PT) else EmbeddedNumber.SINGULAR_BARE
        agreement = (
            Agreement.SINGULAR if cls.ctype is ClassifierType.METRIC_MEASURE else Agreement.PLURAL
        )
    elif cls.ctype is ClassifierType.GROUP:
        embedded = EmbeddedNumber.PLURAL if c in (FC, SC, PT) else EmbeddedNumber.SINGULAR_BARE
        agreement = Agreement.FOLLOW_NUMBER
    else:
        if c in (FC, SC):
            embedded = EmbeddedNumber.AGREE_WITH_HEAD
        elif c is PT:
            embedded = EmbeddedNumber.PLURAL
        else:
            embedded = EmbeddedNumber.SINGULAR_BARE
        agreement = Agreement.FOLLOW_NUMBER
    word = resolve_classifier_en(cls, noun)
    return TransferPlan(
        ctype=cls.ctype,
        noun_en=noun.en,
        noun_plural=noun.plural,
        countability=c,
        embedded_number=embedded,
        agreement=agreement,
        classifier_en=word,
        classifier_plural=_classifier_plural(cls, word),
        joined=cls.joined,
    )


def _attribute_plan(cls: ClassifierEntry, noun: NounEntry) -> TransferPlan:
    dimension = noun.attribute.dimension
    if cls.ctype is ClassifierType.METRIC_MEASURE and cls.measures == dimension:
        kind = AttributeKind.SAME_DIMENSION_MEASURE
    else:
        kind = AttributeKind.AMOUNT_OF_UNIT
    steps: tuple = ()
    word: Optional[str] = None
    if cls.ctype is ClassifierType.UNIT_GENERAL:
        steps = ("elided-referent:thing",)
    else:
        word = resolve_classifier_en(cls, noun)
    return TransferPlan(
        ctype=cls.ctype,
        noun_en=noun.en,
        noun_plural=noun.plural,
        countability=noun.countability,
        embedded_number=EmbeddedNumber.SINGULAR_BARE,
        agreement=Agreement.SINGULAR,
        classifier_en=word,
        classifier_plural=_classifier_plural(cls, word) if word else None,
        joined=cls.joined,
        attribute_path=AttributePlan(kind, dimension),
        steps=steps,
    )


def plan(np: SourceNP, lex: Lexicon) -> TransferPlan:
    """Choose the English rendering for `np`.

    Raises `NoRealization` for the special-classifier/pluralia-tantum gap.
    """
    cls, noun = np.classifier, np.noun
    if noun.attribute is not None and np.pattern is Pattern.XCNON:
        return _attribute_plan(cls, noun)
    if cls.ctype in UNIT_TYPES:
        return _plan_unit(cls, noun)
    return _structural_plan(cls, noun)


def explain(np: SourceNP, p: TransferPlan) -> str:
    """Compact key=value trace of a plan, for ``--explain``."""
    fields = [
        ("pattern", np.pattern.value),
        ("ctype", p.ctype.value),
        ("countability", np.noun.countability.value),
    ]
    if p.strategy is not None:
        fields.append(("strategy", p.strategy.value))
    if p.attribute_path is not None:
        fields.append(("attribute", p.attribute_path.kind.value))
        fields.append(("dimension", p.attribute_path.dimension))
    fields.append(("classifier", p.classifier_en or "-"))
    fields.append(("noun", p.noun_en))
    fields.append(("embedded", p.embedded_number.value))
    fields.append(("agreement", p.agreement.value))
    fields.append(("steps", ",".join(p.steps) or "-"))
    return " ".join(f"{k}={v.replace(' ', '_')}" for k, v in fields)
