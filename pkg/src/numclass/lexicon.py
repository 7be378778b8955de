"""Bilingual noun and classifier lexicon.

The lexicon is a single JSON document with two arrays, ``nouns`` and
``classifiers``.  Loading validates the closed schema and the entry
invariants; the result is immutable and safe to share between threads.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import IO, Any, Mapping, Optional, Union


class Countability(enum.Enum):
    FULLY_COUNTABLE = "fully_countable"
    STRONGLY_COUNTABLE = "strongly_countable"
    WEAKLY_COUNTABLE = "weakly_countable"
    UNCOUNTABLE = "uncountable"
    PLURALIA_TANTUM = "pluralia_tantum"

    @property
    def abbrev(self) -> str:
        return {
            "fully_countable": "FC",
            "strongly_countable": "SC",
            "weakly_countable": "WC",
            "uncountable": "UC",
            "pluralia_tantum": "PT",
        }[self.value]


class ClassifierType(enum.Enum):
    UNIT_GENERAL = "unit_general"
    UNIT_TYPICAL = "unit_typical"
    UNIT_SPECIAL = "unit_special"
    METRIC_MEASURE = "metric_measure"
    METRIC_CONTAINER = "metric_container"
    GROUP = "group"
    SPECIES = "species"

    @property
    def is_unit(self) -> bool:
        return self in UNIT_TYPES

    @property
    def is_metric(self) -> bool:
        return self in (ClassifierType.METRIC_MEASURE, ClassifierType.METRIC_CONTAINER)


UNIT_TYPES = frozenset(
    {ClassifierType.UNIT_GENERAL, ClassifierType.UNIT_TYPICAL, ClassifierType.UNIT_SPECIAL}
)


class PartOfSpeech(enum.Enum):
    JOSUSHI = "josushi"
    NOUN = "noun"
    BOTH = "both"


@dataclass(frozen=True)
class AttributeSpec:
    dimension: str
    adjective: Optional[str] = None


@dataclass(frozen=True)
class AltTranslation:
    """Non-pluralia-tantum translation tried when a plural-only noun has no default classifier."""

    en: str
    countability: Countability
    plural: Optional[str] = None


@dataclass(frozen=True)
class NounEntry:
    ja: str
    en: str
    countability: Countability
    plural: Optional[str] = None
    default_classifier: Optional[str] = None
    semcats: frozenset = frozenset()
    attribute: Optional[AttributeSpec] = None
    alt: Optional[AltTranslation] = None


@dataclass(frozen=True)
class ClassifierEntry:
    ja: str
    ctype: ClassifierType
    en: str
    pos: PartOfSpeech = PartOfSpeech.JOSUSHI
    plural: Optional[str] = None
    # ordered (semcat, en) pairs; first match wins
    by_semcat: tuple = ()
    measures: Optional[str] = None
    joined: bool = False


@dataclass(frozen=True)
class Lexicon:
    nouns: Mapping[str, NounEntry] = field(default_factory=dict)
    classifiers: Mapping[str, ClassifierEntry] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "nouns", MappingProxyType(dict(self.nouns)))
        object.__setattr__(self, "classifiers", MappingProxyType(dict(self.classifiers)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return dict(self.nouns) == dict(other.nouns) and dict(self.classifiers) == dict(
            other.classifiers
        )

    def __hash__(self) -> int:
        return hash((tuple(self.nouns.items()), tuple(self.classifiers.items())))


class LexiconError(Exception):
    """Base class for every lexicon load failure."""


class LexiconSyntaxError(LexiconError):
    def __init__(self, msg: str, line: int, column: int) -> None:
        super().__init__(f"syntax error at line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class SchemaError(LexiconError):
    def __init__(self, field_name: str, key: Optional[str], msg: str) -> None:
        where = f"entry {key!r}" if key is not None else "document"
        super().__init__(f"schema violation in {where}, field {field_name!r}: {msg}")
        self.field = field_name
        self.key = key


class InvariantError(LexiconError):
    def __init__(self, key: str, rule: str) -> None:
        super().__init__(f"invariant violation in entry {key!r}: {rule}")
        self.key = key
        self.rule = rule


_NOUN_FIELDS = {"ja", "en", "countability", "plural", "default_classifier", "semcats", "attribute", "alt"}
_CLASSIFIER_FIELDS = {"ja", "type", "pos", "en", "plural", "by_semcat", "measures", "joined"}


def _check_fields(obj: Any, allowed: set, required: set, key: Optional[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(what, key, "expected an object")
    for name in obj:
        if name not in allowed:
            raise SchemaError(name, key, "unknown field")
    for name in sorted(required):
        if name not in obj:
            raise SchemaError(name, key, "required field missing")


def _string(obj: dict, name: str, key: Optional[str], *, required: bool = False) -> Optional[str]:
    value = obj.get(name)
    if value is None:
        if required or name in obj:
            raise SchemaError(name, key, "expected a string")
        return None
    if not isinstance(value, str) or not value:
        raise SchemaError(name, key, "expected a non-empty string")
    return value


def _enum(cls: type, obj: dict, name: str, key: Optional[str], default: Any = None) -> Any:
    if name not in obj:
        return default
    raw = obj[name]
    try:
        return cls(raw)
    except ValueError:
        allowed = " | ".join(m.value for m in cls)
        raise SchemaError(name, key, f"{raw!r} is not one of {allowed}") from None


def _parse_noun(obj: Any) -> NounEntry:
    key = obj.get("ja") if isinstance(obj, dict) and isinstance(obj.get("ja"), str) else None
    _check_fields(obj, _NOUN_FIELDS, {"ja", "en", "countability"}, key, "nouns[]")
    ja = _string(obj, "ja", key, required=True)
    countability = _enum(Countability, obj, "countability", key)

    semcats = obj.get("semcats", [])
    if not isinstance(semcats, list) or not all(isinstance(s, str) and s for s in semcats):
        raise SchemaError("semcats", key, "expected an array of non-empty strings")

    attribute = None
    if "attribute" in obj:
        raw = obj["attribute"]
        _check_fields(raw, {"dimension", "adjective"}, {"dimension"}, key, "attribute")
        if not isinstance(raw["dimension"], str):
            raise SchemaError("attribute.dimension", key, "expected a string")
        if not raw["dimension"]:
            raise InvariantError(key, "attribute.dimension must be non-empty")
        attribute = AttributeSpec(raw["dimension"], _string(raw, "adjective", key))

    alt = None
    if "alt" in obj:
        raw = obj["alt"]
        _check_fields(raw, {"en", "countability", "plural"}, {"en", "countability"}, key, "alt")
        alt = AltTranslation(
            en=_string(raw, "en", key, required=True),
            countability=_enum(Countability, raw, "countability", key),
            plural=_string(raw, "plural", key),
        )

    entry = NounEntry(
        ja=ja,
        en=_string(obj, "en", key, required=True),
        countability=countability,
        plural=_string(obj, "plural", key),
        default_classifier=_string(obj, "default_classifier", key),
        semcats=frozenset(semcats),
        attribute=attribute,
        alt=alt,
    )
    _check_noun(entry)
    return entry


def _check_noun(entry: NounEntry) -> None:
    if entry.countability is Countability.PLURALIA_TANTUM and entry.plural is not None:
        raise InvariantError(entry.ja, "pluralia tantum noun must not carry an explicit plural")
    if entry.alt is not None and entry.alt.countability is Countability.PLURALIA_TANTUM:
        raise InvariantError(entry.ja, "alt translation must not be pluralia tantum")


def _parse_classifier(obj: Any) -> ClassifierEntry:
    key = obj.get("ja") if isinstance(obj, dict) and isinstance(obj.get("ja"), str) else None
    _check_fields(obj, _CLASSIFIER_FIELDS, {"ja", "type", "en"}, key, "classifiers[]")

    rules = obj.get("by_semcat", [])
    if not isinstance(rules, list):
        raise SchemaError("by_semcat", key, "expected an array")
    by_semcat = []
    for rule in rules:
        _check_fields(rule, {"semcat", "en"}, {"semcat", "en"}, key, "by_semcat[]")
        by_semcat.append((_string(rule, "semcat", key), _string(rule, "en", key)))

    joined = obj.get("joined", False)
    if not isinstance(joined, bool):
        raise SchemaError("joined", key, "expected a boolean")

    entry = ClassifierEntry(
        ja=_string(obj, "ja", key, required=True),
        ctype=_enum(ClassifierType, obj, "type", key),
        en=_string(obj, "en", key, required=True),
        pos=_enum(PartOfSpeech, obj, "pos", key, PartOfSpeech.JOSUSHI),
        plural=_string(obj, "plural", key),
        by_semcat=tuple(by_semcat),
        measures=_string(obj, "measures", key),
        joined=joined,
    )
    _check_classifier(entry)
    return entry


def _check_classifier(entry: ClassifierEntry) -> None:
    if entry.measures is not None and entry.ctype is not ClassifierType.METRIC_MEASURE:
        raise InvariantError(entry.ja, "measures is only allowed on metric_measure classifiers")
    if entry.joined and entry.ctype is not ClassifierType.METRIC_MEASURE:
        raise InvariantError(entry.ja, "joined is only allowed on metric_measure classifiers")
    seen = set()
    for semcat, en in entry.by_semcat:
        if en in seen and en != entry.en:
            raise InvariantError(entry.ja, f"by_semcat translation {en!r} is repeated")
        seen.add(en)


def parse_lexicon(doc: Any) -> Lexicon:
    """Build a validated `Lexicon` from an already-decoded JSON value."""
    _check_fields(doc, {"nouns", "classifiers"}, set(), None, "lexicon")
    nouns: dict = {}
    classifiers: dict = {}
    for name, parse, target in (
        ("nouns", _parse_noun, nouns),
        ("classifiers", _parse_classifier, classifiers),
    ):
        items = doc.get(name, [])
        if not isinstance(items, list):
            raise SchemaError(name, None, "expected an array")
        for raw in items:
            entry = parse(raw)
            if entry.ja in target:
                raise InvariantError(entry.ja, f"duplicate key in {name}")
            target[entry.ja] = entry
    return Lexicon(nouns, classifiers)


def load_lexicon(source: Union[bytes, str, IO]) -> Lexicon:
    """Load a lexicon from bytes, text or an open (binary or text) stream."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LexiconSyntaxError(f"invalid UTF-8 at byte {exc.start}", 1, 1) from None
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise LexiconSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return parse_lexicon(doc)


def load_lexicon_file(path: Union[str, Path]) -> Lexicon:
    with open(path, "rb") as fh:
        return load_lexicon(fh)


def reference_lexicon_path() -> Path:
    return Path(__file__).parent / "data" / "reference_lexicon.json"


def reference_lexicon() -> Lexicon:
    return load_lexicon_file(reference_lexicon_path())


def _noun_to_json(n: NounEntry) -> dict:
    out: dict = {"ja": n.ja, "en": n.en, "countability": n.countability.value}
    if n.plural is not None:
        out["plural"] = n.plural
    if n.default_classifier is not None:
        out["default_classifier"] = n.default_classifier
    if n.semcats:
        out["semcats"] = sorted(n.semcats)
    if n.attribute is not None:
        out["attribute"] = {"dimension": n.attribute.dimension}
        if n.attribute.adjective is not None:
            out["attribute"]["adjective"] = n.attribute.adjective
    if n.alt is not None:
        out["alt"] = {"en": n.alt.en, "countability": n.alt.countability.value}
        if n.alt.plural is not None:
            out["alt"]["plural"] = n.alt.plural
    return out


def _classifier_to_json(c: ClassifierEntry) -> dict:
    out: dict = {"ja": c.ja, "type": c.ctype.value, "pos": c.pos.value, "en": c.en}
    if c.plural is not None:
        out["plural"] = c.plural
    if c.by_semcat:
        out["by_semcat"] = [{"semcat": s, "en": en} for s, en in c.by_semcat]
    if c.measures is not None:
        out["measures"] = c.measures
    if c.joined:
        out["joined"] = True
    return out


def serialize(lex: Lexicon) -> bytes:
    doc = {
        "nouns": [_noun_to_json(n) for n in lex.nouns.values()],
        "classifiers": [_classifier_to_json(c) for c in lex.classifiers.values()],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2).encode("utf-8") + b"\n"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    key: str
    message: str

    def __str__(self) -> str:
        return f"warning: {self.kind} {self.key}: {self.message}"


def lint_lexicon(lex: Lexicon) -> list:
    """Return warnings for entries that load fine but can produce poor output."""
    diags = []
    for noun in lex.nouns.values():
        if (
            noun.countability is Countability.PLURALIA_TANTUM
            and noun.default_classifier is None
            and noun.alt is None
        ):
            diags.append(
                Diagnostic(
                    "noun",
                    noun.ja,
                    "pluralia tantum noun has neither default_classifier nor alt; "
                    "unit classifiers fall back to a bare plural",
                )
            )
        if noun.countability is Countability.UNCOUNTABLE and noun.default_classifier is None:
            diags.append(
                Diagnostic(
                    "noun", noun.ja, 'uncountable noun has no default_classifier; "piece" will be used'
                )
            )

    measures = [c for c in lex.classifiers.values() if c.ctype is ClassifierType.METRIC_MEASURE]
    measured = {c.measures for c in measures if c.measures}
    unmatched = sorted(
        {n.attribute.dimension for n in lex.nouns.values() if n.attribute} - measured
    )
    if unmatched:
        for cls in measures:
            if cls.measures is None:
                diags.append(
                    Diagnostic(
                        "classifier",
                        cls.ja,
                        "metric_measure classifier has no measures while attribute "
                        f"dimension(s) {', '.join(unmatched)} have no measuring unit",
                    )
                )
    return diags
