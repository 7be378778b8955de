"""Line-level translation: parse, plan, realize."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from numclass.lexicon import Lexicon
from numclass.parser import ParseError, parse_np
from numclass.realizer import EnglishNP, Role, convert_attribute_np, realize
from numclass.transfer import NoRealization, explain, plan


@dataclass(frozen=True)
class TranslationRecord:
    line: str
    output: Optional[EnglishNP] = None
    error: Optional[str] = None
    trace: Optional[str] = None
    rendered: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def translate_line(line: str, lex: Lexicon, role: Role = Role.REFERENTIAL) -> TranslationRecord:
    try:
        np = parse_np(line, lex)
        p = plan(np, lex)
    except (ParseError, NoRealization) as exc:
        return TranslationRecord(line, error=f"{type(exc).__name__}: {exc}")
    out = realize(np, p, lex)
    rendered = out.surface
    if role is not Role.REFERENTIAL and out.measure_phrase is not None:
        rendered = convert_attribute_np(out, role, lex)
    return TranslationRecord(line, output=out, trace=explain(np, p), rendered=rendered)


def translate(line: str, lex: Lexicon) -> str:
    """Surface string for one input line; raises on parse or realization failure."""
    np = parse_np(line, lex)
    return realize(np, plan(np, lex), lex).surface
