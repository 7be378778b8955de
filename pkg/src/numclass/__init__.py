"""Rule-based translation of Japanese numeral-classifier noun phrases into English."""
from numclass.lexicon import (
    ClassifierEntry,
    ClassifierType,
    Countability,
    Lexicon,
    NounEntry,
    PartOfSpeech,
    lint_lexicon,
    load_lexicon,
    reference_lexicon,
)
from numclass.parser import SourceNP, parse_np
from numclass.pipeline import translate, translate_line
from numclass.realizer import EnglishNP, realize
from numclass.transfer import NoRealization, TransferPlan, plan

__version__ = "0.1.0"
