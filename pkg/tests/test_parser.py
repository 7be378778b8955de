import pytest
from hypothesis import given, strategies as st

from numclass.parser import (
    ClassifierHeadError,
    Count,
    Interrogative,
    JosushiHeadError,
    NumeralError,
    Pattern,
    PatternMismatchError,
    Some,
    UnknownLemmaError,
    parse_np,
)


def test_numeral_pattern(lex):
    np = parse_np("2 hiki no inu", lex)
    assert np.pattern is Pattern.XCNON
    assert np.numeral == Count(2)
    assert np.classifier.ja == "hiki"
    assert np.noun.ja == "inu"


def test_noun_no_classifier(lex):
    np = parse_np("pen no hako", lex)
    assert np.pattern is Pattern.NNOC
    assert np.numeral is None
    assert (np.classifier.ja, np.noun.ja) == ("hako", "pen")


@pytest.mark.parametrize("token, spec", [("suu", Some()), ("nan", Interrogative()), ("10", Count(10))])
def test_quantifier_tokens(lex, token, spec):
    assert parse_np(f"{token} hiki no inu", lex).numeral == spec


def test_josushi_cannot_head_nnoc(lex):
    with pytest.raises(JosushiHeadError):
        parse_np("inu no hiki", lex)


def test_species_cannot_head_nnoc(lex):
    with pytest.raises(ClassifierHeadError):
        parse_np("inu no shurui", lex)


@pytest.mark.parametrize("line, token, table", [
    ("2 hiki no neko", "neko", "nouns"),
    ("2 dai no inu", "dai", "classifiers"),
    ("neko no hako", "neko", "nouns"),
])
def test_unknown_lemma(lex, line, token, table):
    with pytest.raises(UnknownLemmaError) as exc:
        parse_np(line, lex)
    assert exc.value.token == token
    assert exc.value.table == table
    assert repr(token) in str(exc.value)


@pytest.mark.parametrize("line", ["0 hiki no inu", "-3 hiki no inu", "02 hiki no inu"])
def test_bad_numerals(lex, line):
    with pytest.raises(NumeralError):
        parse_np(line, lex)


@pytest.mark.parametrize("line", [
    "", "inu", "2 hiki inu", "inu 2 hiki", "2 hiki no inu no hako", "ni hiki no inu",
    " 2 hiki no inu", "2 hiki no inu ", "suu no hako", "2\thiki no inu",
])
def test_pattern_mismatch_or_unknown(lex, line):
    with pytest.raises((PatternMismatchError, UnknownLemmaError)):
        parse_np(line, lex)


def test_quantifiers_rejected_in_nnoc(lex):
    with pytest.raises(UnknownLemmaError):
        parse_np("nan no hako", lex)


def test_multiple_spaces_are_whitespace(lex):
    assert parse_np("2   hiki  no inu", lex) == parse_np("2 hiki no inu", lex)


def test_tokens_are_case_sensitive(lex):
    with pytest.raises(UnknownLemmaError):
        parse_np("2 hiki no Inu", lex)


@st.composite
def valid_lines(draw, lex):
    from numclass.lexicon import PartOfSpeech
    from numclass.parser import NNOC_TYPES

    noun = draw(st.sampled_from(sorted(lex.nouns)))
    heads = sorted(c.ja for c in lex.classifiers.values()
                   if c.pos is not PartOfSpeech.JOSUSHI and c.ctype in NNOC_TYPES)
    if draw(st.booleans()):
        return f"{noun} no {draw(st.sampled_from(heads))}"
    num = draw(st.sampled_from(["suu", "nan"]) | st.integers(1, 10**6).map(str))
    return f"{num} {draw(st.sampled_from(sorted(lex.classifiers)))} no {noun}"


def test_render_round_trip(lex):
    @given(valid_lines(lex))
    def check(line):
        assert parse_np(line, lex).render() == line

    check()
