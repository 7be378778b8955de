"""Exit criteria for the build; each test prints one PASS/FAIL summary line."""
import io
import itertools
import random
import string
import sys
import time

import pytest

from numclass.cli import main
from numclass.lexicon import ClassifierType, Countability, PartOfSpeech, load_lexicon_file
from numclass.parser import NNOC_TYPES, parse_np
from numclass.pipeline import translate, translate_line
from numclass.realizer import Role, convert_attribute_np, realize
from numclass.transfer import NoRealization, Strategy, plan, select_strategy
from conftest import make_lex, read_tsv

criterion = pytest.mark.criterion
C = Countability
CT = ClassifierType


def _table_output(lex_path, monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(""))
    start = time.perf_counter()
    code = main(["table", "--lexicon", lex_path])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    return code, out, elapsed


def _section(out, title):
    block = next(b for b in out.split("\n\n") if b.startswith(title))
    rows = [line.split("\t") for line in block.splitlines()[2:]]
    return [cell for row in rows for cell in row[1:]]


# Expected cells, row by row.
TABLE_1 = [
    "1 dog", "1 dog", "1 slice of dog",
    "1 cake", "1 crumb of cake", "1 slice of cake",
    "1 hair", "1 strand of hair", "1 slice of hair",
    "1 piece of information", "1 grain of information", "1 slice of information",
    "1 pair of scissors", "1 pair of scissors", "---",
]
TABLE_2 = [
    "1 box of dogs", "1 kg of ants",
    "1 box of cake", "1 kg of cake",
    "1 box of beer", "1 kg of beer",
    "1 box of furniture", "1 kg of furniture",
    "1 box of scissors", "1 kg of scissors",
]
TABLE_3 = [
    "1 set of dogs", "1 kind of dog", "2 kinds of dogs",
    "1 set of cakes", "1 kind of cake", "2 kinds of cakes",
    "1 set of beer", "1 kind of beer", "2 kinds of beer",
    "1 set of information", "1 kind of information", "2 kinds of information",
    "1 set of scissors", "1 kind of scissors", "2 kinds of scissors",
]


@criterion("1", "Table 1 (unit classifiers) byte-exact, <1s")
def test_table_1(lex_path, monkeypatch, capsys):
    code, out, elapsed = _table_output(lex_path, monkeypatch, capsys)
    assert code == 0
    assert _section(out, "Table 1") == TABLE_1
    assert elapsed < 1.0


@criterion("2", "Table 2 (metric classifiers) byte-exact + agreement")
def test_table_2(lex, lex_path, monkeypatch, capsys):
    code, out, _ = _table_output(lex_path, monkeypatch, capsys)
    assert code == 0
    assert _section(out, "Table 2") == TABLE_2
    for noun in ("ari", "keeki", "biiru", "kagu", "hasami", "kami"):
        for n in (1, 2, 10):
            assert translate_line(f"{n} kg no {noun}", lex).output.agreement.value == "sg"
        assert translate_line(f"2 hako no {noun}", lex).output.agreement.value == "pl"
    assert translate_line("2 kg no kami", lex).output.agreement.value == "sg"
    assert translate_line("2 hako no kami", lex).output.agreement.value == "pl"


@criterion("3", "Table 3 (group and species classifiers) byte-exact")
def test_table_3(lex_path, monkeypatch, capsys):
    code, out, _ = _table_output(lex_path, monkeypatch, capsys)
    assert code == 0
    assert _section(out, "Table 3") == TABLE_3


@criterion("4", "worked examples byte-exact")
def test_worked_examples(lex):
    for line, surface, agreement in read_tsv("examples.tsv"):
        rec = translate_line(line, lex)
        assert rec.rendered == surface, line
        if agreement != "-":
            assert rec.output.agreement.value == agreement, line
    for line, role, text in [
        ("10 m no takasa", Role.ASCRIPTIVE, "10m high"),
        ("10 en no nedan", Role.ASCRIPTIVE, "10 yen in price"),
    ]:
        np = parse_np(line, lex)
        assert convert_attribute_np(realize(np, plan(np, lex), lex), role, lex) == text
    # the numeral/quantifier/interrogative frames with hiki and inu
    assert [translate(f"{x} hiki no inu", lex) for x in ("2", "suu", "nan")] == [
        "2 dogs", "some dogs", "how many dogs"]


# Table 1 transcribed into strategies, read independently of the code.
def check_strategy_grid():
    rows = read_tsv("table1_strategy.tsv")
    assert len(rows) == 15
    for ctype, c, strategy, _ in rows:
        assert select_strategy(CT(ctype), C(c)) is Strategy(strategy)


def _random_lexicon(rng, per_class=200):
    letters = string.ascii_lowercase
    word = lambda: "".join(rng.choice(letters) for _ in range(rng.randint(3, 9)))
    nouns = []
    for c in C:
        for i in range(per_class):
            n = {"ja": f"{c.abbrev}{i}", "en": word(), "countability": c.value}
            if rng.random() < 0.3 and c is not C.PLURALIA_TANTUM:
                n["plural"] = word()
            if rng.random() < 0.5:
                n["default_classifier"] = word()
            if rng.random() < 0.5:
                n["semcats"] = [rng.choice(["food", "paper-like", "animal"])]
            if rng.random() < 0.4:
                n["alt"] = {"en": word(), "countability": rng.choice(
                    [x.value for x in C if x is not C.PLURALIA_TANTUM])}
            nouns.append(n)
    classifiers = [
        {"ja": "gen", "type": "unit_general", "en": "piece",
         "by_semcat": [{"semcat": "food", "en": "slice"}]},
        {"ja": "typ", "type": "unit_typical", "en": "grain",
         "by_semcat": [{"semcat": "paper-like", "en": "sheet"}]},
        {"ja": "spe", "type": "unit_special", "en": "slice"},
    ]
    return make_lex(nouns, classifiers)


def check_random_unit_entries():
    lex = _random_lexicon(random.Random(1996))
    checked = 0
    for noun, cls in itertools.product(lex.nouns.values(), lex.classifiers.values()):
        for num in ("1", "3", "suu"):
            np = parse_np(f"{num} {cls.ja} no {noun.ja}", lex)
            try:
                p = plan(np, lex)
            except NoRealization:
                assert noun.countability is C.PLURALIA_TANTUM
                assert cls.ctype is CT.UNIT_SPECIAL and noun.alt is None
                continue
            surface = realize(np, p, lex).surface
            if noun.countability is C.PLURALIA_TANTUM and p.strategy is Strategy.INDIVIDUATE:
                # only a non-plural-only alternative may be individuated
                assert p.countability is not C.PLURALIA_TANTUM
                assert p.noun_en == noun.alt.en
            if p.strategy in (Strategy.PART, Strategy.DEFAULT):
                embedded = surface.split(" of ", 1)[1]
                assert embedded == p.noun_en, surface
            checked += 1
    assert checked > 0


# Embedded noun is plural ("things") or singular ("thing") at numeral 2.
PLURAL_AT_TWO = {
    CT.METRIC_MEASURE:   {C.FULLY_COUNTABLE, C.PLURALIA_TANTUM},
    CT.METRIC_CONTAINER: {C.FULLY_COUNTABLE, C.PLURALIA_TANTUM},
    CT.GROUP:            {C.FULLY_COUNTABLE, C.STRONGLY_COUNTABLE, C.PLURALIA_TANTUM},
    CT.SPECIES:          {C.FULLY_COUNTABLE, C.STRONGLY_COUNTABLE, C.PLURALIA_TANTUM},
}


def check_structural_grid():
    nouns = [{"ja": c.abbrev, "en": "thing", "countability": c.value} for c in C]
    nouns[-1].update(en="things", default_classifier="pair")
    lex = make_lex(nouns, [{"ja": t.value, "type": t.value, "en": "unit"} for t in CT])
    for ctype, c in itertools.product(CT, C):
        line = f"2 {ctype.value} no {c.abbrev}"
        try:
            surface = translate(line, lex)
        except NoRealization:
            assert (ctype, c) == (CT.UNIT_SPECIAL, C.PLURALIA_TANTUM)
            continue
        if ctype in PLURAL_AT_TWO:
            expected = "things" if c in PLURAL_AT_TWO[ctype] else "thing"
            assert surface == f"2 units of {expected}", (line, surface)
            if ctype is CT.SPECIES and c in (C.FULLY_COUNTABLE, C.STRONGLY_COUNTABLE):
                assert translate(f"1 {ctype.value} no {c.abbrev}", lex) == "1 unit of thing"
        elif " of " in surface:
            # unit Part/Default: bare singular unless plural-only
            assert surface.endswith("things" if c is C.PLURALIA_TANTUM else " thing")


def check_uniformity(lex):
    heads = [c for c in lex.classifiers.values()
             if c.ctype in NNOC_TYPES and c.pos is not PartOfSpeech.JOSUSHI]
    assert heads
    pairs = 0
    for noun in lex.nouns.values():
        if noun.attribute is not None:
            continue
        for cls in heads:
            nnoc = translate(f"{noun.ja} no {cls.ja}", lex)
            one = translate(f"1 {cls.ja} no {noun.ja}", lex)
            article, rest = nnoc.split(" ", 1)
            assert article in ("a", "an")
            assert one == "1 " + rest, (nnoc, one)
            pairs += 1
    assert pairs >= 20


def _corpus(lex):
    lines = [f"{x} {c} no {n}" for x in ("1", "2", "10", "suu", "nan")
             for c in sorted(lex.classifiers) for n in sorted(lex.nouns)]
    lines += [f"{n} no {c}" for n in sorted(lex.nouns) for c in sorted(lex.classifiers)]
    return lines


def _run_corpus(lex_path):
    lex = load_lexicon_file(lex_path)
    out = []
    for line in _corpus(lex):
        rec = translate_line(line, lex)
        out.append(f"{line}\t{rec.rendered or 'ERROR'}\t{rec.trace or rec.error}")
    return "\n".join(out).encode("utf-8")


def check_determinism(lex_path):
    first, second = _run_corpus(lex_path), _run_corpus(lex_path)
    assert first == second
    assert len(first) > 10000


@criterion("5a", "select_strategy total over 3x5 grid, matches Table 1 oracle")
def test_strategy_grid():
    check_strategy_grid()


@criterion("5b", "200 random entries per class: PT never individuated, Part/Default embed bare")
def test_random_unit_entries():
    check_random_unit_entries()


@criterion("5c", "metric/group/species embedded number over the 7x5 grid")
def test_structural_grid():
    check_structural_grid()


@criterion("5d", "N-no-C equals 1-C-no-N with article for container/group heads")
def test_uniformity(lex):
    check_uniformity(lex)


@criterion("5e", "two corpus runs are byte-identical")
def test_determinism(lex_path):
    check_determinism(lex_path)


@criterion("5", "property suite runtime <10s")
def test_property_runtime(lex, lex_path):
    start = time.perf_counter()
    check_strategy_grid()
    check_random_unit_entries()
    check_structural_grid()
    check_uniformity(lex)
    check_determinism(lex_path)
    assert time.perf_counter() - start < 10.0


@criterion("6", "error paths: NoRealization exit 1, josushi N-no-C, unknown lemma token")
def test_error_paths(lex_path, monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1 kire no hasami\ninu no hiki\n2 hiki no neko\n"))
    code = main(["translate", "--lexicon", lex_path])
    out, err = capsys.readouterr()
    assert code == 1
    assert out == "ERROR\nERROR\nERROR\n"
    messages = err.splitlines()
    assert messages[0].startswith("line 1: NoRealization")
    assert messages[1].startswith("line 2: JosushiHeadError")
    assert messages[2].startswith("line 3: UnknownLemmaError") and "'neko'" in messages[2]
