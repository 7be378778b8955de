"""Noun-type by classifier-type grids, rendered through the live pipeline.

Each cell names the (classifier, noun) lemmas that exemplify it; the
numeral is 1 except for the plural species column, which uses 2.
"""
from __future__ import annotations

from typing import NamedTuple

from numclass.lexicon import Lexicon
from numclass.parser import ParseError
from numclass.pipeline import translate
from numclass.transfer import NoRealization

NO_REALIZATION = "---"


class Cell(NamedTuple):
    count: int
    classifier: str
    noun: str

    @property
    def line(self) -> str:
        return f"{self.count} {self.classifier} no {self.noun}"


class Grid(NamedTuple):
    title: str
    columns: tuple
    rows: tuple  # (label, (Cell, ...))


UNIT_TABLE = Grid(
    "Table 1: Unit Classifiers",
    ("General", "Typical", "Special"),
    (
        ("Fully Countable", (Cell(1, "tsu", "inu"), Cell(1, "hiki", "inu"), Cell(1, "kire", "inu"))),
        ("Strongly Countable", (Cell(1, "tsu", "keeki"), Cell(1, "kakera", "keeki"), Cell(1, "kire", "keeki"))),
        ("Weakly Countable", (Cell(1, "tsu", "kaminoke"), Cell(1, "suji", "kaminoke"), Cell(1, "kire", "kaminoke"))),
        ("Uncountable", (Cell(1, "tsu", "jouhou"), Cell(1, "tsubu", "jouhou"), Cell(1, "kire", "jouhou"))),
        ("Pluralia Tantum (pair)", (Cell(1, "tsu", "hasami"), Cell(1, "tsubu", "hasami"), Cell(1, "kire", "hasami"))),
    ),
)

METRIC_TABLE = Grid(
    "Table 2: Metric Classifiers",
    ("Container", "Measure"),
    (
        ("Fully Countable", (Cell(1, "hako", "inu"), Cell(1, "kg", "ari"))),
        ("Strongly Countable", (Cell(1, "hako", "keeki"), Cell(1, "kg", "keeki"))),
        ("Weakly Countable", (Cell(1, "hako", "biiru"), Cell(1, "kg", "biiru"))),
        ("Uncountable", (Cell(1, "hako", "kagu"), Cell(1, "kg", "kagu"))),
        ("Pluralia Tantum", (Cell(1, "hako", "hasami"), Cell(1, "kg", "hasami"))),
    ),
)


def _group_species(noun: str) -> tuple:
    return (Cell(1, "kumi", noun), Cell(1, "shurui", noun), Cell(2, "shurui", noun))


GROUP_TABLE = Grid(
    "Table 3: Group and Species Classifiers",
    ("Group", "Species (Si)", "Species (Pl)"),
    (
        ("Fully Countable", _group_species("inu")),
        ("Strongly Countable", _group_species("keeki")),
        ("Weakly Countable", _group_species("biiru")),
        ("Uncountable", _group_species("jouhou")),
        ("Pluralia Tantum", _group_species("hasami")),
    ),
)

TABLES = (UNIT_TABLE, METRIC_TABLE, GROUP_TABLE)


def missing_lemmas(lex: Lexicon) -> list:
    missing = set()
    for grid in TABLES:
        for _, cells in grid.rows:
            for cell in cells:
                if cell.classifier not in lex.classifiers:
                    missing.add(f"classifier {cell.classifier}")
                if cell.noun not in lex.nouns:
                    missing.add(f"noun {cell.noun}")
    return sorted(missing)


def render_cell(cell: Cell, lex: Lexicon) -> str:
    try:
        return translate(cell.line, lex)
    except NoRealization:
        return NO_REALIZATION
    except ParseError as exc:
        raise KeyError(str(exc)) from exc


def render_grid(grid: Grid, lex: Lexicon) -> list:
    lines = [grid.title, "\t".join(("Noun Type",) + grid.columns)]
    for label, cells in grid.rows:
        lines.append("\t".join([label] + [render_cell(c, lex) for c in cells]))
    return lines


def render_tables(lex: Lexicon) -> str:
    blocks = ["\n".join(render_grid(g, lex)) for g in TABLES]
    return "\n\n".join(blocks) + "\n"
