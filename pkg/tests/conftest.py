import json
from pathlib import Path

import pytest

from numclass.lexicon import parse_lexicon, reference_lexicon, reference_lexicon_path

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def lex():
    return reference_lexicon()


@pytest.fixture(scope="session")
def lex_path():
    return str(reference_lexicon_path())


def make_lex(nouns=(), classifiers=()):
    return parse_lexicon({"nouns": list(nouns), "classifiers": list(classifiers)})


def dumps(nouns=(), classifiers=()):
    return json.dumps({"nouns": list(nouns), "classifiers": list(classifiers)}).encode()


def read_tsv(name):
    rows = []
    for line in (FIXTURES / name).read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        item.config._criteria.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, outcome in config._criteria:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {cid}: {title}")
