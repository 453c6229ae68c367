from __future__ import annotations

import re

import pytest

from lex2vec import Lexicon, NormalizedEmbeddingTable

# Outcome per acceptance test, keyed by nodeid, reported in the summary.
_acceptance_outcomes: dict[str, str] = {}


@pytest.fixture
def toy_table() -> NormalizedEmbeddingTable:
    # good/bad sit at band extremes at theta 0.75; table never qualifies.
    return NormalizedEmbeddingTable(
        ("good", "bad", "table"),
        [[1.0, 0.0], [0.0, 0.5], [0.5, 1.0]],
    )


@pytest.fixture
def toy_lexicon() -> Lexicon:
    return Lexicon("demo", {"good": {"posemo"}, "bad": {"negemo"}})


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call":
        if report.passed:
            outcome = "PASS"
        elif report.skipped:
            outcome = "SKIP"
        else:
            outcome = "FAIL"
        _acceptance_outcomes[report.nodeid] = outcome
    elif report.when == "setup" and report.failed:
        _acceptance_outcomes[report.nodeid] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[nodeid]
        name = nodeid.rsplit("::", 1)[-1]
        match = re.match(r"test_criterion_(\d+)_(.*)", name)
        if match:
            label = f"criterion {int(match.group(1)):2d}: {match.group(2).replace('_', ' ')}"
        else:
            label = name
        terminalreporter.write_line(f"{outcome}  {label}")
