"""Shared fixtures: the worked 22-vertex forest and its known code."""

from __future__ import annotations

import pytest

from hyperforest import ForestCode, ForestShape, RootedForest

WORKED_EDGES = (
    (1, 21, 22),
    (2, 17, 18),
    (3, 13, 19),
    (4, 8, 18),
    (4, 12, 14),
    (6, 7, 13),
    (7, 20, 21),
    (10, 13, 15),
    (11, 18, 21),
)
WORKED_ROOTS = (5, 9, 13, 16)
WORKED_BLOCKS = (
    (1, 22),
    (2, 17),
    (3, 19),
    (4, 8),
    (6, 7),
    (10, 15),
    (11, 18),
    (12, 14),
    (20, 21),
)
WORKED_LINKS = (21, 18, 13, 13, 4, 18, 21, 7)
WORKED_FINAL_ROOT = 13

# exhaustive sweep shapes: every code decodes, re-encodes, and the forest
# sets match the oracle (all vertex counts stay at or below 9)
SWEEP_SHAPES = tuple(
    [(2, s, k) for s in range(0, 5) for k in range(0, 3)]
    + [(3, s, k) for s in range(0, 4) for k in range(0, 2)]
    + [(4, s, k) for s in range(0, 3) for k in range(0, 2)]
)


@pytest.fixture
def worked_forest() -> RootedForest:
    return RootedForest(n=22, b=3, edges=WORKED_EDGES, roots=WORKED_ROOTS)


@pytest.fixture
def worked_code() -> ForestCode:
    return ForestCode(
        ForestShape(b=3, s=9, k=3),
        WORKED_ROOTS,
        WORKED_FINAL_ROOT,
        WORKED_BLOCKS,
        WORKED_LINKS,
    )


# one visible pass/fail line per acceptance criterion, printed after the
# test summary so it survives pytest's output capture; notes travel on the
# report via the record_property fixture
_ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        note = dict(report.user_properties).get("note", "")
        _ACCEPTANCE_RESULTS.append(
            (report.nodeid.split("::")[-1], report.outcome, note)
        )


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, outcome, note in _ACCEPTANCE_RESULTS:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        suffix = f" ({note})" if note else ""
        terminalreporter.write_line(f"  {name}: {verdict}{suffix}")
