"""Shared fixtures: small group tables used across the test modules, and
the acceptance-criteria reporter that prints one line per criterion in the
terminal summary."""

import os
import re

import pytest

from cayleygrr import grouptab, perm

FIXTURE_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "src", "cayleygrr", "fixtures")


def _table(*cycle_texts):
    degree = max(int(t) for text in cycle_texts
                 for t in re.findall(r"\d+", text))
    gens = [perm.parse_cycles(text, degree) for text in cycle_texts]
    return grouptab.enumerate_group(gens)


@pytest.fixture(scope="session")
def a5_table():
    return _table("(1,2,3)", "(1,2,3,4,5)")


@pytest.fixture(scope="session")
def a7_table():
    return _table("(1,2,3)", "(1,2,3,4,5,6,7)")


@pytest.fixture(scope="session")
def m11_table():
    return _table("(1,2,3,4,5,6,7,8,9,10,11)", "(2,4)(3,5)(6,8)(9,10)")


@pytest.fixture(scope="session")
def f42_table():
    # Frobenius group of order 42 (the normalizer of a 7-cycle in S_7)
    return _table("(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)")


# ---------------------------------------------------------------------------
# acceptance reporting
# ---------------------------------------------------------------------------

_acceptance_lines = {}


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion and assert it.

    Usage: ``acceptance(3, ok, "construction exact for n in [14,30]")``.
    """

    def record(num, ok, text):
        _acceptance_lines[num] = (bool(ok), text)
        assert ok, f"criterion {num}: {text}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_acceptance_lines):
        ok, text = _acceptance_lines[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d} [{status}] {text}")
