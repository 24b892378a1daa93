"""Shared fixtures: the acceptance corpus and its verification run."""

import time

import pytest

from saitodual import generate_corpus, run_batch

ACCEPTANCE_RESULTS = []


def record_acceptance(number, name, passed):
    ACCEPTANCE_RESULTS.append((number, name, passed))
    return passed


@pytest.fixture(scope="session")
def corpus_sample():
    """A small mixed corpus for unit-level property checks."""
    corpus, _ = generate_corpus(3, 4, include_sums=True)
    return corpus[::3]


@pytest.fixture(scope="session")
def corpus45():
    """The acceptance corpus: all blocks and sums with <= 4 variables and
    exponents <= 5, deduplicated up to variable permutation."""
    corpus, truncated = generate_corpus(4, 5, include_sums=True)
    assert not truncated
    return corpus


@pytest.fixture(scope="session")
def batch45(corpus45):
    """Full verification run over the acceptance corpus, with per-poly
    records retained and the wall time recorded."""
    start = time.monotonic()
    report = run_batch(corpus45, keep_records=True)
    report.elapsed = time.monotonic() - start
    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({name}): {status}")
