import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from nakphi import from_kupisch, from_relations

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402


@pytest.fixture
def e5():
    return from_kupisch(5, [3, 5, 4, 5, 4])


@pytest.fixture
def e8():
    return from_relations(8, [(1, 11), (4, 11), (5, 12), (7, 12)])


@pytest.fixture
def selfinj():
    return from_kupisch(3, [4, 4, 4])


@pytest.fixture
def rng():
    return random.Random(20241017)


@st.composite
def kupisch_series(draw, max_n=7, max_c=14):
    """Hypothesis strategy for valid cyclic Kupisch series."""
    n = draw(st.integers(3, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return oracles.random_kupisch(random.Random(seed), n, max_c)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per criterion; printed at the end of the run."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
