import pytest
from hypothesis import strategies as st

from tricut.fixtures import load_fixture
from tricut.generators import corpus_params, gen_random_triconnected


@pytest.fixture(scope="session")
def corpus():
    return [gen_random_triconnected(n, seed) for n, seed in corpus_params()]


@pytest.fixture
def fx():
    return load_fixture


def names(g, vs):
    return {g.label(v) for v in vs}


def name_sets(g, sets):
    return {frozenset(names(g, s)) for s in sets}


def S(*words):
    """S("p q1 q3", "p q2 q4") -> {frozenset({"p","q1","q3"}), ...}"""
    return {frozenset(w.split()) for w in words}


# small random triconnected graphs, replayable from (n, seed)
graphs = st.builds(gen_random_triconnected, st.integers(7, 11), st.integers(0, 10_000))


# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
