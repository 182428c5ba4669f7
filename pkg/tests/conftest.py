import pytest

from realdelpezzo.analysis import analyze_cover
from realdelpezzo.corpus import named_curves, random_corpus

RANDOM_SEED = 7
RANDOM_COUNT = 6


def _corpus():
    return named_curves() + random_corpus(RANDOM_COUNT, RANDOM_SEED)


@pytest.fixture(scope="session")
def corpus():
    return _corpus()


@pytest.fixture(scope="session")
def analyses(corpus):
    """name -> CoverAnalysis for every corpus curve, computed once per session."""
    return {c.name: analyze_cover(c.trisection, c.sign) for c in corpus}


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
