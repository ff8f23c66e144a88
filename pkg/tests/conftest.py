import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fcomplex.complex import from_words  # noqa: E402
from fcomplex.io import parse_complex  # noqa: E402
from fcomplex.suite import load_data  # noqa: E402

T_WORDS = "123 125 136 145 146 234 246 256 345 356"
T_COMPLEMENT_WORDS = "456 346 245 236 235 156 135 134 126 124"
A_WORDS = "1345 1347 1358 1367 1368 1456 1468 1478 1567 1578"


@pytest.fixture(scope="session")
def data():
    return load_data()


@pytest.fixture(scope="session")
def T():
    return from_words(6, T_WORDS)


@pytest.fixture(scope="session")
def Tc():
    return from_words(6, T_COMPLEMENT_WORDS)


@pytest.fixture(scope="session")
def gamma():
    return from_words(8, A_WORDS)


@pytest.fixture(scope="session")
def delta1(data):
    return parse_complex(data["delta1.cplx"])


@pytest.fixture(scope="session")
def delta2(data):
    return parse_complex(data["delta2.cplx"])


@pytest.fixture(scope="session")
def counterexample():
    return from_words(9, "1234 1235 1278 1279")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        terminalreporter.write_line(results[criterion])
