import json
from pathlib import Path

import pytest

from stuckcells import codes
from stuckcells.linalg import read_matrix
from stuckcells.smc import PsaPattern

DATA = Path(__file__).parent / "data"

# Filled by test_acceptance.py; reported once at the end of the session.
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (len(k), k)):
        ok, what = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {what}")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def ex1_code():
    return codes.from_matrix(read_matrix(DATA / "ex1_H.txt"), 3, verify=True, name="ex1")


@pytest.fixture(scope="session")
def mask_2x8():
    return read_matrix(DATA / "mask_2x8.txt")


@pytest.fixture(scope="session")
def walkthrough_code():
    return codes.from_matrix(read_matrix(DATA / "walkthrough_4x15.txt"), 3, verify=False, name="walkthrough")


@pytest.fixture(scope="session")
def c3_golden():
    g = json.loads((DATA / "c3_walkthrough.json").read_text())
    g["pattern"] = PsaPattern(g["positions"], g["levels"])
    return g
