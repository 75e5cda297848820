import json
import sys
from pathlib import Path

import pytest

from quiversi.homext import clear_caches
from quiversi.quiver import parse_quiver

CORPUS = Path(__file__).parent / "corpus"


def load_quiver(name: str):
    return parse_quiver(json.loads((CORPUS / f"{name}.json").read_text()))


@pytest.fixture(scope="session")
def corpus():
    return load_quiver


@pytest.fixture(autouse=True, scope="module")
def _fresh_caches():
    yield
    clear_caches()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
