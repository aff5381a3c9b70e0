import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from zerodecomp.parser import parse_system

sys.set_int_max_str_digits(0)

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


def load(name):
    return parse_system((SYSTEMS / f"{name}.poly").read_text())


@pytest.fixture
def ex1():
    return load("example1")


@pytest.fixture
def ex2():
    return load("example2")


@pytest.fixture
def ex3():
    return load("example3")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
