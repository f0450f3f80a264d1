import hypothesis
import pytest

from kchevalley.root_system import build_root_system

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")

@pytest.fixture(scope="session")
def root_systems():
    return {name: build_root_system(name) for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"]}


@pytest.fixture(scope="session")
def a2(root_systems):
    return root_systems["A2"]


@pytest.fixture(scope="session")
def g2(root_systems):
    return root_systems["G2"]


@pytest.fixture(scope="session")
def b2(root_systems):
    return root_systems["B2"]


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.lines():
            terminalreporter.write_line(line)
