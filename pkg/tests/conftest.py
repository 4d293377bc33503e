import pytest
from hypothesis import settings

from pairpart.engine.enumeration import enumerate_p2nb

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def universe6():
    return enumerate_p2nb(6)


@pytest.fixture(scope="session")
def universe4():
    return enumerate_p2nb(4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import SUMMARY

    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY:
            terminalreporter.write_line(line)
