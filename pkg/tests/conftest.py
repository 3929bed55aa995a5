import pytest

from mixramsey.colouring import WordPair

Q2_WORDS = WordPair(2, "*001*1010100*", "*1010000*101*")
Q3_WORDS = WordPair(3, "*00001*001*1110100110010*", "*0100110010111*100*10000*")

_acceptance = []


@pytest.fixture
def q2_words():
    return Q2_WORDS


@pytest.fixture
def q3_words():
    return Q3_WORDS


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for name, outcome in _acceptance:
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
