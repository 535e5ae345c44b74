import random

import pytest

import untwist.alexander


@pytest.fixture(autouse=True)
def _check_snf(monkeypatch):
    # every SNF computed in tests re-verifies A*M*B == D and the chain
    monkeypatch.setattr(untwist.alexander, "CHECK", True)


@pytest.fixture
def rng():
    return random.Random(20240611)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is not None:
        _ACCEPTANCE[crit[0]] = (crit[1], report.outcome, dict(report.user_properties).get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        text, outcome, detail = _ACCEPTANCE[n]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {n}. {text}" + (f"  ({detail})" if detail else ""))
