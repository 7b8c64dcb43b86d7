import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcocycle.cocycle import q6_appendix_cocycle
from qcocycle.quandle import make_dihedral, make_q6


@pytest.fixture(scope="session")
def q6():
    return make_q6()


@pytest.fixture(scope="session")
def phi_q6():
    return q6_appendix_cocycle()


@pytest.fixture(scope="session")
def r3():
    return make_dihedral(3)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
