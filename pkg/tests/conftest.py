import pytest

from wsiqr.config import DEFAULT_SEED
from wsiqr.verify import run_verification

_REPORT = {}


@pytest.fixture(scope="session")
def verify_report():
    if "rep" not in _REPORT:
        _REPORT["rep"] = run_verification(DEFAULT_SEED)
    return _REPORT["rep"]


def pytest_terminal_summary(terminalreporter):
    rep = _REPORT.get("rep")
    if rep is None:
        return
    terminalreporter.section("acceptance criteria")
    for c in rep.criteria:
        terminalreporter.write_line(c.line())
    n_pass = sum(c.passed for c in rep.criteria)
    terminalreporter.write_line(f"{n_pass}/{len(rep.criteria)} criteria passed")
