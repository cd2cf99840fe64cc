import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record pass/fail of an acceptance criterion for the end-of-run summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE.setdefault(label, "PASS")
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is None or not rep.passed:
        ACCEPTANCE[label] = "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[label]}  criterion {label}")
