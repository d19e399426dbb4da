import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_report = rep


@pytest.fixture
def criterion(request, capsys):
    """Collects a detail line; prints ``AC<k>: PASS|FAIL`` once the test has run."""
    info = {"detail": ""}
    yield info
    rep = getattr(request.node, "call_report", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    name = request.node.get_closest_marker("criterion").args[0]
    with capsys.disabled():
        print(f"\n{name}: {status}  {info['detail']}")
