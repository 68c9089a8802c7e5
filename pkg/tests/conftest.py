import pytest

_criteria: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--slow-suites", action="store_true", default=False,
                     help="run the long-running acceptance suites")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow_suite: long-running suite, needs --slow-suites")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow-suites"):
        return
    skip = pytest.mark.skip(reason="needs --slow-suites")
    for item in items:
        if "slow_suite" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body calls ``criterion(ok, detail)``."""
    name = request.node.name

    def record(ok: bool, detail: str = ""):
        _criteria.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
