import pytest

_CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion; printed in the terminal summary."""

    def record(number: int, title: str):
        _CRITERIA[number] = (title, False)
        request.node.user_properties.append(("criterion", number))
        return number

    yield record
    for key, value in request.node.user_properties:
        if key == "criterion":
            title, _ = _CRITERIA[value]
            _CRITERIA[value] = (title, getattr(request.node, "_passed", False))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}")
