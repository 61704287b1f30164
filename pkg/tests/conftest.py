import pytest

_CRITERIA: list[tuple[str, str, str]] = []


class _Criterion:
    def __init__(self, name):
        self.name = name

    def check(self, ok: bool, detail: str = ""):
        line = (self.name, "PASS" if ok else "FAIL", detail)
        _CRITERIA.append(line)
        print(f"[{line[1]}] {self.name} {detail}")
        assert ok, f"{self.name}: {detail}"


@pytest.fixture
def criterion(request):
    return _Criterion(request.node.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in _CRITERIA:
        terminalreporter.write_line(f"{status}  {name}  {detail}")
