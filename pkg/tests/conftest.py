import pytest

_ACCEPTANCE: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--regen-golden", action="store_true", default=False,
                     help="rewrite tests/golden/ from current CLI output")


@pytest.fixture
def criterion():
    """record(n, title, ok, detail): one PASS/FAIL line per acceptance criterion."""

    def record(n, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {n}: {title}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
