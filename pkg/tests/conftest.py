import pytest

from primroot.config import BoundConfig

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str, verdict: str | None = None) -> None:
    verdict = verdict or ("PASS" if ok else "FAIL")
    _ACCEPTANCE_LINES.append(f"criterion {number:>2}: {verdict}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cfg():
    return BoundConfig()
