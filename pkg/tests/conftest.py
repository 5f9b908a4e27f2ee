import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("exact")

_ACCEPTANCE: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--jones-fixtures", default=None, help="JSON file of colored Jones values for the fixture criterion")


class AcceptanceLog:
    def record(self, number: int, title: str, ok: bool, note: str = "") -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if note:
            line += f"  [{note}]"
        print(line)
        _ACCEPTANCE.append(line)


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


@pytest.fixture(scope="session")
def jones_fixtures(request):
    return request.config.getoption("--jones-fixtures")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
