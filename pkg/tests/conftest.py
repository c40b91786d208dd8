import pytest
from hypothesis import HealthCheck, settings

from fourpoints import linalg as la

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def default_prime():
    """Every test starts and ends at the default prime."""
    if la.prime() != la.DEFAULT_PRIME:
        la.set_prime(la.DEFAULT_PRIME)
    yield
    if la.prime() != la.DEFAULT_PRIME:
        la.set_prime(la.DEFAULT_PRIME)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_line():
    """Collect a criterion line for the end-of-run summary."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
