import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_CRITERIA: dict[int, tuple[str, bool, str]] = {}
ACCEPTANCE_TITLES = {
    1: "relation sweep",
    2: "eigenvalue relations to |kappa| <= 20",
    3: "engine self-verification",
    4: "orthonormality",
    5: "forced vanishing at |kappa| = 1",
    6: "negative control",
}


@pytest.fixture
def criterion():
    """record(number, passed, detail): one pass/fail line per acceptance criterion."""

    def record(number: int, passed: bool, detail: str) -> bool:
        _CRITERIA[number] = (ACCEPTANCE_TITLES[number], bool(passed), detail)
        print(f"criterion {number} [{'PASS' if passed else 'FAIL'}] {ACCEPTANCE_TITLES[number]}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in ACCEPTANCE_TITLES.items():
        if number in _CRITERIA:
            _, ok, detail = _CRITERIA[number]
            terminalreporter.write_line(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
        else:
            terminalreporter.write_line(f"criterion {number} [NOT RUN] {title}")
