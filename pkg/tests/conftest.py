import numpy as np
import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def criterion():
    """Record one acceptance criterion: call with (number, title, max_error, threshold)."""
    def _record(number, title, max_error, threshold):
        passed = bool(max_error <= threshold)
        line = (f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {title} "
                f"(max_error={max_error:.3e}, threshold={threshold:.1e})")
        ACCEPTANCE_LINES.append((number, line))
        print(line)
        assert passed, line
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
