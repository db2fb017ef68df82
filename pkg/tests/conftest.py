import time

import pytest

# Populated by tests/test_acceptance.py as each criterion runs.
ACCEPTANCE_CRITERIA = {
    1: "canonical six-system verdict table",
    2: "seeded 200-system audit sweep",
    3: "norm bridge between measure and weight presentations",
    4: "shadowing tolerance on doubling and split weights",
    5: "brute-force expansivity witnesses and certificates",
    6: "implication coherence across the sweep",
    7: "distortion constants against exhaustive scans",
}

_RESULTS = {}
_TIMINGS = {}


def record_criterion(number, *, elapsed=None):
    _TIMINGS[number] = elapsed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number = marker.args[0]
    previous = _RESULTS.get(number, True)
    _RESULTS[number] = previous and report.passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_CRITERIA):
        if number not in _RESULTS:
            continue
        verdict = "PASS" if _RESULTS[number] else "FAIL"
        elapsed = _TIMINGS.get(number)
        suffix = f" ({elapsed:.2f} s)" if elapsed is not None else ""
        terminalreporter.write_line(
            f"criterion {number} {verdict}: {ACCEPTANCE_CRITERIA[number]}{suffix}"
        )


class Stopwatch:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


@pytest.fixture
def stopwatch():
    return Stopwatch
