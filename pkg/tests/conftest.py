import re

import pytest

from cmgraph.fixtures import fig1_graph

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


@pytest.fixture(scope="session")
def fig1():
    return fig1_graph()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion."""
    verdicts: dict[int, bool] = {}
    for bucket, ok in (("passed", True), ("failed", False), ("error", False)):
        for report in terminalreporter.stats.get(bucket, []):
            m = _CRITERION.search(getattr(report, "nodeid", ""))
            if m:
                k = int(m.group(1))
                verdicts[k] = verdicts.get(k, True) and ok
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for k in sorted(verdicts):
        word = "PASS" if verdicts[k] else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {word}")
