import os

import pytest
from hypothesis import HealthCheck, settings

from revlexgin._kernels import ckernels, pykernels

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture(params=["python", "cython"])
def kernels(request):
    if request.param == "cython":
        if ckernels is None:
            pytest.skip("compiled kernels not built")
        return ckernels
    return pykernels


@pytest.fixture
def acceptance_report():
    def report(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
