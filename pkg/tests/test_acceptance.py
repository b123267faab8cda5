"""Every acceptance criterion at full size; one PASS/FAIL line each.

Run with pytest, or directly: ``python3 tests/test_acceptance.py``.
"""

import sys

import pytest

from bqalg.suites import SUITES, run_suite

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []


@pytest.mark.parametrize("number", sorted(SUITES))
def test_criterion(number):
    res = run_suite(number)
    line = res.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    for failure in res.failures[:20]:
        print("   ", failure)
    assert res.passed, "\n".join(res.failures[:20])


if __name__ == "__main__":
    ok = True
    for number in sorted(SUITES):
        res = run_suite(number)
        print(res.line(), flush=True)
        for failure in res.failures[:20]:
            print("   ", failure)
        ok &= res.passed
    sys.exit(0 if ok else 1)
