"""Acceptance suite: one test per numbered criterion.

Each test prints the one-line verdict of the corresponding check and then
asserts it.  The checks live in reshilb.verify so the CLI ``verify``
command and this suite report identical results.
"""
import json

import pytest

from reshilb.verify import CHECKS, run_check

_results = {}


def _result(number):
    if number not in _results:
        _results[number] = run_check(number)
    return _results[number]


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number):
    result = _result(number)
    print()
    print(result.line())
    if not result.passed:
        print(json.dumps(result.to_json()["details"], sort_keys=True, default=str)[:4000])
    assert result.passed, result.line()


def test_summary():
    lines = [_result(k).line() for k in sorted(CHECKS)]
    print()
    print("\n".join(lines))
    assert len(lines) == 12
