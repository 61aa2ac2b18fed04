import random

import pytest

from reshilb.series import LaurentPoly, RationalSeries


def random_series(rng: random.Random, max_pole: int = 4, span: int = 5) -> RationalSeries:
    lo = rng.randint(-span, span)
    terms = {e: rng.randint(-9, 9) for e in range(lo, lo + rng.randint(0, span))}
    return RationalSeries(LaurentPoly(terms), rng.randint(0, max_pole))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    """Print one verdict line per acceptance criterion that ran."""
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "_results", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number].line())
