import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions(draw, max_weight=10, max_part=None):
    n = draw(st.integers(0, max_weight))
    parts = []
    cap = n if max_part is None else min(n, max_part)
    while n:
        x = draw(st.integers(1, min(n, cap)))
        parts.append(x)
        n -= x
        cap = x
    return tuple(sorted(parts, reverse=True))


@pytest.fixture(autouse=True)
def _fresh_cache():
    from schurstar import schur

    yield
    schur.new_cache_entries()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
