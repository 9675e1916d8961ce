import os
import sys

import hypothesis
from hypothesis import strategies as st

from hurwitz_atlas.core import Partition

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, min_weight=0, max_weight=8):
    d = draw(st.integers(min_weight, max_weight))
    parts = []
    left = d
    while left:
        part = draw(st.integers(1, left))
        parts.append(part)
        left -= part
    return Partition(parts)


@st.composite
def partition_pairs(draw, min_weight=1, max_weight=6):
    """Two partitions of the same weight."""
    d = draw(st.integers(min_weight, max_weight))
    a = draw(partitions(d, d))
    b = draw(partitions(d, d))
    return a, b


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
