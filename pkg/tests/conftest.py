import sys
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from homog3.core import NGraph  # noqa: E402


@st.composite
def ngraphs(draw, min_size=0, max_size=7, colors=(2, 3)):
    n = draw(st.integers(min_size, max_size))
    k = draw(st.sampled_from(colors)) if isinstance(colors, tuple) else colors
    vals = draw(st.lists(st.integers(0, k - 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return NGraph.from_upper(n, np.array(vals, dtype=np.int64), "RSTUV"[:k])


@st.composite
def permuted(draw, g):
    perm = draw(st.permutations(range(g.size)))
    return perm


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
