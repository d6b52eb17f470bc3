from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ec_kit.graph import make_graph  # noqa: E402


@st.composite
def graphs(draw, min_n=1, max_n=7, max_m=None, min_m=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return make_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_m, len(pairs)), max_size=max_m))
    return make_graph(n, chosen)
