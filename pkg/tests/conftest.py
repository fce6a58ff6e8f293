import os
import sys
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qtrd import kernels  # noqa: E402
from qtrd.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

BACKENDS = ["python"] + (["compiled"] if kernels.has_compiled() else [])


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False, no_isolated=False):
    if connected or no_isolated:
        min_n = max(min_n, 2)
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, picks) if keep]
    if connected or no_isolated:
        # thread a spanning path through the vertices so the constraint holds
        order = draw(st.permutations(range(n)))
        edges += [(order[i], order[i + 1]) for i in range(n - 1)]
    return Graph.from_edges(n, edges)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
