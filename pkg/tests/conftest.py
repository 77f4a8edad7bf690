import hypothesis.strategies as st

from scoresets.graph_core import ArcState, BipartiteOrientedGraph


@st.composite
def graphs(draw, max_m=4, max_n=4):
    """Random graphs with uniformly chosen pair states."""
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    states = draw(st.lists(st.integers(0, 2), min_size=m * n, max_size=m * n))
    g = BipartiteOrientedGraph(m, n)
    for pos, state in enumerate(states):
        g.set_arc(pos // n, pos % n, ArcState(state))
    return g


@st.composite
def nondecreasing_sequences(draw, max_len=6, max_value=12):
    values = draw(st.lists(st.integers(0, max_value), min_size=1, max_size=max_len))
    return tuple(sorted(values))
