from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from loopspectra import LoopedGraph, SimpleGraph, make_looped


@st.composite
def simple_graphs(draw, max_n: int = 7, min_n: int = 1) -> SimpleGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, (p for p, keep in zip(pairs, picks) if keep))


@st.composite
def looped_graphs(draw, max_n: int = 7, min_n: int = 1) -> LoopedGraph:
    base = draw(simple_graphs(max_n=max_n, min_n=min_n))
    loops = draw(st.sets(st.integers(min_value=0, max_value=base.n - 1)))
    return make_looped(base, loops)
