from hypothesis import strategies as st


@st.composite
def partition_with_v(draw, max_v: int = 14):
    """A valid (parts, v): any subset of {1, .., v-1} sorted decreasing."""
    v = draw(st.integers(min_value=1, max_value=max_v))
    if v == 1:
        return (), 1
    parts = draw(st.frozensets(st.integers(min_value=1, max_value=v - 1)))
    return tuple(sorted(parts, reverse=True)), v


@st.composite
def graph_class(draw, max_v: int = 40):
    """A valid (v, e) pair."""
    v = draw(st.integers(min_value=1, max_value=max_v))
    e = draw(st.integers(min_value=0, max_value=v * (v - 1) // 2))
    return v, e
