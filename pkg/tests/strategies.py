"""Hypothesis strategies for graphs and labeled trees.

Graphs are drawn as an order plus an upper-triangle bitmask, which
shrinks toward fewer vertices and fewer edges.  Labeled trees are drawn
as Prüfer sequences, an independent construction from the package's own
tree machinery.
"""

from hypothesis import strategies as st

from rtw8.graphs import Graph


def _from_triangle_bits(order: int, mask: int) -> Graph:
    rows = [0] * order
    i = 0
    for v in range(1, order):
        for u in range(v):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(order, tuple(rows))


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 12) -> Graph:
    order = draw(st.integers(min_order, max_order))
    pairs = order * (order - 1) // 2
    mask = draw(st.integers(0, (1 << pairs) - 1)) if pairs else 0
    return _from_triangle_bits(order, mask)


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Labeled tree from a Prüfer sequence (the textbook decode)."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    rows = [0] * n
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for x in seq:
        leaf = leaves.pop(0)
        rows[leaf] |= 1 << x
        rows[x] |= 1 << leaf
        degree[x] -= 1
        if degree[x] == 1:
            import bisect

            bisect.insort(leaves, x)
    a, b = leaves
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return Graph(n, tuple(rows))


@st.composite
def labeled_trees(draw, min_order: int = 2, max_order: int = 10) -> Graph:
    n = draw(st.integers(min_order, max_order))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = tuple(draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))
    return prufer_decode(seq, n)


permutation_seeds = st.integers(0, 2**32 - 1)
