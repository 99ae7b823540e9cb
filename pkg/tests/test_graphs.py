"""Bit-packed graph core: constructors, complement, union, graph6 codec.

The graph6 codec is checked against networkx as an independent
reference implementation, in both directions, plus the three worked
encodings frozen below.
"""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs
from rtw8.errors import Graph6ParseError, SizeError
from rtw8.graphs import (
    Graph,
    bits,
    connected_components,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    is_connected,
    mask_of,
    random_graph,
)


def test_bits_and_mask_of():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    assert list(bits(0)) == []


def test_complement_of_clique_is_empty():
    g = Graph.complete(5).complement()
    assert g.order == 5 and g.edge_count() == 0


def test_complement_of_two_cliques_is_complete_bipartite():
    g = disjoint_union(Graph.complete(6), Graph.complete(6)).complement()
    assert g == Graph.complete_multipartite([6, 6])


def test_complement_of_order_zero():
    assert Graph.empty(0).complement().order == 0


def test_disjoint_union_two_k6():
    g = disjoint_union(Graph.complete(6), Graph.complete(6))
    assert g.order == 12 and g.edge_count() == 30


def test_disjoint_union_identity():
    assert disjoint_union(Graph.empty(0), Graph.complete(3)) == Graph.complete(3)


def test_disjoint_union_k7_k44():
    g = disjoint_union(Graph.complete(7), Graph.complete_multipartite([4, 4]))
    assert g.order == 15 and g.edge_count() == 21 + 16


def test_complete_multipartite_shapes():
    assert Graph.complete_multipartite([4, 4]).edge_count() == 16
    g = Graph.complete_multipartite([4, 4, 4])
    assert g.order == 12 and all(g.degree(v) == 8 for v in range(12))
    assert Graph.complete_multipartite([1, 1, 1]) == Graph.complete(3)


def test_induced_subgraphs():
    assert Graph.complete(5).induced([0, 2, 4]) == Graph.complete(3)
    p4 = Graph.cycle(8).induced([2, 3, 4, 5])
    assert p4.edge_count() == 3 and sorted(p4.degrees()) == [1, 1, 2, 2]
    side = Graph.complete_multipartite([4, 4]).induced([0, 1, 2, 3])
    assert side.edge_count() == 0


def test_degree_helpers():
    assert Graph.complete_multipartite([4, 4]).min_degree() == 4
    assert Graph.star(7).max_degree() == 6
    two_k6 = disjoint_union(Graph.complete(6), Graph.complete(6))
    assert all(two_k6.degree(v) == 5 for v in range(12))


def test_components_and_connectivity():
    g = disjoint_union(Graph.complete(3), Graph.path(2))
    assert connected_components(g) == [0b00111, 0b11000]
    assert not is_connected(g)
    assert is_connected(Graph.path(5))
    assert is_connected(Graph.empty(1))


def test_wheel_shape():
    w8 = Graph.wheel(8)
    assert w8.order == 9 and w8.edge_count() == 16
    assert sorted(w8.degrees()) == [3] * 8 + [8]


# -- graph6 codec ----------------------------------------------------------

WORKED_ENCODINGS = [
    (Graph.complete(3), "Bw"),
    (Graph.empty(1), "@"),
    (Graph.from_edges(3, [(0, 1), (1, 2)]), "Bg"),
]


@pytest.mark.parametrize("g,code", WORKED_ENCODINGS)
def test_graph6_worked_encodings(g, code):
    assert graph6_encode(g) == code
    assert graph6_decode(code) == g
    # independent reference codec agrees on both directions
    assert nx.to_graph6_bytes(nx.Graph(list(g.edges())) if g.edge_count() else nx.empty_graph(g.order), header=False).strip().decode() == code


def _nx_of(g: Graph) -> nx.Graph:
    h = nx.empty_graph(g.order)
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("lo,hi", [(1, 30), (31, 62), (63, 128)])
def test_graph6_matches_reference_codec_per_band(lo, hi):
    rng = random.Random(lo)
    for _ in range(150):
        n = rng.randint(lo, hi)
        g = random_graph(n, rng, p=rng.random())
        code = graph6_encode(g)
        ref = nx.to_graph6_bytes(_nx_of(g), header=False).strip().decode()
        assert code == ref
        back = nx.from_graph6_bytes(code.encode())
        assert back.number_of_nodes() == n
        assert set(map(tuple, map(sorted, back.edges()))) == set(g.edges())
        assert graph6_decode(ref) == g


def test_graph6_rejects_malformed_input():
    with pytest.raises(Graph6ParseError) as exc:
        graph6_decode("B")  # truncated: order 3 needs one payload byte
    assert exc.value.offset is not None
    with pytest.raises(Graph6ParseError):
        graph6_decode("B\x19w")  # byte below the printable range


def test_order_cap_is_enforced():
    with pytest.raises(SizeError):
        Graph.empty(129)


def test_random_graph_is_seed_deterministic():
    a = random_graph(20, random.Random(42), p=0.4)
    b = random_graph(20, random.Random(42), p=0.4)
    assert a == b


# -- algebraic properties --------------------------------------------------


@given(graphs(max_order=24))
@settings(max_examples=150)
def test_complement_is_an_involution(g):
    assert g.complement().complement() == g


@given(graphs(max_order=24))
@settings(max_examples=150)
def test_edge_counts_conserved_under_complement(g):
    n = g.order
    assert g.edge_count() + g.complement().edge_count() == n * (n - 1) // 2


@given(graphs(max_order=16), graphs(max_order=16))
@settings(max_examples=100)
def test_disjoint_union_adds_orders_and_edges(a, b):
    g = disjoint_union(a, b)
    assert g.order == a.order + b.order
    assert g.edge_count() == a.edge_count() + b.edge_count()


@given(graphs(max_order=40))
@settings(max_examples=200)
def test_graph6_round_trip_identity(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
@settings(max_examples=60)
def test_complete_multipartite_edge_count(sizes):
    g = Graph.complete_multipartite(sizes)
    n = sum(sizes)
    expected = n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in sizes)
    assert g.edge_count() == expected
