"""Tree builders, enumeration, canonical codes, and catalog reconstruction.

Enumeration is validated against two independent references: exhaustive
Prüfer-sequence generation of all labeled trees (complete for order
<= 8, sampled above), and the known free-tree count sequence
1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159 for n = 1..14.
Canonical codes are validated against brute-force permutation
isomorphism.
"""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import labeled_trees, prufer_decode
from rtw8.errors import ParameterError, ReconstructionError
from rtw8.graphs import Graph, is_connected
from rtw8.trees import (
    TreeSpec,
    canonical_code,
    delta5_stability,
    enumerate_trees,
    is_tree,
    parse_tree_tag,
    reconstruct_catalog,
)

FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23,
                    9: 47, 10: 106, 11: 235, 12: 551, 13: 1301, 14: 3159}


# -- builders ---------------------------------------------------------------


def test_subdivided_star_small():
    g = TreeSpec.subdivided_star(6, 1, 1).build()
    assert g.order == 6 and g.max_degree() == 4 and is_tree(g)


def test_named_d_matches_drawn_edges():
    drawn = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    assert canonical_code(drawn) == canonical_code(TreeSpec.named("D", 7).build())


def test_two_star_bridge_degenerates_to_path():
    g = TreeSpec.two_star_bridge(4, 2).build()
    assert canonical_code(g) == canonical_code(Graph.path(4))


def test_subdivided_star_3_1_matches_drawn_edges():
    # center 0; three once-subdivided arms; two direct leaves
    drawn = Graph.from_edges(
        9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (0, 8)]
    )
    built = TreeSpec.subdivided_star(9, 3, 1).build()
    assert canonical_code(drawn) == canonical_code(built)


@pytest.mark.parametrize("n,delta", [(7, 3), (10, 5), (12, 7), (12, 8 - 1)])
def test_catalog_builds_are_trees_with_classed_degree(n, delta):
    for entry in reconstruct_catalog(n, delta):
        g = entry.tree
        assert g.order == n
        assert is_tree(g) and is_connected(g)
        assert g.max_degree() == delta


# -- enumeration ------------------------------------------------------------


def test_enumeration_matches_free_tree_counts():
    for n, count in FREE_TREE_COUNTS.items():
        assert len(enumerate_trees(n)) == count


def test_enumeration_small_cases():
    assert len(enumerate_trees(1)) == 1
    four = enumerate_trees(4)
    codes = {canonical_code(g) for g in four}
    assert codes == {canonical_code(Graph.path(4)), canonical_code(Graph.star(4))}


def test_order7_max_degree_3_has_five_classes():
    five = [g for g in enumerate_trees(7) if g.max_degree() == 3]
    assert len(five) == 5
    named = {canonical_code(TreeSpec.named(t, 7).build()) for t in "ABCDE"}
    assert {canonical_code(g) for g in five} == named


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_enumeration_equals_exhaustive_prufer_dedup(n):
    codes = {
        canonical_code(prufer_decode(seq, n))
        for seq in itertools.product(range(n), repeat=n - 2)
    }
    assert codes == {canonical_code(g) for g in enumerate_trees(n)}


@pytest.mark.parametrize("n", [9, 10])
def test_enumeration_covers_sampled_prufer_trees(n):
    # full Prüfer spaces at these orders are 9^7 and 10^8; the exact
    # class count is pinned above, and sampling rules out missing classes
    enumerated = {canonical_code(g) for g in enumerate_trees(n)}
    assert len(enumerated) == FREE_TREE_COUNTS[n]
    rng = random.Random(n)
    for _ in range(3000):
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        assert canonical_code(prufer_decode(seq, n)) in enumerated


# -- canonical codes ---------------------------------------------------------


def _permuted(g: Graph, perm: list[int]) -> Graph:
    return Graph.from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def _isomorphic_bruteforce(a: Graph, b: Graph) -> bool:
    if a.order != b.order or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    edges_b = set(b.edges())
    for perm in itertools.permutations(range(a.order)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in a.edges()} == edges_b:
            return True
    return False


def test_relabeled_path_has_equal_code():
    p5 = Graph.path(5)
    assert canonical_code(p5) == canonical_code(_permuted(p5, [3, 1, 4, 0, 2]))


def test_named_a_and_b_have_distinct_codes():
    assert canonical_code(TreeSpec.named("A", 7).build()) != canonical_code(
        TreeSpec.named("B", 7).build()
    )


def test_bicentral_path_code_is_stable():
    p4 = Graph.path(4)
    for perm in itertools.permutations(range(4)):
        assert canonical_code(_permuted(p4, list(perm))) == canonical_code(p4)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_codes_agree_with_permutation_isomorphism(n):
    classes = enumerate_trees(n)
    for a, b in itertools.combinations(classes, 2):
        # enumeration already deduplicated: distinct classes must not be
        # isomorphic (degree prefilter keeps the 8! scans rare)
        assert not _isomorphic_bruteforce(a, b)
    rng = random.Random(n)
    for g in classes:
        perm = list(range(n))
        rng.shuffle(perm)
        h = _permuted(g, perm)
        assert _isomorphic_bruteforce(g, h)
        assert canonical_code(g) == canonical_code(h)


@given(labeled_trees(max_order=10), st.randoms(use_true_random=False))
@settings(max_examples=150)
def test_code_is_invariant_under_relabeling(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert canonical_code(g) == canonical_code(_permuted(g, perm))


@given(labeled_trees(max_order=12))
@settings(max_examples=150)
def test_prufer_trees_are_trees(g):
    assert is_tree(g) and is_connected(g) and g.edge_count() == g.order - 1


# -- catalog reconstruction ---------------------------------------------------


def test_reconstruct_order7_names_a_through_e():
    entries = reconstruct_catalog(7, 3)
    assert [e.tag for e in entries] == ["A", "B", "C", "D", "E"]


def test_reconstruct_one_step_down_series():
    entries = reconstruct_catalog(9, 5)
    assert {e.tag for e in entries} == {
        "S_9(4)", "S_9[4]", "S_9(1,3)", "S_9(3,1)", "T_A(9)", "T_B(9)", "T_C(9)",
    }
    assert len(reconstruct_catalog(12, 8)) == 7


def test_reconstruct_two_steps_down_is_bijective_at_stable_orders():
    for n in (10, 12):
        entries = reconstruct_catalog(n, n - 5)
        assert len(entries) == 19
        assert len({e.tag for e in entries}) == 19
        assert len({e.canon for e in entries}) == 19


def test_reconstruct_below_threshold_raises_with_diagnostic():
    with pytest.raises(ReconstructionError) as exc:
        reconstruct_catalog(8, 3)
    assert "tag conflict" in str(exc.value)
    with pytest.raises(ReconstructionError):
        reconstruct_catalog(9, 4)


def test_reconstruct_rejects_other_deltas():
    with pytest.raises(ParameterError):
        reconstruct_catalog(10, 4)


def test_stability_threshold():
    threshold, counts = delta5_stability(12)
    assert threshold == 10
    assert counts == {8: 10, 9: 17, 10: 19, 11: 19, 12: 19}


# -- tag parsing --------------------------------------------------------------


def test_parse_concrete_tags():
    assert parse_tree_tag("A").build().order == 7
    assert parse_tree_tag("T_E(8)").build().order == 8
    assert parse_tree_tag("S_9(4)").build().order == 9
    assert parse_tree_tag("S_12").build() == Graph.star(12)
    assert parse_tree_tag("P_7").build() == Graph.path(7)


def test_parse_template_tags_take_n():
    assert parse_tree_tag("S_n[4]", 9).build().order == 9
    assert parse_tree_tag("T_E(8)", 8).build().order == 8


def test_parse_conflicts_and_garbage():
    with pytest.raises(ParameterError):
        parse_tree_tag("T_E(8)", 9)
    with pytest.raises(ParameterError):
        parse_tree_tag("S_n[4]")
    with pytest.raises(ParameterError):
        parse_tree_tag("garbage!!")
