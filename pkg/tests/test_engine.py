"""Certification engine, exact tiny Ramsey values, and stochastic
witness search.

The search determinism constants below were produced by this package
and frozen; they pin bit-for-bit reproducibility across runs and across
worker counts, which the parallel merge rule guarantees by design.
"""

import json
import random

import pytest

from rtw8.claims import build_witness, certification_rows, claim_for
from rtw8.containment import (
    contains_subgraph_bruteforce,
    contains_tree,
    contains_wheel8,
)
from rtw8.engine import (
    certify,
    certify_all,
    exact_ramsey,
    search_cost,
    search_critical,
    worker_count,
)
from rtw8.errors import ParameterError, ShapeError, SizeError
from rtw8.graphs import Graph, disjoint_union, graph6_encode
from rtw8.trees import TreeSpec, parse_tree_tag

TWO_K6 = disjoint_union(Graph.complete(6), Graph.complete(6))


def _comparable(cert) -> dict:
    payload = json.loads(cert.to_json())
    payload.pop("elapsed")
    return payload


# -- certify -----------------------------------------------------------------


def test_certify_order7_claims():
    a = certify(claim_for(TreeSpec.named("A", 7)))
    assert a.certified and a.tree_absent and a.wheel_absent_in_complement
    assert a.witness_graph6 == graph6_encode(TWO_K6)

    e = certify(claim_for(TreeSpec.named("E", 7)))
    assert e.certified and e.verdict == "Certified"


def test_certify_refutes_a_wrong_witness():
    cert = certify(claim_for(TreeSpec.named("A", 7)), witness=Graph.complete(13))
    assert not cert.certified and cert.verdict == "Refuted"
    assert "tree embeds" in cert.reason
    assert not cert.tree_absent


def test_certify_refutes_wrong_order():
    cert = certify(claim_for(TreeSpec.named("A", 7)), witness=Graph.empty(11))
    assert not cert.certified
    assert "order" in cert.reason


def test_certify_is_deterministic():
    claim = claim_for(TreeSpec.named("D", 7))
    assert _comparable(certify(claim)) == _comparable(certify(claim))


def test_certify_all_matches_serial_across_workers():
    rows = certification_rows()[:12]
    serial = [_comparable(c) for c in certify_all(rows, workers=1)]
    parallel = [_comparable(c) for c in certify_all(rows, workers=3)]
    assert serial == parallel


def test_certified_witnesses_survive_bruteforce_spot_audit():
    rng = random.Random(0)
    for tag in ("A", "D"):
        claim = claim_for(TreeSpec.named(tag, 7))
        cert = certify(claim)
        assert cert.certified
        witness = build_witness(claim)
        tree = claim.tree.build()
        for _ in range(12):
            sample = rng.sample(range(witness.order), 8)
            induced = witness.induced(sample)
            brute = contains_subgraph_bruteforce(induced, tree)
            assert brute is None
            assert (contains_tree(induced, tree) is None) == (brute is None)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("RTW8_THREADS", "4")
    assert worker_count() == 4
    monkeypatch.setenv("RTW8_THREADS", "zero")
    with pytest.raises(ParameterError):
        worker_count()
    monkeypatch.delenv("RTW8_THREADS")
    assert worker_count() == 1


# -- exact engine -------------------------------------------------------------


def test_exact_edge_vs_wheel():
    result = exact_ramsey(Graph.complete(2), Graph.wheel(8), 12)
    assert (result.value, result.status) == (9, "exact")


def test_exact_p3_p3():
    result = exact_ramsey(Graph.path(3), Graph.path(3), 5)
    assert result.value == 3
    assert result.critical_graph6 == "A?"  # the single-edge graph at order 2


def test_exact_p4_p4():
    result = exact_ramsey(Graph.path(4), Graph.path(4), 8)
    assert result.value == 5


def test_exact_p4_w8():
    result = exact_ramsey(Graph.path(4), Graph.wheel(8), 12)
    assert result.value == 10
    assert "P_4-free" in result.method


def test_exact_inconclusive_is_explicit():
    result = exact_ramsey(Graph.path(4), Graph.wheel(8), 8)
    assert result.value is None and result.status == "inconclusive"
    assert str(result) == "inconclusive"


def test_exact_critical_graphs_are_genuine():
    result = exact_ramsey(Graph.path(4), Graph.path(4), 8)
    from rtw8.graphs import graph6_decode

    critical = graph6_decode(result.critical_graph6)
    assert critical.order == result.value - 1
    assert contains_subgraph_bruteforce(critical, Graph.path(4)) is None
    assert contains_subgraph_bruteforce(critical.complement(), Graph.path(4)) is None


# -- stochastic search ---------------------------------------------------------


def test_search_cost_is_zero_exactly_on_witnesses():
    tree = parse_tree_tag("A").build()
    assert search_cost(TWO_K6, tree) == 0
    assert search_cost(Graph.complete(12), tree) == 8  # capped embeddings, no wheels


def test_search_validates_inputs():
    tree = TreeSpec.named("A", 7)
    with pytest.raises(ShapeError):
        search_critical(Graph.cycle(5), 10)
    with pytest.raises(SizeError):
        search_critical(tree, 65)
    with pytest.raises(ParameterError):
        search_critical(tree, 5)


def test_search_finds_an_order12_witness():
    tree_spec = TreeSpec.named("A", 7)
    g = search_critical(tree_spec, 12, seed=0, budget=20_000)
    assert g is not None and g.order == 12
    assert contains_tree(g, tree_spec.build()) is None
    assert contains_wheel8(g.complement()) is None


def test_search_matches_frozen_seed_output():
    g = search_critical(TreeSpec.named("A", 7), 12, seed=7, budget=10_000)
    assert g is not None and graph6_encode(g) == "KwE_OvCAOesC"


def test_search_is_worker_count_invariant():
    serial = search_critical(TreeSpec.named("A", 7), 12, seed=7, budget=10_000, workers=1)
    pooled = search_critical(TreeSpec.named("A", 7), 12, seed=7, budget=10_000, workers=3)
    assert graph6_encode(serial) == graph6_encode(pooled) == "KwE_OvCAOesC"


def test_search_reconstructs_the_order13_witness_bound():
    tree_spec = TreeSpec.named("D", 7)
    g = search_critical(tree_spec, 13, seed=0, budget=60_000)
    assert g is not None
    assert contains_tree(g, tree_spec.build()) is None
    assert contains_wheel8(g.complement()) is None


def test_search_returns_none_when_budget_is_tiny():
    g = search_critical(TreeSpec.two_star_bridge(8, 4), 15, seed=0, budget=40)
    assert g is None
