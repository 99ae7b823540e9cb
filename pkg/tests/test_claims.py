"""The claim ledger: value rules, witness recipes, the gallery file,
and the certification row set.

Every constructive recipe must build a graph of order exactly one below
the claimed bound; the two structural invariants behind the generic
recipes (two-clique complements are wheel-free, balanced 4-part
multipartite graphs avoid the listed trees) are checked directly.
"""

import json

import pytest

from rtw8.claims import (
    build_witness,
    certification_rows,
    claim_for,
    claimed_R,
    export_ledger,
    gallery_path,
    generic_lower_bound_witness,
    load_gallery,
    matching_rules,
    register_witness,
    unresolved_rows,
    VALUE_RULES,
)
from rtw8.containment import contains_tree, contains_wheel8
from rtw8.errors import (
    CoverageError,
    ParameterError,
    UnresolvedWitnessError,
    UnsupportedWitnessError,
)
from rtw8.graphs import Graph, graph6_encode
from rtw8.trees import TreeSpec, parse_tree_tag


# -- value rules ----------------------------------------------------------------


def test_rule_count_is_stable():
    assert len(VALUE_RULES) == 37


def test_claimed_values():
    assert claimed_R(TreeSpec.star(9)) == 19
    assert claimed_R(TreeSpec.path(4)) == 10
    assert claimed_R(parse_tree_tag("T_N(12)")) == 24


def test_ledger_totality():
    tags = (
        list("ABCDE")
        + ["S_9(4)", "S_9[4]", "S_9(1,3)", "S_9(3,1)", "T_A(9)", "T_B(9)", "T_C(9)"]
        + ["S_12(5)", "S_12[5]", "S_12(1,4)", "S_12(4,1)", "S_12(2,2)"]
        + [f"T_{x}(12)" for x in "DEFGHJKLMNPQRS"]
        + ["S_10", "S_9(1,1)", "S_9(1,2)", "S_9(3)", "S_9(2,1)"]
        + ["P_4", "P_5", "P_6", "P_7"]
    )
    assert len(tags) == 5 + 7 + 19 + 5 + 4
    for tag in tags:
        assert matching_rules(parse_tree_tag(tag)), tag


def test_uncovered_tree_raises_coverage_error():
    with pytest.raises(CoverageError):
        claim_for(TreeSpec.path(3))


def test_exported_ledger_lists_every_rule():
    rows = json.loads(export_ledger())
    assert len(rows) == len(VALUE_RULES) == 37
    assert all(
        set(row) == {"tag", "n_range", "r_formula", "recipe", "citation"}
        for row in rows
    )
    assert {"A", "B", "C", "D", "E", "S_n(4)", "S_n", "P_n", "T_N"} <= {
        row["tag"] for row in rows
    }


# -- witness recipes --------------------------------------------------------------


def test_order7_claims_build_documented_witnesses():
    d = claim_for(TreeSpec.named("D", 7))
    assert (d.r, d.witness.construction) == (14, "K6PlusH")
    w = build_witness(d)
    assert (w.order, w.edge_count()) == (13, 26)
    assert graph6_encode(w) == "L~~w?C@?GC_X?M"

    e = claim_for(TreeSpec.named("E", 7))
    w = build_witness(e)
    assert e.r == 15 and (w.order, w.edge_count()) == (14, 31)

    s94 = claim_for(parse_tree_tag("S_9(4)"))
    w = build_witness(s94)
    assert s94.r == 17 and (w.order, w.edge_count()) == (16, 56)  # 2K_8


def test_generic_witness_shapes():
    assert generic_lower_bound_witness(8).order == 14  # 2K_7
    g5 = generic_lower_bound_witness(5)
    assert g5.order == 8 and g5.edge_count() == 12  # 2K_4


def test_every_certification_row_witness_has_order_r_minus_1():
    rows = certification_rows()
    assert len(rows) == 254
    for claim in rows:
        assert build_witness(claim).order == claim.r - 1, claim.tag


def test_two_clique_complements_are_wheel_free():
    for n in range(5, 21):
        w = generic_lower_bound_witness(n)
        assert contains_wheel8(w.complement()) is None, n


@pytest.mark.parametrize("n", [8, 12])
def test_balanced_multipartite_avoids_dichotomy_trees(n):
    host = Graph.complete_multipartite([4] * (n // 4))
    for template in ("S_n(1,4)", "S_n(2,2)", "T_D", "T_N", "S_n[4]", "S_n(1,3)", "T_A", "T_B"):
        tree = parse_tree_tag(template, n).build()
        assert contains_tree(host, tree) is None, template


def test_external_recipe_is_unsupported():
    claim = claim_for(TreeSpec.star(8))
    assert claim.witness.construction == "External"
    with pytest.raises(UnsupportedWitnessError):
        build_witness(claim)


def test_unresolved_row_awaits_gallery_entry():
    (claim,) = unresolved_rows()
    assert (claim.tag, claim.n, claim.r) == ("S_8(4)", 8, 16)
    with pytest.raises(UnresolvedWitnessError):
        build_witness(claim)


# -- witness gallery ---------------------------------------------------------------


def test_gallery_round_trip(tmp_path):
    path = tmp_path / "gallery.txt"
    g = generic_lower_bound_witness(6)
    register_witness("test-entry", g, path=path)
    register_witness("second", Graph.complete(3), path=path)
    gallery = load_gallery(path)
    assert gallery["test-entry"] == g
    assert gallery["second"] == Graph.complete(3)


def test_gallery_rejects_tags_with_spaces(tmp_path):
    with pytest.raises(ParameterError):
        register_witness("bad tag", Graph.complete(3), path=tmp_path / "g.txt")


def test_default_gallery_has_no_s84_entry_yet():
    assert gallery_path().exists()
    gallery = load_gallery()
    assert "S_8(4)-witness" not in gallery


def test_resolved_claim_becomes_buildable_with_gallery(tmp_path):
    (claim,) = unresolved_rows()
    candidate = Graph.complete(15)  # shape check only; certification is separate
    path = tmp_path / "gallery.txt"
    register_witness("S_8(4)-witness", candidate, path=path)
    w = build_witness(claim, gallery=load_gallery(path))
    assert w.order == 15
