"""Command-line interface: subcommand outputs and the exit-code contract.

Exit codes are the CI contract: 0 all checks passed, 1 refutation or
counterexample or empty search, 2 usage error, 3 unresolved input.
Tests call main() in-process and inspect the streams.
"""

import json

import pytest

from rtw8.cli import main
from rtw8.graphs import Graph, graph6_decode, graph6_encode


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


# -- catalog -------------------------------------------------------------------


def test_catalog_order7_lists_five_named_classes(capsys):
    code, out, err = run(capsys, "catalog", "--n", "7", "--delta", "n-4")
    assert code == 0
    assert len(out) == 5
    assert [line.split("\t")[0] for line in out] == ["A", "B", "C", "D", "E"]
    for line in out:
        graph6_decode(line.split("\t")[1])  # every row carries a valid graph
    assert "5 classes" in err


def test_catalog_json_rows(capsys):
    code, out, _ = run(capsys, "catalog", "--n", "10", "--delta", "n-5", "--json")
    assert code == 0 and len(out) == 19
    row = json.loads(out[0])
    assert set(row) == {"tag", "family", "graph6", "provisional"}


def test_catalog_below_threshold_is_unresolved(capsys):
    code, out, err = run(capsys, "catalog", "--n", "8", "--delta", "n-5")
    assert code == 3 and not out
    assert err.startswith("unresolved:")


# -- witness -------------------------------------------------------------------


def test_witness_for_order7_claim(capsys):
    code, out, _ = run(capsys, "witness", "--tree", "D", "--n", "7")
    assert code == 0
    assert out[0] == "L~~w?C@?GC_X?M"
    assert "R>=14" in out[1] and out[1].startswith("D\t")


def test_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "--tree", "S_9(4)", "--json")
    assert code == 0
    row = json.loads(out[0])
    assert row["r"] == 17
    assert graph6_decode(row["witness_graph6"]).order == 16


def test_witness_unresolved_row_exits_3(capsys):
    code, out, err = run(capsys, "witness", "--tree", "S_8(4)", "--n", "8")
    assert code == 3 and err.startswith("unresolved:")


# -- certify -------------------------------------------------------------------


def test_certify_single_claim(capsys):
    code, out, _ = run(capsys, "certify", "--tree", "D", "--n", "7")
    assert code == 0 and len(out) == 1
    row = json.loads(out[0])
    assert row["verdict"] == "Certified" and row["r"] == 14


def test_certify_requires_a_target(capsys):
    code, out, err = run(capsys, "certify")
    assert code == 2 and "--all or --tree" in err


# -- contains ------------------------------------------------------------------


def test_contains_reports_none_for_tree_free_host(capsys):
    code, out, _ = run(capsys, "contains", "--host", "K~~w?CB?wF_^", "--pattern", "A")
    assert code == 0 and out == ["none"]


def test_contains_prints_an_embedding(capsys):
    code, out, _ = run(capsys, "contains", "--host", "K7", "--pattern", "S7")
    assert code == 0
    assert all("->" in token for token in out[0].split())


def test_contains_wheel_route(capsys):
    code, out, _ = run(capsys, "contains", "--host", "W8", "--pattern", "W8")
    assert code == 0 and "->" in out[0]


def test_contains_reads_pattern_files(tmp_path, capsys):
    host = tmp_path / "host.g6"
    host.write_text("# a complete graph\n" + graph6_encode(Graph.complete(6)) + "\n")
    code, out, _ = run(capsys, "contains", "--host", str(host), "--pattern", "C4")
    assert code == 0 and "->" in out[0]


def test_contains_rejects_garbage_pattern(capsys):
    code, out, err = run(capsys, "contains", "--host", "K7", "--pattern", "nope!!")
    assert code == 2 and err.startswith("error:")


# -- lemmas ----------------------------------------------------------------------


def test_lemmas_exhaustive_suites(capsys):
    for suite, lines in (("bondy", 1), ("one2one", 1), ("jackson", 1)):
        code, out, _ = run(capsys, "lemmas", "--suite", suite)
        assert code == 0 and len(out) == lines
        assert all(json.loads(line)["failures"] == [] for line in out)


def test_lemmas_mindeg_suite_emits_four_reports(capsys):
    code, out, _ = run(capsys, "lemmas", "--suite", "mindeg", "--seed", "1")
    assert code == 0 and len(out) == 4
    assert {json.loads(line)["seed"] for line in out} == {1}


# -- exact -----------------------------------------------------------------------


def test_exact_path4_wheel_value(capsys):
    code, out, _ = run(capsys, "exact", "--p1", "P4", "--p2", "W8", "--max", "12")
    assert code == 0 and out == ["10"]


def test_exact_json(capsys):
    code, out, _ = run(capsys, "exact", "--p1", "P3", "--p2", "P3", "--max", "5", "--json")
    assert code == 0
    row = json.loads(out[0])
    assert row["value"] == 3 and row["status"] == "exact"


def test_exact_inconclusive_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "exact", "--p1", "P4", "--p2", "W8", "--max", "8")
    assert code == 0 and out == ["inconclusive"]


# -- search ----------------------------------------------------------------------


def test_search_trivial_order_succeeds(capsys):
    code, out, _ = run(capsys, "search", "--tree", "A", "--order", "6", "--budget", "100")
    assert code == 0
    assert graph6_decode(out[0]).order == 6


def test_search_exhausted_budget_exits_1(capsys):
    code, out, _ = run(
        capsys, "search", "--tree", "S_8(4)", "--order", "15", "--budget", "40"
    )
    assert code == 1 and out == ["none"]


def test_search_seed_is_reproducible(capsys):
    args = ("search", "--tree", "A", "--order", "12", "--seed", "0", "--budget", "20000")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2


# -- usage errors ------------------------------------------------------------------


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--n", "7", "--delta", "n-9"])
    assert exc.value.code == 2


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_bad_tree_tag_exits_2(capsys):
    code, out, err = run(capsys, "certify", "--tree", "ZZZ(9)")
    assert code == 2 and err.startswith("error:")
