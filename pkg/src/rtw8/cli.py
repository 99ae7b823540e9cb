"""Command-line front end: catalog, witness, certify, contains, lemmas,
exact, and search workflows.

Outputs are line-oriented and deterministic for a given seed: graph6
and tag/TSV lines by default, JSON lines under ``--json`` (certify and
lemmas always emit JSON lines).  Diagnostics go to stderr.  Exit codes:
0 all checks passed, 1 refutation/counterexample found (or an empty
search), 2 usage error, 3 unresolved input (catalog below its stability
threshold, witness recipe awaiting a gallery graph).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .claims import build_witness, claim_for, certification_rows
from .containment import (
    contains_cycle,
    contains_subgraph_bruteforce,
    contains_tree,
    contains_wheel8,
)
from .engine import certify, certify_all, exact_ramsey, search_critical
from .errors import (
    CoverageError,
    Rtw8Error,
    UnresolvedCatalogError,
    UnresolvedWitnessError,
    UnsupportedWitnessError,
)
from .graphs import Graph, graph6_decode, graph6_encode
from .lemmas import (
    MINDEG_WHICH,
    drive_bipartite_c8,
    drive_bondy,
    drive_cross_degree_c8,
    drive_jackson,
    drive_mindegree_structure,
    drive_near_complete_part,
    drive_observation2,
)
from .trees import is_tree, parse_tree_tag, reconstruct_catalog

_SYMBOLIC_RE = re.compile(r"^([KPCSW])_?(\d+)$")


def _parse_symbolic(text: str) -> Graph | None:
    """K5, P4, C8, W8, S7 — wheel sizes count the rim (W8 has order 9)."""
    match = _SYMBOLIC_RE.match(text)
    if match is None:
        return None
    kind, num = match.group(1), int(match.group(2))
    if kind == "K":
        return Graph.complete(num)
    if kind == "P":
        return Graph.path(num)
    if kind == "C":
        return Graph.cycle(num)
    if kind == "W":
        return Graph.wheel(num)
    return Graph.star(num)


def _load_pattern(text: str) -> Graph:
    """A pattern argument: a file (first data line is used), a symbolic
    name (K5/P4/C8/W8/S7), a catalog tree tag, or a graph6 string."""
    s = text.strip()
    p = Path(s)
    if p.is_file():
        for raw in p.read_text().splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                s = line
                break
        else:
            raise CoverageError(f"{p}: no graph line found")
    g = _parse_symbolic(s)
    if g is not None:
        return g
    try:
        return parse_tree_tag(s).build()
    except Rtw8Error:
        pass
    return graph6_decode(s)


# -- subcommands -----------------------------------------------------------


def _cmd_catalog(ns: argparse.Namespace) -> int:
    delta = ns.n - (4 if ns.delta == "n-4" else 5)
    entries = reconstruct_catalog(ns.n, delta)
    for e in entries:
        if ns.json:
            print(json.dumps({
                "tag": e.tag,
                "family": e.family,
                "graph6": graph6_encode(e.tree),
                "provisional": e.provisional,
            }))
        else:
            print(f"{e.tag}\t{graph6_encode(e.tree)}")
    print(f"{len(entries)} classes", file=sys.stderr)
    return 0


def _cmd_witness(ns: argparse.Namespace) -> int:
    spec = parse_tree_tag(ns.tree, ns.n)
    claim = claim_for(spec)
    g = build_witness(claim)
    if ns.json:
        print(json.dumps({
            "tag": claim.tag,
            "n": claim.n,
            "r": claim.r,
            "recipe": claim.witness.describe(),
            "witness_graph6": graph6_encode(g),
        }))
    else:
        print(graph6_encode(g))
        print(f"{claim.tag}\tn={claim.n}\tR>={claim.r}\t{claim.witness.describe()}")
    return 0


def _cmd_certify(ns: argparse.Namespace) -> int:
    if ns.all:
        certs = certify_all(certification_rows())
    else:
        if ns.tree is None:
            print("error: certify needs --all or --tree TAG", file=sys.stderr)
            return 2
        claim = claim_for(parse_tree_tag(ns.tree, ns.n))
        certs = [certify(claim)]
    for cert in certs:
        print(cert.to_json())
    return 0 if all(c.certified for c in certs) else 1


def _is_wheel8_shape(g: Graph) -> bool:
    if g.order != 9 or sorted(g.degrees()) != [3] * 8 + [8]:
        return False
    hub = max(range(9), key=g.degree)
    return contains_cycle(g.induced(g.rows[hub]), 8) is not None


def _cmd_contains(ns: argparse.Namespace) -> int:
    host = _load_pattern(ns.host)
    pattern = _load_pattern(ns.pattern)
    if is_tree(pattern):
        emb = contains_tree(host, pattern)
        mapping = None if emb is None else list(emb.mapping)
    elif _is_wheel8_shape(pattern):
        hit = contains_wheel8(host)
        mapping = None if hit is None else [hit[0], *hit[1]]
    else:
        emb = contains_subgraph_bruteforce(host, pattern)
        mapping = None if emb is None else list(emb.mapping)
    if ns.json:
        print(json.dumps({"embedding": mapping}))
    elif mapping is None:
        print("none")
    else:
        print(" ".join(f"{i}->{v}" for i, v in enumerate(mapping)))
    return 0


def _cmd_lemmas(ns: argparse.Namespace) -> int:
    suite = ns.suite
    if suite == "bondy":
        reports = [drive_bondy()]
    elif suite == "jackson":
        reports = [drive_jackson()]
    elif suite == "one2one":
        reports = [drive_cross_degree_c8()]
    elif suite == "obs2":
        reports = [drive_observation2(seed=ns.seed)]
    elif suite == "lm4":
        reports = [drive_near_complete_part(seed=ns.seed)]
    elif suite == "cors":
        reports = [
            drive_bipartite_c8(2, seed=ns.seed),
            drive_bipartite_c8(3, seed=ns.seed),
        ]
    else:  # mindeg
        reports = [
            drive_mindegree_structure(which, seed=ns.seed)
            for which in MINDEG_WHICH
        ]
    for report in reports:
        print(report.to_json())
    return 0 if all(r.ok for r in reports) else 1


def _cmd_exact(ns: argparse.Namespace) -> int:
    p1 = _load_pattern(ns.p1)
    p2 = _load_pattern(ns.p2)
    result = exact_ramsey(p1, p2, ns.max)
    if ns.json:
        print(json.dumps({
            "value": result.value,
            "status": result.status,
            "method": result.method,
            "critical_graph6": result.critical_graph6,
        }))
    else:
        print(result)
    return 0


def _cmd_search(ns: argparse.Namespace) -> int:
    tree = parse_tree_tag(ns.tree)
    g = search_critical(tree, ns.order, seed=ns.seed, budget=ns.budget)
    if ns.json:
        print(json.dumps({"graph6": None if g is None else graph6_encode(g)}))
    else:
        print("none" if g is None else graph6_encode(g))
    return 0 if g is not None else 1


# -- argument parsing ------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtw8",
        description="Lower-bound verification toolkit for R(T_n, W_8): "
        "tree catalog, witness construction, claim certification, lemma "
        "suites, tiny exact Ramsey numbers, and critical-graph search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="reconstruct the named tree catalog at order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", choices=["n-4", "n-5"], required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("witness", help="build the witness graph for a claimed bound")
    p.add_argument("--tree", required=True, help="catalog tag, e.g. D, S_9(4), T_E(8), or a template like S_n(4) with --n")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("certify", help="machine-check lower-bound claims (JSON lines)")
    p.add_argument("--all", action="store_true", help="certify every constructive claim row")
    p.add_argument("--tree", default=None)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("contains", help="search a pattern inside a host graph")
    p.add_argument("--host", required=True, help="graph6 file/string or catalog tag")
    p.add_argument("--pattern", required=True, help="graph6 file/string, catalog tag, or symbolic name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_contains)

    p = sub.add_parser("lemmas", help="run a lemma checking suite (JSON lines)")
    p.add_argument(
        "--suite",
        choices=["bondy", "jackson", "one2one", "obs2", "lm4", "cors", "mindeg"],
        required=True,
    )
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_lemmas)

    p = sub.add_parser("exact", help="exact Ramsey number for tiny pattern pairs")
    p.add_argument("--p1", required=True, help="symbolic name (K5/P4/C8/W8/S7), tag, graph6, or file")
    p.add_argument("--p2", required=True)
    p.add_argument("--max", type=int, required=True, help="largest order to scan")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("search", help="stochastic search for a witness graph")
    p.add_argument("--tree", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=20_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except (
        CoverageError,
        UnresolvedCatalogError,
        UnresolvedWitnessError,
        UnsupportedWitnessError,
    ) as exc:
        print(f"unresolved: {exc}", file=sys.stderr)
        return 3
    except Rtw8Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
