"""The claims ledger and the witness factory.

This module records every asserted value of R(T, W_8) that the toolkit
knows about — order-7 trees A–E, the max-degree n-4 and n-5 catalog
families, stars, the near-star families S_n(1,1), S_n(1,2), S_n(3),
S_n(2,1), and the short paths P_4..P_7 — together with the witness
recipe that certifies each value's lower half where a construction is
known.

A witness for "R(T, W_8) >= r" is a graph of order r-1 that contains no
copy of T while its complement contains no W_8.  Recipes are
deterministic constructions; two of them depend on registered graphs: a
fixed order-7 graph H (a 5-cycle plus two degree-3 vertices), and the
unresolved order-15 witness for S_8(4) which, if ever found, lives in
the witness gallery file (see ``load_gallery``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import (
    CoverageError,
    ParameterError,
    UnresolvedWitnessError,
    UnsupportedWitnessError,
)
from .graphs import Graph, disjoint_union, graph6_decode, graph6_encode
from .trees import (
    DELTA4_FAMILIES,
    DELTA5_FAMILIES,
    TreeSpec,
    canonical_code,
)

# -- fixed special graphs -------------------------------------------------

# The order-7 graph H: a 5-cycle 0..4, vertex 5 adjacent to {0, 1, 4},
# vertex 6 adjacent to {2, 3, 4}.  K_6 + H is the witness for the
# order-7 tree D.
H_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 0), (5, 1), (5, 4),
    (6, 2), (6, 3), (6, 4),
)


def graph_h() -> Graph:
    """The order-7, 11-edge graph H used in the witness for tree D."""
    return Graph.from_edges(7, list(H_EDGES))


# -- witness recipes ------------------------------------------------------

CONSTRUCTIONS = (
    "TwoCliques",
    "CliquePlusMultipartite",
    "TwoK6",
    "K6PlusH",
    "K6PlusK44",
    "K7PlusK44",
    "K7PlusH8",
    "Generic2Kn1Only",
    "External",
)

_PARAMETRIC = ("TwoCliques", "CliquePlusMultipartite", "Generic2Kn1Only")

# gallery tags consulted by the K7PlusH8 recipe: either an order-8 graph
# H_8 (completing the witness as K_7 + H_8), or a full order-15
# replacement witness found by search.
H8_TAG = "H_8"
S84_WITNESS_TAG = "S_8(4)-witness"


@dataclass(frozen=True)
class WitnessRecipe:
    """A deterministic lower-bound witness construction.

    ``order_param`` is the tree order n for the parametric recipes
    (TwoCliques and Generic2Kn1Only build 2K_{n-1};
    CliquePlusMultipartite builds K_{n-1} + K_{4,...,4} and requires
    n = 0 mod 4).
    """

    construction: str
    order_param: int | None = None
    notes: str = ""

    def __post_init__(self) -> None:
        if self.construction not in CONSTRUCTIONS:
            raise ParameterError(
                f"unknown construction {self.construction!r}; one of {CONSTRUCTIONS}"
            )
        if self.construction in _PARAMETRIC:
            if self.order_param is None or self.order_param < 2:
                raise ParameterError(
                    f"{self.construction} needs the tree order as order_param"
                )
            if self.construction == "CliquePlusMultipartite" and self.order_param % 4:
                raise ParameterError(
                    "CliquePlusMultipartite needs a tree order divisible by 4"
                )

    def describe(self) -> str:
        n = self.order_param
        if self.construction in ("TwoCliques", "Generic2Kn1Only"):
            return f"2K_{n - 1}"
        if self.construction == "CliquePlusMultipartite":
            return f"K_{n - 1} + K_(4x{n // 4})"
        return {
            "TwoK6": "2K_6",
            "K6PlusH": "K_6 + H",
            "K6PlusK44": "K_6 + K_(4,4)",
            "K7PlusK44": "K_7 + K_(4,4)",
            "K7PlusH8": "K_7 + H_8 (gallery)",
            "External": "external (no construction)",
        }[self.construction]


@dataclass(frozen=True)
class RamseyClaim:
    """One certifiable row: R(tree, W_8) >= r via the given witness."""

    tree: TreeSpec
    tag: str
    n: int
    r: int
    witness: WitnessRecipe
    source: str


# -- the witness gallery --------------------------------------------------


def gallery_path() -> Path:
    return Path(__file__).parent / "data" / "witness_gallery.txt"


def load_gallery(path: Path | None = None) -> dict[str, Graph]:
    """Parse the witness gallery ("tag n graph6" lines; # comments)."""
    p = path or gallery_path()
    out: dict[str, Graph] = {}
    if not p.exists():
        return out
    for lineno, raw in enumerate(p.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParameterError(f"{p}:{lineno}: expected 'tag n graph6', got {raw!r}")
        tag, order_text, g6 = parts
        g = graph6_decode(g6)
        if g.order != int(order_text):
            raise ParameterError(
                f"{p}:{lineno}: tag {tag} declares order {order_text} "
                f"but graph6 decodes to order {g.order}"
            )
        out[tag] = g
    return out


def register_witness(tag: str, g: Graph, path: Path | None = None) -> None:
    """Append a resolved witness to the gallery file."""
    if " " in tag:
        raise ParameterError("gallery tags must not contain spaces")
    p = path or gallery_path()
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("a") as fh:
        fh.write(f"{tag} {g.order} {graph6_encode(g)}\n")


# -- witness construction -------------------------------------------------


def build_witness(claim: RamseyClaim, gallery: dict[str, Graph] | None = None) -> Graph:
    """Realize the claim's witness recipe as a concrete graph.

    Raises UnsupportedWitnessError for recipe External, and
    UnresolvedWitnessError for K7PlusH8 while no compatible graph is
    registered in the gallery.
    """
    recipe = claim.witness
    kind = recipe.construction
    if kind == "External":
        raise UnsupportedWitnessError(
            f"claim ({claim.tag}, n={claim.n}): no constructive witness is recorded"
        )
    if kind in ("TwoCliques", "Generic2Kn1Only"):
        k = Graph.complete(recipe.order_param - 1)
        g = disjoint_union(k, k)
    elif kind == "CliquePlusMultipartite":
        n = recipe.order_param
        g = disjoint_union(
            Graph.complete(n - 1), Graph.complete_multipartite([4] * (n // 4))
        )
    elif kind == "TwoK6":
        g = disjoint_union(Graph.complete(6), Graph.complete(6))
    elif kind == "K6PlusH":
        g = disjoint_union(Graph.complete(6), graph_h())
    elif kind == "K6PlusK44":
        g = disjoint_union(Graph.complete(6), Graph.complete_multipartite([4, 4]))
    elif kind == "K7PlusK44":
        g = disjoint_union(Graph.complete(7), Graph.complete_multipartite([4, 4]))
    else:  # K7PlusH8
        entries = load_gallery() if gallery is None else gallery
        if H8_TAG in entries:
            h8 = entries[H8_TAG]
            if h8.order != 8:
                raise ParameterError(f"gallery {H8_TAG} must have order 8, has {h8.order}")
            g = disjoint_union(Graph.complete(7), h8)
        elif S84_WITNESS_TAG in entries:
            g = entries[S84_WITNESS_TAG]
        else:
            raise UnresolvedWitnessError(
                f"claim ({claim.tag}, n={claim.n}): no {H8_TAG} or "
                f"{S84_WITNESS_TAG} graph registered in the witness gallery"
            )
    if g.order != claim.r - 1:
        raise ParameterError(
            f"recipe {kind} yields order {g.order}, but claim "
            f"({claim.tag}, n={claim.n}, r={claim.r}) needs order {claim.r - 1}"
        )
    return g


def generic_lower_bound_witness(n: int) -> Graph:
    """2K_{n-1}: certifies R(T, W_8) >= 2n-1 for every order-n tree T."""
    if n < 5:
        raise ParameterError(f"generic witness needs n >= 5, got {n}")
    k = Graph.complete(n - 1)
    return disjoint_union(k, k)


# -- the value ledger -----------------------------------------------------


@dataclass(frozen=True)
class ValueRule:
    """The asserted exact value of R(T_n, W_8) for one family, with the
    n-range on which the assertion holds and the recipe realizing the
    value's lower half (External where no construction is recorded)."""

    template: str
    min_n: int
    max_n: int | None
    formula: str
    value: Callable[[int], int]
    recipe: Callable[[int], WitnessRecipe]
    source: str
    maker: Callable[[int], TreeSpec]

    def applies(self, n: int) -> bool:
        return n >= self.min_n and (self.max_n is None or n <= self.max_n)

    def tag_at(self, n: int) -> str:
        return _tag(self.template, n)


def _tag(template: str, n: int) -> str:
    if template in "ABCDE" and len(template) == 1:
        return template
    if template.startswith("S_n"):
        return f"S_{n}" + template[3:]
    if template.startswith("P_n"):
        return f"P_{n}"
    return f"{template}({n})"


def _two_cliques(n: int) -> WitnessRecipe:
    return WitnessRecipe("TwoCliques", n)


def _dichotomy_value(n: int) -> int:
    return 2 * n if n % 4 == 0 else 2 * n - 1


def _dichotomy_recipe(n: int) -> WitnessRecipe:
    if n % 4 == 0:
        return WitnessRecipe("CliquePlusMultipartite", n)
    return WitnessRecipe("TwoCliques", n)


def _generic_if(pred: Callable[[int], bool]) -> Callable[[int], WitnessRecipe]:
    def make(n: int) -> WitnessRecipe:
        if pred(n):
            return WitnessRecipe("Generic2Kn1Only", n)
        return WitnessRecipe("External")

    return make


_EXTERNAL_ALWAYS: Callable[[int], WitnessRecipe] = lambda n: WitnessRecipe("External")


def _named_maker(tag: str) -> Callable[[int], TreeSpec]:
    return lambda n: TreeSpec.named(tag, n)


def _rule(
    template: str,
    min_n: int,
    max_n: int | None,
    formula: str,
    value: Callable[[int], int],
    recipe: Callable[[int], WitnessRecipe],
    source: str,
    maker: Callable[[int], TreeSpec],
) -> ValueRule:
    return ValueRule(template, min_n, max_n, formula, value, recipe, source, maker)


VALUE_RULES: tuple[ValueRule, ...] = (
    # order-7 trees with max degree 3
    _rule("A", 7, 7, "13", lambda n: 13,
          lambda n: WitnessRecipe("TwoK6"), "order7-exact-value",
          _named_maker("A")),
    _rule("B", 7, 7, "13", lambda n: 13,
          lambda n: WitnessRecipe("TwoK6"), "order7-exact-value",
          _named_maker("B")),
    _rule("C", 7, 7, "13", lambda n: 13,
          lambda n: WitnessRecipe("TwoK6"), "order7-exact-value",
          _named_maker("C")),
    _rule("D", 7, 7, "14", lambda n: 14,
          lambda n: WitnessRecipe("K6PlusH"), "order7-exact-value",
          _named_maker("D")),
    _rule("E", 7, 7, "15", lambda n: 15,
          lambda n: WitnessRecipe("K6PlusK44"), "order7-exact-value",
          _named_maker("E")),
    # max degree n-4 families (n >= 8)
    _rule("S_n(4)", 8, None, "16 if n=8, else 2n-1",
          lambda n: 16 if n == 8 else 2 * n - 1,
          lambda n: WitnessRecipe("K7PlusH8") if n == 8 else _two_cliques(n),
          "degree-n-4-exact-value", lambda n: TreeSpec.two_star_bridge(n, 4)),
    _rule("S_n[4]", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-4-exact-value", lambda n: TreeSpec.star_leaf_bridge(n, 4)),
    _rule("S_n(1,3)", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-4-exact-value", lambda n: TreeSpec.subdivided_star(n, 1, 3)),
    _rule("S_n(3,1)", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-4-exact-value", lambda n: TreeSpec.subdivided_star(n, 3, 1)),
    _rule("T_A", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-4-exact-value", _named_maker("T_A")),
    _rule("T_B", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-4-exact-value", _named_maker("T_B")),
    _rule("T_C", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-4-exact-value", _named_maker("T_C")),
    # max degree n-5 families
    _rule("S_n(5)", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", lambda n: TreeSpec.two_star_bridge(n, 5)),
    _rule("S_n[5]", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", lambda n: TreeSpec.star_leaf_bridge(n, 5)),
    _rule("S_n(1,4)", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-5-exact-value", lambda n: TreeSpec.subdivided_star(n, 1, 4)),
    _rule("S_n(4,1)", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", lambda n: TreeSpec.subdivided_star(n, 4, 1)),
    _rule("S_n(2,2)", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-5-exact-value", lambda n: TreeSpec.subdivided_star(n, 2, 2)),
    _rule("T_D", 8, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-5-exact-value", _named_maker("T_D")),
    _rule("T_E", 8, None, "16 if n=8, else 2n-1",
          lambda n: 16 if n == 8 else 2 * n - 1,
          lambda n: WitnessRecipe("K7PlusK44") if n == 8 else _two_cliques(n),
          "degree-n-5-exact-value", _named_maker("T_E")),
    _rule("T_F", 8, None, "16 if n=8, else 2n-1",
          lambda n: 16 if n == 8 else 2 * n - 1,
          lambda n: WitnessRecipe("K7PlusK44") if n == 8 else _two_cliques(n),
          "degree-n-5-exact-value", _named_maker("T_F")),
    _rule("T_G", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_G")),
    _rule("T_H", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_H")),
    _rule("T_J", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_J")),
    _rule("T_K", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_K")),
    _rule("T_L", 8, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_L")),
    _rule("T_M", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_M")),
    _rule("T_N", 9, None, "2n if n=0 mod 4, else 2n-1",
          _dichotomy_value, _dichotomy_recipe,
          "degree-n-5-exact-value", _named_maker("T_N")),
    _rule("T_P", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_P")),
    _rule("T_Q", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_Q")),
    _rule("T_R", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_R")),
    _rule("T_S", 9, None, "2n-1",
          lambda n: 2 * n - 1, _two_cliques,
          "degree-n-5-exact-value", _named_maker("T_S")),
    # stars and near-stars (values from prior results; recipes external
    # except where 2K_{n-1} already reaches the exact bound minus one)
    _rule("S_n", 5, None, "2n+1 if n odd, else 2n+2",
          lambda n: 2 * n + 1 if n % 2 else 2 * n + 2,
          _EXTERNAL_ALWAYS, "star-exact-value",
          lambda n: TreeSpec.star(n)),
    _rule("S_n(1,1)", 5, None, "2n+1 if n odd, else 2n",
          lambda n: 2 * n + 1 if n % 2 else 2 * n,
          _EXTERNAL_ALWAYS, "near-star-exact-value",
          lambda n: TreeSpec.subdivided_star(n, 1, 1)),
    _rule("S_n(1,2)", 6, None, "2n+1 if n=3 mod 4, else 2n",
          lambda n: 2 * n + 1 if n % 4 == 3 else 2 * n,
          _EXTERNAL_ALWAYS, "near-star-exact-value",
          lambda n: TreeSpec.subdivided_star(n, 1, 2)),
    _rule("S_n(3)", 6, None, "2n-1 if n odd and n>=9, else 2n",
          lambda n: 2 * n - 1 if n % 2 and n >= 9 else 2 * n,
          _generic_if(lambda n: n % 2 == 1 and n >= 9),
          "near-star-exact-value", lambda n: TreeSpec.two_star_bridge(n, 3)),
    _rule("S_n(2,1)", 6, None, "2n-1 if n odd, else 2n",
          lambda n: 2 * n - 1 if n % 2 else 2 * n,
          _generic_if(lambda n: n % 2 == 1),
          "near-star-exact-value", lambda n: TreeSpec.subdivided_star(n, 2, 1)),
    _rule("P_n", 4, 7, "n+6",
          lambda n: n + 6, _generic_if(lambda n: n == 7),
          "path-exact-value", lambda n: TreeSpec.path(n)),
)


def _canon_of_spec(spec: TreeSpec) -> str:
    return canonical_code(spec.build())


def matching_rules(tree: TreeSpec | Graph) -> list[ValueRule]:
    """All ledger rules whose order-n member is isomorphic to ``tree``."""
    g = tree.build() if isinstance(tree, TreeSpec) else tree
    n = g.order
    canon = canonical_code(g)
    hits = []
    for rule in VALUE_RULES:
        if not rule.applies(n):
            continue
        try:
            member = rule.maker(n)
        except ParameterError:
            continue
        if _canon_of_spec(member) == canon:
            hits.append(rule)
    return hits


def claimed_R(tree: TreeSpec | Graph) -> int:
    """The ledger's asserted value of R(tree, W_8).

    Recognition is by isomorphism against each rule's order-n member;
    when several rules match (small orders collapse some families onto
    one another), their values must agree, and the first rule's value is
    returned.
    """
    g = tree.build() if isinstance(tree, TreeSpec) else tree
    n = g.order
    hits = matching_rules(g)
    if not hits:
        raise CoverageError(f"no value rule covers this order-{n} tree")
    values = {rule.value(n) for rule in hits}
    if len(values) != 1:
        tags = [(rule.tag_at(n), rule.value(n)) for rule in hits]
        raise CoverageError(f"ledger rules disagree at order {n}: {tags}")
    return values.pop()


def claim_for(tree: TreeSpec | Graph) -> RamseyClaim:
    """The full claim row (value + recipe) for a covered tree."""
    g = tree.build() if isinstance(tree, TreeSpec) else tree
    n = g.order
    hits = matching_rules(g)
    if not hits:
        raise CoverageError(f"no value rule covers this order-{n} tree")
    claimed_R(g)  # consistency check across all matching rules
    rule = hits[0]
    spec = tree if isinstance(tree, TreeSpec) else rule.maker(n)
    return RamseyClaim(
        tree=spec,
        tag=rule.tag_at(n),
        n=n,
        r=rule.value(n),
        witness=rule.recipe(n),
        source=rule.source,
    )


# -- certification rows ---------------------------------------------------

# the eight families whose value rises to 2n at n = 0 mod 4, certified
# by K_{n-1} + K_{4,...,4}
DICHOTOMY_TEMPLATES = (
    "S_n[4]", "S_n(1,3)", "T_A", "T_B",
    "S_n(1,4)", "S_n(2,2)", "T_D", "T_N",
)

_CATALOG_FAMILIES = DELTA4_FAMILIES + DELTA5_FAMILIES


def catalog_trees_at(n: int) -> list[tuple[str, TreeSpec]]:
    """The named catalog trees of order n (max degree n-4 or n-5),
    deduplicated by isomorphism class with the first tag winning."""
    if n < 8:
        raise ParameterError(f"the family catalog starts at order 8, got {n}")
    seen: set[str] = set()
    out: list[tuple[str, TreeSpec]] = []
    for fam in _CATALOG_FAMILIES:
        if fam.min_n > n:
            continue
        spec = fam.maker(n)
        g = spec.build()
        if g.max_degree() not in (n - 4, n - 5):
            continue
        canon = canonical_code(g)
        if canon in seen:
            continue
        seen.add(canon)
        out.append((fam.tag_at(n), spec))
    return out


def certification_rows(n_hi: int = 16) -> tuple[RamseyClaim, ...]:
    """Every constructive claim row the certifier gates on.

    In order: the five order-7 exact-value rows; the two n=8 exceptional
    rows for T_E and T_F; the generic 2K_{n-1} bound for every catalog
    tree at n in 8..n_hi; and the K_{n-1} + K_{4x(n/4)} rows for the
    eight dichotomy families at n in {8, 12, 16}.

    The (S_8(4), 16) row is deliberately absent: its recipe K7PlusH8 is
    unresolved (see ``unresolved_rows``).
    """
    rows: list[RamseyClaim] = []
    for tag in "ABC":
        rows.append(RamseyClaim(TreeSpec.named(tag, 7), tag, 7, 13,
                                WitnessRecipe("TwoK6"), "order7-exact-value"))
    rows.append(RamseyClaim(TreeSpec.named("D", 7), "D", 7, 14,
                            WitnessRecipe("K6PlusH"), "order7-exact-value"))
    rows.append(RamseyClaim(TreeSpec.named("E", 7), "E", 7, 15,
                            WitnessRecipe("K6PlusK44"), "order7-exact-value"))
    for tag in ("T_E", "T_F"):
        rows.append(RamseyClaim(TreeSpec.named(tag, 8), f"{tag}(8)", 8, 16,
                                WitnessRecipe("K7PlusK44"),
                                "degree-n-5-exact-value"))
    for n in range(8, n_hi + 1):
        for tag, spec in catalog_trees_at(n):
            rows.append(RamseyClaim(spec, tag, n, 2 * n - 1,
                                    WitnessRecipe("TwoCliques", n),
                                    "catalog-generic-bound"))
    by_template = {fam.template: fam for fam in _CATALOG_FAMILIES}
    for n in (8, 12, 16):
        if n > n_hi:
            continue
        for template in DICHOTOMY_TEMPLATES:
            fam = by_template[template]
            rows.append(RamseyClaim(fam.maker(n), fam.tag_at(n), n, 2 * n,
                                    WitnessRecipe("CliquePlusMultipartite", n),
                                    "multipartite-dichotomy-bound"))
    return tuple(rows)


def unresolved_rows() -> tuple[RamseyClaim, ...]:
    """Claim rows whose recipes await a registered gallery graph."""
    return (
        RamseyClaim(TreeSpec.two_star_bridge(8, 4), "S_8(4)", 8, 16,
                    WitnessRecipe("K7PlusH8"), "degree-n-4-exact-value"),
    )


def export_ledger() -> str:
    """The value ledger as a JSON array of rule descriptions."""
    rows = []
    for rule in VALUE_RULES:
        if rule.max_n is None:
            n_range = f"n>={rule.min_n}"
        elif rule.max_n == rule.min_n:
            n_range = f"n={rule.min_n}"
        else:
            n_range = f"{rule.min_n}<=n<={rule.max_n}"
        hi = rule.max_n if rule.max_n is not None else rule.min_n + 7
        constructions = []
        for n in range(rule.min_n, hi + 1):
            kind = rule.recipe(n).construction
            if kind not in constructions:
                constructions.append(kind)
        rows.append(
            {
                "tag": rule.template,
                "n_range": n_range,
                "r_formula": rule.formula,
                "recipe": " / ".join(constructions),
                "citation": rule.source,
            }
        )
    return json.dumps(rows, indent=2)
