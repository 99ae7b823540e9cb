"""Machine checks for the supporting lemmas, with exhaustive and
randomized instance drivers.

Each ``check_*`` function verifies one lemma on one concrete instance:
it raises :class:`PreconditionError` if the instance is outside the
lemma's hypothesis, and otherwise returns a :class:`Verdict` saying
which branch of the conclusion held (``ok=False`` means the instance is
a counterexample to the lemma).  The ``drive_*`` functions generate
instances — exhaustively where the hypothesis class is small enough to
exhaust honestly, seeded-randomly otherwise — and return a
:class:`LemmaReport` with instance counts and the graph6 encodings of
any failures.

The lemmas:

* Bondy's pancyclicity theorem: min degree >= n/2 forces cycles of all
  lengths, except the balanced complete bipartite graph.
* Degree-forced trees: min degree >= n-1 forces every order-n tree.
* Wheel-from-union facts: a disjoint union whose first part has an S_5
  (resp. S_4) in its complement and whose second part is big enough
  forces W_8 in the complement (with a near-complete escape clause in
  the S_4 case).
* The 4+4 cross-degree fact: two disjoint 4-sets with G-degrees <= 1
  (into V) and <= 2 (into U) force C_8 in the complement.
* Jackson's bipartite cycle lemma G(u, v, k) and its two C_8
  corollaries for cross-degree caps 2 and 3.
* Four minimum-degree structure lemmas: order-n graphs with min degree
  >= n-4 contain specific catalog trees unless the complement is a
  perfect K_4 packing (or the graph is K_{4,4} at n = 8).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError, PreconditionError, SizeError
from .graphs import (
    Graph,
    bits,
    connected_components,
    disjoint_union,
    graph6_encode,
    mask_of,
    random_graph,
)
from .trees import TreeSpec, enumerate_trees
from .containment import contains_cycle, contains_tree, contains_wheel8


@dataclass(frozen=True)
class Verdict:
    """Outcome of one lemma check.

    ``ok`` is False exactly when the instance refutes the lemma; ``kind``
    names the conclusion branch that held (or ``counterexample``).
    """

    ok: bool
    kind: str
    details: str = ""


@dataclass(frozen=True)
class LemmaReport:
    """Aggregated driver outcome: how many instances, which failed."""

    lemma: str
    instances: int
    failures: tuple[str, ...]
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "lemma": self.lemma,
                "instances": self.instances,
                "failures": list(self.failures),
                "seed": self.seed,
            }
        )


# -- single-instance checkers -------------------------------------------


def _is_balanced_complete_bipartite(g: Graph) -> bool:
    n = g.order
    if n % 2 or n == 0:
        return False
    half = n // 2
    if any(g.degree(v) != half for v in range(n)):
        return False
    side = g.rows[0]  # neighbours of 0 must be one full side
    other = g.vertices_mask() ^ side
    if side.bit_count() != half:
        return False
    return all(g.rows[v] == other for v in bits(side)) and all(
        g.rows[v] == side for v in bits(other)
    )


def check_bondy(g: Graph) -> Verdict:
    """Min degree >= n/2 forces pancyclicity or K_{n/2,n/2}."""
    n = g.order
    if n < 3:
        raise PreconditionError(f"pancyclicity needs order >= 3, got {n}")
    if 2 * g.min_degree() < n:
        raise PreconditionError("hypothesis needs min degree >= n/2")
    missing = [L for L in range(3, n + 1) if contains_cycle(g, L) is None]
    if not missing:
        return Verdict(True, "pancyclic")
    if n % 2 == 0 and _is_balanced_complete_bipartite(g):
        return Verdict(True, "balanced-complete-bipartite")
    return Verdict(False, "counterexample", f"missing cycle lengths {missing}")


def check_degree_tree_embedding(g: Graph, n: int) -> Verdict:
    """Min degree >= n-1 forces every tree of order n."""
    if n < 1:
        raise ParameterError(f"tree order must be positive, got {n}")
    if n > 14:
        raise SizeError("exhaustive tree enumeration is capped at order 14 here")
    if g.order == 0 or g.min_degree() < n - 1:
        raise PreconditionError("hypothesis needs min degree >= n-1")
    missing = [
        t for t in enumerate_trees(n) if contains_tree(g, t) is None
    ]
    if missing:
        return Verdict(
            False,
            "counterexample",
            f"{len(missing)} tree classes of order {n} do not embed",
        )
    return Verdict(True, "all-trees-embed", f"all {len(enumerate_trees(n))} classes")


def _complement_has_star(h: Graph, leaves: int) -> bool:
    # S_{leaves+1} in the complement <=> some vertex misses >= `leaves` others
    return any(h.order - 1 - h.degree(v) >= leaves for v in range(h.order))


def check_observation2(h1: Graph, h2: Graph) -> Verdict:
    """If comp(H1) has an S_5 and |H2| >= 4, comp(H1 + H2) has a W_8."""
    if not _complement_has_star(h1, 4):
        raise PreconditionError("hypothesis needs S_5 in the complement of H1")
    if h2.order < 4:
        raise PreconditionError("hypothesis needs |H2| >= 4")
    g = disjoint_union(h1, h2)
    hit = contains_wheel8(g.complement())
    if hit is None:
        return Verdict(False, "counterexample", "no W_8 in the union complement")
    return Verdict(True, "wheel-found", f"hub {hit[0]}")


def _is_complete_minus_at_most_one_edge(g: Graph) -> bool:
    n = g.order
    return g.edge_count() >= n * (n - 1) // 2 - 1


def check_lemma_near_complete_part(h1: Graph, h2: Graph) -> Verdict:
    """If comp(H1) has an S_4 and |H2| = m >= 5, then comp(H1 + H2) has a
    W_8 unless H2 is K_m or K_m minus one edge."""
    if not _complement_has_star(h1, 3):
        raise PreconditionError("hypothesis needs S_4 in the complement of H1")
    if h2.order < 5:
        raise PreconditionError("hypothesis needs |H2| >= 5")
    g = disjoint_union(h1, h2)
    hit = contains_wheel8(g.complement())
    if hit is not None:
        return Verdict(True, "wheel-found", f"hub {hit[0]}")
    if _is_complete_minus_at_most_one_edge(h2):
        return Verdict(True, "near-complete-part")
    return Verdict(False, "counterexample", "no W_8 and H2 is not near-complete")


def check_cross_degree_c8(g: Graph, u_set: Iterable[int], v_set: Iterable[int]) -> Verdict:
    """Two disjoint 4-sets with G-degrees <= 1 into V and <= 2 into U
    force a C_8 in the complement restricted to the 8 vertices."""
    u = list(u_set)
    v = list(v_set)
    um, vm = mask_of(u), mask_of(v)
    if len(u) != 4 or len(v) != 4 or um & vm:
        raise PreconditionError("hypothesis needs two disjoint 4-sets")
    if any(x >= g.order for x in u + v):
        raise ParameterError("vertex sets outside the graph")
    if any((g.rows[x] & vm).bit_count() > 1 for x in u):
        raise PreconditionError("each U vertex may have at most 1 neighbour in V")
    if any((g.rows[x] & um).bit_count() > 2 for x in v):
        raise PreconditionError("each V vertex may have at most 2 neighbours in U")
    sub = g.complement().induced(um | vm)
    cyc = contains_cycle(sub, 8)
    if cyc is None:
        return Verdict(False, "counterexample", "no C_8 in comp[U+V]")
    return Verdict(True, "cycle-found")


def check_jackson(g: Graph, u_mask: int, v_mask: int, k: int) -> Verdict:
    """Jackson's lemma: bipartite G(u, v, k) with U-degrees >= k,
    2 <= u <= k, k <= v <= 2k-2 contains C_{2u}."""
    if u_mask & v_mask or (u_mask | v_mask) != g.vertices_mask():
        raise ParameterError("U and V must partition the vertices")
    u = u_mask.bit_count()
    v = v_mask.bit_count()
    if any(g.rows[x] & u_mask for x in bits(u_mask)) or any(
        g.rows[x] & v_mask for x in bits(v_mask)
    ):
        raise PreconditionError("graph must be bipartite across U and V")
    if not 2 <= u <= k:
        raise PreconditionError(f"hypothesis needs 2 <= |U| <= k, got |U|={u}, k={k}")
    if not k <= v <= 2 * k - 2:
        raise PreconditionError(f"hypothesis needs k <= |V| <= 2k-2, got |V|={v}")
    if any(g.degree(x) < k for x in bits(u_mask)):
        raise PreconditionError("every U vertex needs degree >= k")
    cyc = contains_cycle(g, 2 * u)
    if cyc is None:
        return Verdict(False, "counterexample", f"no C_{2 * u}")
    return Verdict(True, "cycle-found")


def check_bipartite_c8(
    g: Graph, u_set: Iterable[int], v_set: Iterable[int], cap: int
) -> Verdict:
    """Cross-degree corollaries: if each U vertex has at most ``cap``
    G-neighbours in V, |U| >= 4 and |V| >= 6 (cap 2) or >= 8 (cap 3),
    the complement restricted to U + V contains C_8."""
    if cap not in (2, 3):
        raise ParameterError(f"cap must be 2 or 3, got {cap}")
    u = list(u_set)
    v = list(v_set)
    um, vm = mask_of(u), mask_of(v)
    if um & vm:
        raise ParameterError("U and V must be disjoint")
    need_v = 6 if cap == 2 else 8
    if len(u) < 4 or len(v) < need_v:
        raise PreconditionError(f"hypothesis needs |U| >= 4 and |V| >= {need_v}")
    if any((g.rows[x] & vm).bit_count() > cap for x in u):
        raise PreconditionError(f"each U vertex may have at most {cap} neighbours in V")
    sub = g.complement().induced(um | vm)
    cyc = contains_cycle(sub, 8)
    if cyc is None:
        return Verdict(False, "counterexample", "no C_8 in comp[U+V]")
    return Verdict(True, "cycle-found")


def _complement_is_k4_packing(h: Graph) -> bool:
    comp = h.complement()
    comps = connected_components(comp)
    return all(
        c.bit_count() == 4 and comp.induced(c).edge_count() == 6 for c in comps
    )


def _is_k44(h: Graph) -> bool:
    return h.order == 8 and _is_balanced_complete_bipartite(h)


MINDEG_WHICH = ("Sn4_TA", "TE", "TF", "TH_TK_TL")


def check_mindegree_structure(h: Graph, which: str) -> Verdict:
    """The four minimum-degree structure lemmas.

    For a graph of order n >= 8 with min degree >= n-4:

    * ``Sn4_TA``: contains S_n[4] and T_A(n), or n = 0 mod 4 and the
      complement is a perfect K_4 packing.
    * ``TE`` / ``TF``: contains T_E(n) / T_F(n), unless n = 8 and the
      graph is K_{4,4}.
    * ``TH_TK_TL``: contains T_H(n), T_K(n) and T_L(n), no exception.
    """
    n = h.order
    if n < 8:
        raise PreconditionError(f"hypothesis needs order >= 8, got {n}")
    if h.min_degree() < n - 4:
        raise PreconditionError("hypothesis needs min degree >= n-4")
    if which == "Sn4_TA":
        targets = [TreeSpec.star_leaf_bridge(n, 4).build(), TreeSpec.named("T_A", n).build()]
        if all(contains_tree(h, t) is not None for t in targets):
            return Verdict(True, "trees-found", "S_n[4] and T_A(n)")
        if n % 4 == 0 and _complement_is_k4_packing(h):
            return Verdict(True, "exceptional-k4-packing-complement")
        return Verdict(False, "counterexample", "trees missing, complement not n/4 x K_4")
    if which in ("TE", "TF"):
        tag = "T_E" if which == "TE" else "T_F"
        if contains_tree(h, TreeSpec.named(tag, n).build()) is not None:
            return Verdict(True, "trees-found", f"{tag}({n})")
        if _is_k44(h):
            return Verdict(True, "exceptional-k44")
        return Verdict(False, "counterexample", f"no {tag}({n}) and graph is not K_4,4")
    if which == "TH_TK_TL":
        missing = [
            tag
            for tag in ("T_H", "T_K", "T_L")
            if contains_tree(h, TreeSpec.named(tag, n).build()) is None
        ]
        if missing:
            return Verdict(False, "counterexample", f"missing {missing}")
        return Verdict(True, "trees-found", "T_H, T_K, T_L")
    raise ParameterError(f"unknown structure lemma selector {which!r}; use one of {MINDEG_WHICH}")


# -- exhaustive drivers ---------------------------------------------------


def _max_degree_two_classes(n: int) -> Iterator[Graph]:
    """All isomorphism classes of graphs with max degree <= 2 on n vertices.

    Such a graph is a disjoint multiset of paths (length >= 1 vertex) and
    cycles (>= 3 vertices); multisets are generated in nonincreasing
    component order so each class appears exactly once.
    """

    def gen(remaining: int, bound: tuple[int, int]) -> Iterator[tuple[tuple[int, int], ...]]:
        if remaining == 0:
            yield ()
            return
        for size in range(min(remaining, bound[0]), 0, -1):
            kinds = [1, 0] if size >= 3 else [0]
            for kind in kinds:
                comp = (size, kind)
                if comp > bound:
                    continue
                for rest in gen(remaining - size, comp):
                    yield (comp,) + rest

    for comps in gen(n, (n, 1)):
        g = Graph.empty(0)
        for size, kind in comps:
            part = Graph.cycle(size) if kind else Graph.path(size)
            g = disjoint_union(g, part)
        yield g


def drive_bondy(n_max: int = 7) -> LemmaReport:
    """Exhaustive check of the pancyclicity lemma for orders 3..n_max.

    For n <= 7, min degree >= n/2 forces max complement degree <= 2, so
    the complements of all path/cycle unions cover the hypothesis class
    exactly, up to isomorphism.
    """
    if n_max > 7:
        raise SizeError("the max-degree-2 complement argument only covers n <= 7")
    instances = 0
    failures = []
    for n in range(3, n_max + 1):
        for sparse in _max_degree_two_classes(n):
            g = sparse.complement()
            if 2 * g.min_degree() < n:
                continue
            instances += 1
            if not check_bondy(g).ok:
                failures.append(graph6_encode(g))
    return LemmaReport("bondy-pancyclicity", instances, tuple(failures))


def drive_cross_degree_c8() -> LemmaReport:
    """Exhaustive check of the 4+4 cross-degree lemma.

    Every cross-edge pattern with U-degrees <= 1 is enumerated (5^4
    choices, filtered by the V-degree cap <= 2); the vertex sets
    internally are made complete — internal edges only remove complement
    edges, so complete interiors are the worst case — and, for breadth,
    the empty-interior variant is checked too.
    """
    instances = 0
    failures = []
    u_set, v_set = (0, 1, 2, 3), (4, 5, 6, 7)
    internal_complete = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    internal_complete += [(a, b) for a in range(4, 8) for b in range(a + 1, 8)]
    for choice in itertools.product(range(5), repeat=4):
        cross = [(u, 4 + pick - 1) for u, pick in enumerate(choice) if pick]
        vdeg = [0] * 8
        for _, v in cross:
            vdeg[v] += 1
        if any(d > 2 for d in vdeg[4:]):
            continue
        for interior in ((), tuple(internal_complete)):
            g = Graph.from_edges(8, list(interior) + cross)
            instances += 1
            if not check_cross_degree_c8(g, u_set, v_set).ok:
                failures.append(graph6_encode(g))
    return LemmaReport("cross-degree-4+4-c8", instances, tuple(failures))


def drive_jackson(shapes: tuple[tuple[int, int, int], ...] = ((2, 2, 2), (3, 4, 3), (4, 6, 4))) -> LemmaReport:
    """Exhaustive check of Jackson's lemma for the given (u, v, k) shapes.

    U-vertex neighbourhoods are all subsets of V of size >= k; rows are
    combined as multisets (U vertices are interchangeable), which covers
    every instance up to U-relabelling.
    """
    instances = 0
    failures = []
    for u, v, k in shapes:
        if not (2 <= u <= k and k <= v <= 2 * k - 2):
            raise ParameterError(f"shape {(u, v, k)} violates the hypothesis ranges")
        options = []
        for size in range(k, v + 1):
            options.extend(itertools.combinations(range(v), size))
        u_mask = (1 << u) - 1
        v_mask = ((1 << v) - 1) << u
        for rows in itertools.combinations_with_replacement(options, u):
            edges = [(i, u + j) for i, row in enumerate(rows) for j in row]
            g = Graph.from_edges(u + v, edges)
            instances += 1
            if not check_jackson(g, u_mask, v_mask, k).ok:
                failures.append(graph6_encode(g))
    return LemmaReport("jackson-bipartite-cycles", instances, tuple(failures))


# -- randomized drivers ---------------------------------------------------


def _random_graph_with_complement_star(
    rng: random.Random, order_lo: int, order_hi: int, leaves: int
) -> Graph:
    while True:
        n = rng.randint(order_lo, order_hi)
        g = random_graph(n, rng, p=rng.choice([0.25, 0.5, 0.5, 0.75]))
        if _complement_has_star(g, leaves):
            return g


def drive_observation2(instances: int = 10_000, seed: int = 0) -> LemmaReport:
    """Randomized instances of the S_5-complement wheel observation."""
    rng = random.Random(seed)
    failures = []
    for _ in range(instances):
        h1 = _random_graph_with_complement_star(rng, 5, 9, 4)
        h2 = random_graph(rng.randint(4, 8), rng, p=rng.choice([0.25, 0.5, 0.75]))
        if not check_observation2(h1, h2).ok:
            failures.append(graph6_encode(disjoint_union(h1, h2)))
    return LemmaReport("union-complement-w8-s5", instances, tuple(failures), seed)


def drive_near_complete_part(instances: int = 10_000, seed: int = 0) -> LemmaReport:
    """Randomized instances of the S_4-complement wheel lemma.

    Every 500th H2 is forced to K_m or K_m minus an edge so the
    near-complete escape branch is exercised deterministically.
    """
    rng = random.Random(seed)
    failures = []
    for i in range(instances):
        h1 = _random_graph_with_complement_star(rng, 4, 8, 3)
        m = rng.randint(5, 9)
        if i % 500 == 0:
            h2 = Graph.complete(m)
            if i % 1000 == 0 and m >= 2:
                edges = [e for e in h2.edges()][1:]
                h2 = Graph.from_edges(m, edges)
        else:
            h2 = random_graph(m, rng, p=rng.choice([0.25, 0.5, 0.75]))
        if not check_lemma_near_complete_part(h1, h2).ok:
            failures.append(graph6_encode(disjoint_union(h1, h2)))
    return LemmaReport("union-complement-w8-s4", instances, tuple(failures), seed)


def drive_bipartite_c8(cap: int, instances: int = 10_000, seed: int = 0) -> LemmaReport:
    """Randomized instances of the cross-degree C_8 corollaries."""
    if cap not in (2, 3):
        raise ParameterError(f"cap must be 2 or 3, got {cap}")
    rng = random.Random(seed)
    failures = []
    v_lo = 6 if cap == 2 else 8
    for _ in range(instances):
        nu = rng.randint(4, 5)
        nv = rng.randint(v_lo, v_lo + 2)
        n = nu + nv
        u_set = tuple(range(nu))
        v_set = tuple(range(nu, n))
        edges = []
        for u in u_set:
            picks = rng.sample(v_set, rng.randint(0, cap))
            edges += [(u, v) for v in picks]
        # arbitrary interior edges; the hypothesis only caps cross degrees
        for a in range(nu):
            for b in range(a + 1, nu):
                if rng.random() < 0.5:
                    edges.append((a, b))
        for a in range(nu, n):
            for b in range(a + 1, n):
                if rng.random() < 0.5:
                    edges.append((a, b))
        g = Graph.from_edges(n, edges)
        if not check_bipartite_c8(g, u_set, v_set, cap).ok:
            failures.append(graph6_encode(g))
    return LemmaReport(f"bipartite-cross-degree-{cap}-c8", instances, tuple(failures), seed)


def _random_min_degree_graph(n: int, rng: random.Random) -> Graph:
    """A random graph with min degree >= n-4 (complement max degree <= 3)."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    keep = int(len(pairs) * rng.random())
    deg = [0] * n
    edges = []
    for a, b in pairs[:keep]:
        if deg[a] < 3 and deg[b] < 3:
            deg[a] += 1
            deg[b] += 1
            edges.append((a, b))
    return Graph.from_edges(n, edges).complement()


def drive_mindegree_structure(which: str, instances: int = 10_000, seed: int = 0) -> LemmaReport:
    """Randomized instances of a minimum-degree structure lemma.

    The known boundary graphs (complement a perfect K_4 packing at
    n = 8, 12; K_{4,4} at n = 8) are injected as the first instances so
    the exceptional branches are always exercised.
    """
    if which not in MINDEG_WHICH:
        raise ParameterError(f"unknown selector {which!r}; use one of {MINDEG_WHICH}")
    rng = random.Random(seed)
    failures = []
    boundary = [
        Graph.complete_multipartite([4, 4]),
        Graph.complete_multipartite([4, 4, 4]),
    ]
    count = 0
    for h in boundary:
        count += 1
        if not check_mindegree_structure(h, which).ok:
            failures.append(graph6_encode(h))
    while count < instances:
        n = rng.randint(8, 12)
        h = _random_min_degree_graph(n, rng)
        count += 1
        if not check_mindegree_structure(h, which).ok:
            failures.append(graph6_encode(h))
    return LemmaReport(f"min-degree-structure-{which}", count, tuple(failures), seed)
