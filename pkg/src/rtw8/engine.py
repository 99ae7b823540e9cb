"""Lower-bound certification, tiny exact Ramsey computation, and
stochastic search for Ramsey-critical graphs.

``certify`` turns a claim row into a machine-checked certificate: the
witness graph is realized, the tree is searched in it, and W_8 is
searched in its complement.  ``exact_ramsey`` computes R(p1, p2) for
tiny pattern pairs by exhausting the p1-free counterexample space —
honestly limited to structured families (edge-free, P_3-free, P_4-free)
and small full scans.  ``search_critical`` is an edge-flip local search
that tries to construct witness graphs from scratch.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ParameterError, ShapeError, SizeError
from .claims import RamseyClaim, build_witness, certification_rows
from .containment import (
    contains_cycle,
    contains_subgraph_bruteforce,
    contains_tree,
    contains_wheel8,
    count_tree_embeddings,
)
from .graphs import (
    Graph,
    bits,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    random_graph,
)
from .trees import TreeSpec, canonical_code, is_tree


# -- certification --------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """The machine-checked outcome of one lower-bound claim."""

    claim: RamseyClaim
    witness_graph6: str
    tree_absent: bool
    wheel_absent_in_complement: bool
    verdict: str  # "Certified" or "Refuted"
    reason: str = ""
    elapsed: float = 0.0

    @property
    def certified(self) -> bool:
        return self.verdict == "Certified"

    def to_json(self) -> str:
        c = self.claim
        return json.dumps(
            {
                "tag": c.tag,
                "n": c.n,
                "r": c.r,
                "recipe": c.witness.construction,
                "witness_graph6": self.witness_graph6,
                "tree_absent": self.tree_absent,
                "wheel_absent_in_complement": self.wheel_absent_in_complement,
                "verdict": self.verdict,
                "reason": self.reason,
                "elapsed": round(self.elapsed, 4),
            }
        )


def certify(claim: RamseyClaim, witness: Graph | None = None) -> Certificate:
    """Check one claim: build (or accept) the witness, then verify that
    the tree is absent from it and W_8 is absent from its complement.

    A wrong witness refutes rather than errors: the certificate carries
    the offending embedding or wheel for audit.
    """
    t0 = time.perf_counter()
    if witness is None:
        witness = build_witness(claim)
    tree = claim.tree.build()
    reasons = []
    if witness.order != claim.r - 1:
        reasons.append(f"witness order {witness.order} != r-1 = {claim.r - 1}")
    emb = contains_tree(witness, tree) if witness.order >= tree.order else None
    tree_absent = emb is None
    if emb is not None:
        reasons.append(f"tree embeds at {list(emb.mapping)}")
    wheel = contains_wheel8(witness.complement())
    wheel_absent = wheel is None
    if wheel is not None:
        hub, rim = wheel
        reasons.append(f"complement wheel: hub {hub}, rim {list(rim)}")
    ok = tree_absent and wheel_absent and not reasons
    return Certificate(
        claim=claim,
        witness_graph6=graph6_encode(witness),
        tree_absent=tree_absent,
        wheel_absent_in_complement=wheel_absent,
        verdict="Certified" if ok else "Refuted",
        reason="; ".join(reasons),
        elapsed=time.perf_counter() - t0,
    )


def worker_count() -> int:
    """Worker cap from RTW8_THREADS (default 1 = serial)."""
    raw = os.environ.get("RTW8_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ParameterError(f"RTW8_THREADS must be an integer, got {raw!r}")


def certify_all(
    rows: Sequence[RamseyClaim] | None = None, workers: int | None = None
) -> list[Certificate]:
    """Certify every claim row, in deterministic row order.

    With workers > 1 the rows are checked in a process pool; results are
    reassembled in input order, so the output equals the serial run.
    """
    if rows is None:
        rows = certification_rows()
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(rows) <= 1:
        return [certify(c) for c in rows]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(certify, rows, chunksize=8)


# -- exact Ramsey numbers for tiny patterns -------------------------------


@dataclass(frozen=True)
class ExactResult:
    """Outcome of exact_ramsey: the value, or an explicit inconclusive."""

    value: int | None
    status: str  # "exact" or "inconclusive"
    method: str
    critical_graph6: str | None = None

    def __str__(self) -> str:
        return str(self.value) if self.status == "exact" else "inconclusive"


_FULL_SCAN_MAX = 6  # full labeled enumeration bound for unstructured p1


def _matchings(n: int) -> Iterator[Graph]:
    # every P_3-subgraph-free graph is a matching plus isolated vertices
    for k in range(n // 2 + 1):
        yield Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(k)])


def _triangle_star_unions(n: int) -> Iterator[Graph]:
    # every P_4-subgraph-free graph is a disjoint union of triangles and
    # stars (stars of order 1 and 2 cover isolated vertices and edges);
    # components are generated in nonincreasing (order, kind) sequence
    def parts(remaining: int, bound: tuple[int, int]) -> Iterator[tuple[tuple[int, int], ...]]:
        if remaining == 0:
            yield ()
            return
        for size in range(min(remaining, bound[0]), 0, -1):
            kinds = [1, 0] if size == 3 else [0]  # kind 1 = triangle
            for kind in kinds:
                comp = (size, kind)
                if comp > bound:
                    continue
                for rest in parts(remaining - size, comp):
                    yield (comp,) + rest

    for comps in parts(n, (n, 1)):
        g = Graph.empty(0)
        for size, kind in comps:
            part = Graph.cycle(3) if kind else Graph.star(size)
            g = disjoint_union(g, part)
        yield g


def _all_labeled(n: int) -> Iterator[Graph]:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for word in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if word >> i & 1])


def _pattern1_free(p1: Graph, n: int) -> tuple[str, Iterator[Graph]] | None:
    canon = canonical_code(p1) if is_tree(p1) else None
    if p1.order == 2 and p1.edge_count() == 1:
        return "edge-free (empty graph)", iter([Graph.empty(n)])
    if canon is not None and canon == canonical_code(Graph.path(3)):
        return "P_3-free (matchings)", _matchings(n)
    if canon is not None and canon == canonical_code(Graph.path(4)):
        return "P_4-free (triangle/star unions)", _triangle_star_unions(n)
    if n <= _FULL_SCAN_MAX:
        gen = (g for g in _all_labeled(n) if not _contains(g, p1))
        return f"full labeled scan (order <= {_FULL_SCAN_MAX})", gen
    return None


def _contains(host: Graph, pattern: Graph) -> bool:
    if is_tree(pattern):
        return contains_tree(host, pattern) is not None
    if _is_wheel8(pattern):
        return contains_wheel8(host) is not None
    if host.order <= 8:
        return contains_subgraph_bruteforce(host, pattern) is not None
    raise SizeError(
        f"no containment route for order-{pattern.order} pattern "
        f"in order-{host.order} host"
    )


def _is_wheel8(g: Graph) -> bool:
    if g.order != 9 or sorted(g.degrees()) != [3] * 8 + [8]:
        return False
    hub = max(range(9), key=g.degree)
    rim = g.induced(g.rows[hub])
    return contains_cycle(rim, 8) is not None


def exact_ramsey(p1: Graph, p2: Graph, n_max: int) -> ExactResult:
    """The smallest n <= n_max such that every graph of order n contains
    p1 or its complement contains p2 — when the p1-free space can be
    exhausted honestly.

    The counterexample space at each n is the p1-free graphs: the empty
    graph (p1 = single edge), matchings (p1 = P_3), triangle/star unions
    (p1 = P_4), or everything up to the full-scan bound.  The value n is
    established by the previous order's surviving counterexample (the
    critical graph) plus exhaustion at n.
    """
    if p1.order < 2:
        raise ParameterError("pattern1 must have at least one edge to force")
    last_critical: Graph | None = None
    method = ""
    for n in range(2, n_max + 1):
        picked = _pattern1_free(p1, n)
        if picked is None:
            return ExactResult(None, "inconclusive",
                               f"no enumeration route at order {n}")
        method, candidates = picked
        counterexample = None
        for g in candidates:
            if not _contains(g.complement(), p2):
                counterexample = g
                break
        if counterexample is None:
            return ExactResult(
                n, "exact", method,
                graph6_encode(last_critical) if last_critical is not None else None,
            )
        last_critical = counterexample
    return ExactResult(None, "inconclusive",
                       f"{method or 'scan'}: no arrowing order <= {n_max}")


# -- stochastic witness search --------------------------------------------


def _wheel_hub_count(g: Graph, cap: int) -> int:
    comp = g.complement()
    count = 0
    for hub in range(comp.order):
        nbrs = comp.rows[hub]
        if nbrs.bit_count() < 8:
            continue
        if contains_cycle(comp.induced(nbrs), 8) is not None:
            count += 1
            if count >= cap:
                break
    return count


def _cost_parts(g: Graph, tree: Graph, cap: int = 8) -> tuple[int, int]:
    tree_part = count_tree_embeddings(g, tree, cap=cap) if g.order >= tree.order else 0
    return min(tree_part, cap), _wheel_hub_count(g, cap)


def search_cost(g: Graph, tree: Graph, cap: int = 8) -> int:
    """Forbidden-structure count: embeddings of the tree in g plus
    complement wheel hubs, each capped.  Zero means g is a witness."""
    a, b = _cost_parts(g, tree, cap)
    return a + b


def _embedding_pairs(mapping: tuple[int, ...], tree: Graph) -> list[tuple[int, int]]:
    """Host edges used by a tree embedding: deleting any one breaks it."""
    out = []
    for u, v in tree.edges():
        a, b = mapping[u], mapping[v]
        out.append((min(a, b), max(a, b)))
    return out


def _wheel_break_pairs(hub: int, rim: tuple[int, ...]) -> list[tuple[int, int]]:
    """Complement edges of one wheel (rim + spokes): adding any one of
    these pairs to g deletes it from the complement and breaks the wheel."""
    out = []
    for i, a in enumerate(rim):
        b = rim[(i + 1) % len(rim)]
        out.append((min(a, b), max(a, b)))
        out.append((min(hub, a), max(hub, a)))
    return out


def _guide_moves(g: Graph, tree: Graph) -> list[tuple[int, int]]:
    """Edge flips aimed at one concrete offending structure: removing an
    edge used by a found tree embedding, or adding an edge that breaks a
    found complement wheel's rim or spokes."""
    moves: list[tuple[int, int]] = []
    if g.order >= tree.order:
        emb = contains_tree(g, tree)
        if emb is not None:
            moves.extend(_embedding_pairs(emb.mapping, tree))
    wheel = contains_wheel8(g.complement())
    if wheel is not None:
        moves.extend(_wheel_break_pairs(*wheel))
    return moves


def _flipped(g: Graph, pair: tuple[int, int]) -> Graph:
    a, b = pair
    rows = list(g.rows)
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return Graph(g.order, tuple(rows))


_COST_CAP = 8


def _run_search_slice(
    args: tuple[Graph, int, str, int],
) -> tuple[int, int, str]:
    """One restart: local search from a fresh random graph under its own
    RNG stream.  Returns (cost, wheel-hub count, graph6) of the slice's
    final graph; cost 0 means a witness was found.

    The walk drives the cost down in two regimes.  First it strips tree
    embeddings by deleting one edge of a found embedding per step — this
    always terminates since the empty graph is tree-free.  Then it walks
    the tree-free surface: each step breaks one complement wheel by
    adding an edge chosen from its rim and spokes (additions only delete
    complement edges, so no new wheel can appear), preferring the
    addition that lowers the complement hub count most; when every
    break-edge would let the tree back in, it releases the tension by
    deleting one g-edge touching that wheel and re-enters the stripping
    regime if needed.  Tabu tenures discourage undoing recent flips.
    Budget counts structure evaluations (tree searches, wheel searches,
    hub counts).
    """
    tree, order, slice_seed, slice_budget = args
    rng = random.Random(slice_seed)
    g = random_graph(order, rng, p=rng.uniform(0.3, 0.7))
    spent = 0
    tabu: dict[tuple[int, int], int] = {}
    step = 0
    kicks = 0

    def safe(cand: Graph) -> bool:
        return cand.order < tree.order or contains_tree(cand, tree) is None

    def sweep_trianglefree() -> None:
        # Greedily add safe edges that close no triangle, in one random
        # pass: such additions only shrink the candidate set, so a single
        # sweep is maximal.  Bipartite components saturate to complete
        # bipartite blocks this way, a shape plain greedy growth misses.
        nonlocal g, spent
        non_edges = [
            (a, b)
            for a in range(order)
            for b in range(a + 1, order)
            if not g.rows[a] >> b & 1
        ]
        rng.shuffle(non_edges)
        for a, b in non_edges:
            if g.rows[a] & g.rows[b]:
                continue
            if spent >= slice_budget:
                return
            cand = _flipped(g, (a, b))
            spent += 1
            if safe(cand):
                g = cand

    while spent < slice_budget:
        step += 1
        # regime 1: the tree is present — delete an embedding edge
        emb = contains_tree(g, tree) if g.order >= tree.order else None
        spent += 1
        if emb is not None:
            pairs = _embedding_pairs(emb.mapping, tree)
            fresh = [p for p in pairs if tabu.get(p, 0) <= step]
            pair = rng.choice(fresh or pairs)
            g = _flipped(g, pair)
            tabu[pair] = step + order
            continue
        # regime 2: tree-free — break the next complement wheel
        wheel = contains_wheel8(g.complement())
        spent += 1
        if wheel is None:
            return 0, 0, graph6_encode(g)
        breaks = _wheel_break_pairs(*wheel)
        rng.shuffle(breaks)
        move = None
        move_w = None
        for pair in breaks[:8]:
            if tabu.get(pair, 0) > step and move is not None:
                continue
            cand = _flipped(g, pair)
            spent += 1
            if not safe(cand):
                continue
            w = _wheel_hub_count(cand, order)
            spent += 1
            if move_w is None or w < move_w:
                move, move_w = (pair, cand), w
            if w == 0 or spent >= slice_budget:
                break
        if move is not None:
            pair, g = move
            tabu[pair] = step + order
            continue
        # blocked on this wheel: saturate elsewhere — any safe addition
        # densifies g toward a maximal tree-free graph and thins the
        # complement, which can unblock the wheel later
        non_edges = [
            (a, b)
            for a in range(order)
            for b in range(a + 1, order)
            if not g.rows[a] >> b & 1
        ]
        rng.shuffle(non_edges)
        added = False
        for pair in non_edges[:8]:
            if tabu.get(pair, 0) > step:
                continue
            cand = _flipped(g, pair)
            spent += 1
            if safe(cand):
                g = cand
                tabu[pair] = step + order
                added = True
                break
        if added:
            continue
        # fully stuck (saturated, every useful flip unsafe): kick the
        # walk.  Kicks alternate between a small perturbation (clear one
        # vertex of the wheel, let plain greedy growth rebuild — good for
        # clique-union witnesses) and a large one (clear the whole wheel
        # zone, rebuild triangle-averse — complete bipartite blocks,
        # which plain greedy growth cannot assemble, re-form this way).
        kicks += 1
        hub, rim = wheel
        if kicks % 2:
            zone = [v for v in sorted(set(rim) | {hub}) if g.rows[v]]
            if not zone:
                zone = [v for v in range(order) if g.rows[v]]
            if not zone:
                break  # g is empty yet blocked: cannot happen
            v = rng.choice(zone)
            cleared = [(min(v, b), max(v, b)) for b in bits(g.rows[v])]
            for pair in cleared:
                g = _flipped(g, pair)
                tabu[pair] = step + 2 * order
        else:
            zone = sorted(set(rim) | {hub})
            cleared = [
                (min(v, b), max(v, b)) for v in zone for b in bits(g.rows[v])
            ]
            if not cleared:
                break  # the wheel zone is already empty: cannot happen
            for pair in set(cleared):
                g = _flipped(g, pair)
                tabu[pair] = step + 2 * order
            sweep_trianglefree()
    t_part, w_part = _cost_parts(g, tree)
    return t_part + w_part, w_part, graph6_encode(g)


def search_critical(
    pattern: Graph | TreeSpec,
    order: int,
    seed: int = 0,
    budget: int = 20_000,
    workers: int | None = None,
) -> Graph | None:
    """Edge-flip local search for a witness graph of the given order.

    The budget (counted in cost evaluations) is split geometrically
    (1/2, 1/4, ...) across independent restarts, each a fresh random
    graph at edge density drawn uniformly from [0.3, 0.7] walked by
    guided/tabu edge flips minimizing search_cost.  Restart RNG streams
    are derived from (seed, restart index), so results are identical for
    any worker count; the first restart (in index order) that reaches
    cost 0 provides the answer.  Returns a cost-0 graph or None.
    """
    tree = pattern.build() if isinstance(pattern, TreeSpec) else pattern
    if not is_tree(tree):
        raise ShapeError("search pattern must be a tree")
    if order > 64:
        raise SizeError(f"search order capped at 64, got {order}")
    if order < tree.order - 1:
        raise ParameterError("search order is below the generic witness order")
    slices: list[tuple[Graph, int, str, int]] = []
    b = budget // 2
    while b >= 1:
        slices.append((tree, order, f"{seed}:{len(slices)}", b))
        b //= 2
    if not slices:
        slices.append((tree, order, f"{seed}:0", max(1, budget)))
    n_workers = worker_count() if workers is None else workers
    if n_workers > 1 and len(slices) > 1:
        with multiprocessing.Pool(min(n_workers, len(slices))) as pool:
            results = pool.map(_run_search_slice, slices)
        for (cost, _hubs, g6) in results:
            if cost == 0:
                return graph6_decode(g6)
        return None
    for spec in slices:
        cost, _hubs, g6 = _run_search_slice(spec)
        if cost == 0:
            return graph6_decode(g6)
    return None
