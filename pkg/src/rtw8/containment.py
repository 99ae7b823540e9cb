"""Subgraph containment searches: trees, cycles, wheels, partitions.

Everything here answers questions of the form "does this host contain a
copy of that structure", with bit-parallel pruning so that refutations
(the expensive direction) stay fast on hosts up to order 31:

* :func:`contains_tree` — backtracking tree embedding with three prunes:
  hosts are restricted to components large enough to hold the tree,
  isomorphic sibling subtrees are forced onto ascending host vertices
  (killing the factorial blow-up on stars), and a one-step forward check
  discards images whose free neighbourhood cannot seat the children.
* :func:`contains_cycle` / :func:`contains_wheel8` — fixed-length cycle
  search with exact distance-to-start pruning, run inside each would-be
  hub neighbourhood for wheels.
* :func:`independent_partition` — equitable partition into independent
  sets, i.e. embedding into a balanced complete multipartite graph.
* :func:`contains_subgraph_bruteforce` / :func:`contains_wheel8_bruteforce`
  — small, obviously-correct exhaustive routines kept as independent
  test oracles for the clever ones.

All searches are deterministic: candidates are tried in ascending vertex
order, so equal inputs give equal embeddings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterError, ShapeError, SizeError
from .graphs import Graph, bits, connected_components
from .trees import is_tree, rooted_code


@dataclass(frozen=True)
class Embedding:
    """A vertex map witnessing a subgraph copy: pattern i -> mapping[i]."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        """Check injectivity and that every pattern edge maps to a host edge."""
        if len(self.mapping) != pattern.order:
            return False
        if len(set(self.mapping)) != len(self.mapping):
            return False
        if any(not 0 <= h < host.order for h in self.mapping):
            return False
        return all(
            host.has_edge(self.mapping[u], self.mapping[v])
            for u, v in pattern.edges()
        )


# -- tree containment ---------------------------------------------------


class _TreePlan:
    """Preprocessed embedding order for a pattern tree.

    Vertices are visited in BFS order from a maximum-degree root, with
    each vertex's children sorted by decreasing subtree size (fail-first)
    and ties broken by their rooted AHU code, so that isomorphic sibling
    subtrees sit next to each other and can share an ordered-image
    symmetry-breaking constraint.
    """

    def __init__(self, pattern: Graph) -> None:
        n = pattern.order
        root = min(range(n), key=lambda v: (-pattern.degree(v), v))
        parent = [-1] * n
        bfs = [root]
        seen = 1 << root
        for v in bfs:
            for u in bits(pattern.rows[v] & ~seen):
                seen |= 1 << u
                parent[u] = v
                bfs.append(u)
        size = [1] * n
        for v in reversed(bfs):
            if parent[v] >= 0:
                size[parent[v]] += size[v]
        codes = {
            v: rooted_code(pattern, v, parent[v]) for v in range(n) if v != root
        }
        order = [root]
        sibling_prev = [-1] * n
        children_count = [0] * n
        for v in order:
            kids = sorted(
                bits(pattern.rows[v] & ~(1 << parent[v] if parent[v] >= 0 else 0)),
                key=lambda u: (-size[u], codes[u], u),
            )
            kids = [u for u in kids if parent[u] == v]
            children_count[v] = len(kids)
            for i, u in enumerate(kids):
                if i > 0 and codes[kids[i - 1]] == codes[u]:
                    sibling_prev[u] = kids[i - 1]
                order.append(u)
        self.root = root
        self.order = order
        self.parent = parent
        self.sibling_prev = sibling_prev
        self.children_count = children_count
        self.degree = pattern.degrees()


def _degree_masks(host: Graph, needed: set[int]) -> dict[int, int]:
    degs = host.degrees()
    out = {}
    for d in needed:
        m = 0
        for v, dv in enumerate(degs):
            if dv >= d:
                m |= 1 << v
        out[d] = m
    return out


def contains_tree(host: Graph, pattern: Graph) -> Embedding | None:
    """Find a (not necessarily induced) copy of the tree ``pattern`` in ``host``.

    Returns the lexicographically least embedding under the plan's
    deterministic candidate order, or None if there is no copy.

    Raises:
        ShapeError: if ``pattern`` is not a tree.
    """
    if not is_tree(pattern):
        raise ShapeError("contains_tree expects a tree pattern")
    np_ = pattern.order
    if np_ > host.order:
        return None
    if np_ == 1:
        return Embedding((0,)) if host.order >= 1 else None
    big = 0
    for comp in connected_components(host):
        if comp.bit_count() >= np_:
            big |= comp
    if not big:
        return None
    plan = _TreePlan(pattern)
    degmask = _degree_masks(host, set(plan.degree))
    img = [-1] * np_
    order, parent = plan.order, plan.parent
    sibling_prev, children_count = plan.sibling_prev, plan.children_count
    pdeg = plan.degree
    rows = host.rows

    def place(i: int, used: int) -> bool:
        if i == np_:
            return True
        u = order[i]
        cand = rows[img[parent[u]]] & ~used & degmask[pdeg[u]]
        prev = sibling_prev[u]
        if prev >= 0:
            cand &= ~((2 << img[prev]) - 1)
        need = children_count[u]
        for h in bits(cand):
            if (rows[h] & ~used).bit_count() < need:
                continue
            img[u] = h
            if place(i + 1, used | (1 << h)):
                return True
        img[u] = -1
        return False

    root = plan.root
    need = children_count[root]
    for h in bits(big & degmask[pdeg[root]]):
        if rows[h].bit_count() < need:
            continue
        img[root] = h
        if place(1, 1 << h):
            return Embedding(tuple(img))
    return None


def count_tree_embeddings(host: Graph, pattern: Graph, cap: int) -> int:
    """Count distinct symmetry-reduced tree embeddings, stopping at ``cap``.

    Isomorphic sibling subtrees are counted once per ordered image set,
    so this is a canonical-copy count: it is zero exactly when
    :func:`contains_tree` returns None, which is all the optimisation
    cost functions need.
    """
    if not is_tree(pattern):
        raise ShapeError("count_tree_embeddings expects a tree pattern")
    if cap <= 0:
        return 0
    np_ = pattern.order
    if np_ > host.order:
        return 0
    if np_ == 1:
        return min(cap, host.order)
    big = 0
    for comp in connected_components(host):
        if comp.bit_count() >= np_:
            big |= comp
    if not big:
        return 0
    plan = _TreePlan(pattern)
    degmask = _degree_masks(host, set(plan.degree))
    img = [-1] * np_
    order, parent = plan.order, plan.parent
    sibling_prev, children_count = plan.sibling_prev, plan.children_count
    pdeg = plan.degree
    rows = host.rows
    found = 0

    def place(i: int, used: int) -> bool:
        nonlocal found
        if i == np_:
            found += 1
            return found >= cap
        u = order[i]
        cand = rows[img[parent[u]]] & ~used & degmask[pdeg[u]]
        prev = sibling_prev[u]
        if prev >= 0:
            cand &= ~((2 << img[prev]) - 1)
        need = children_count[u]
        for h in bits(cand):
            if (rows[h] & ~used).bit_count() < need:
                continue
            img[u] = h
            if place(i + 1, used | (1 << h)):
                return True
        img[u] = -1
        return False

    root = plan.root
    for h in bits(big & degmask[pdeg[root]]):
        if rows[h].bit_count() < children_count[root]:
            continue
        img[root] = h
        if place(1, 1 << h):
            break
    return found


# -- cycles and wheels ----------------------------------------------------


def _cycle_in_mask(g: Graph, mask: int, length: int) -> tuple[int, ...] | None:
    """A cycle of exactly ``length`` vertices inside the vertex set ``mask``.

    Starts are tried in ascending order and each start only uses vertices
    above it, so every cycle is searched once.  Candidates are pruned by
    exact BFS distance back to the start: with j vertices placed, the
    next vertex must be within distance length - j of the start.
    """
    if length < 3 or mask.bit_count() < length:
        return None
    rows = g.rows
    for s in bits(mask):
        allowed = mask & ~((1 << s) - 1)
        if allowed.bit_count() < length:
            break
        cum = [1 << s]
        frontier = 1 << s
        seen = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= allowed & ~seen
            seen |= nxt
            cum.append(seen)
            frontier = nxt
        if not (cum[min(length, len(cum) - 1)] >> s) & 1 or seen.bit_count() < length:
            # the start's component inside `allowed` is too small
            continue
        top = len(cum) - 1
        path = [s]

        def dfs(v: int, visited: int, placed: int) -> bool:
            if placed == length:
                return bool((rows[v] >> s) & 1)
            cand = rows[v] & allowed & ~visited & cum[min(length - placed, top)]
            for w in bits(cand):
                path.append(w)
                if dfs(w, visited | (1 << w), placed + 1):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s, 1):
            return tuple(path)
    return None


def contains_cycle(g: Graph, length: int) -> tuple[int, ...] | None:
    """A cycle through exactly ``length`` vertices of ``g``, or None."""
    if length < 3:
        raise ParameterError(f"cycles have length >= 3, got {length}")
    return _cycle_in_mask(g, g.vertices_mask(), length)


def is_pancyclic(g: Graph) -> bool:
    """True iff ``g`` contains cycles of every length 3..order."""
    if g.order < 3:
        return False
    return all(contains_cycle(g, L) is not None for L in range(3, g.order + 1))


def contains_wheel8(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Find a W_8 (hub joined to an 8-cycle): returns (hub, rim) or None.

    Tries hubs in ascending order; the rim search runs inside the hub's
    neighbourhood only.
    """
    for hub in range(g.order):
        nb = g.rows[hub]
        if nb.bit_count() < 8:
            continue
        rim = _cycle_in_mask(g, nb, 8)
        if rim is not None:
            return hub, rim
    return None


# -- equitable independent partitions -------------------------------------


def independent_partition(
    g: Graph, parts: int, part_size: int
) -> tuple[tuple[int, ...], ...] | None:
    """Partition the vertices into ``parts`` independent sets of equal size.

    Such a partition exists exactly when ``g`` embeds in the balanced
    complete multipartite graph with that shape (the graph order must be
    parts * part_size).  Vertices are placed in decreasing-degree order
    and the first empty part is the only empty part tried, which breaks
    the part-permutation symmetry.
    """
    if parts < 1 or part_size < 1:
        raise ParameterError("parts and part_size must be positive")
    if parts * part_size != g.order:
        raise ParameterError(
            f"order {g.order} != parts {parts} x size {part_size}"
        )
    vs = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    masks = [0] * parts
    counts = [0] * parts

    def place(i: int) -> bool:
        if i == len(vs):
            return True
        v = vs[i]
        tried_empty = False
        for p in range(parts):
            if counts[p] == part_size:
                continue
            if counts[p] == 0:
                if tried_empty:
                    continue
                tried_empty = True
            if g.rows[v] & masks[p]:
                continue
            masks[p] |= 1 << v
            counts[p] += 1
            if place(i + 1):
                return True
            masks[p] &= ~(1 << v)
            counts[p] -= 1
        return False

    if not place(0):
        return None
    return tuple(tuple(bits(m)) for m in masks)


# -- brute-force oracles ---------------------------------------------------


def contains_subgraph_bruteforce(host: Graph, pattern: Graph) -> Embedding | None:
    """Exhaustive subgraph search by trying every injective vertex map.

    Deliberately naive: it exists as an independent oracle for the
    optimised searches, so hosts are capped at order 8 to keep the
    permutation scan honest and fast.
    """
    if host.order > 8:
        raise SizeError("bruteforce oracle is capped at host order 8")
    if pattern.order > host.order:
        return None
    pedges = list(pattern.edges())
    for perm in itertools.permutations(range(host.order), pattern.order):
        if all((host.rows[perm[u]] >> perm[v]) & 1 for u, v in pedges):
            return Embedding(perm)
    return None


def _hamiltonian_cycle_8(g: Graph, vertices: tuple[int, ...]) -> tuple[int, ...] | None:
    """Hamilton cycle through an 8-vertex subset, by plain backtracking."""
    idx = {v: i for i, v in enumerate(vertices)}
    adj = [
        [u for u in vertices if (g.rows[v] >> u) & 1 and u in idx] for v in vertices
    ]
    if any(len(a) < 2 for a in adj):
        return None
    start = vertices[0]
    path = [start]
    visited = {start}

    def extend() -> bool:
        if len(path) == 8:
            return (g.rows[path[-1]] >> start) & 1 == 1
        for u in adj[idx[path[-1]]]:
            if u not in visited:
                visited.add(u)
                path.append(u)
                if extend():
                    return True
                path.pop()
                visited.remove(u)
        return False

    return tuple(path) if extend() else None


def contains_wheel8_bruteforce(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Wheel oracle: every hub, every 8-subset of its neighbourhood,
    Hamiltonicity by backtracking.  Slow but structurally independent of
    :func:`contains_wheel8`."""
    for hub in range(g.order):
        nbrs = list(bits(g.rows[hub]))
        if len(nbrs) < 8:
            continue
        for sub in itertools.combinations(nbrs, 8):
            rim = _hamiltonian_cycle_8(g, sub)
            if rim is not None:
                return hub, rim
    return None
