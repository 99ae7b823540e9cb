"""Tree families, canonical forms, enumeration, and the tag catalog.

The certified claims concern trees built from a small vocabulary of
families.  Writing S_k for the star on k vertices (centre plus k-1
leaves), the families of order n are:

* ``S_n`` — the star itself.
* ``S_n(l, m)`` — take S_{n-lm} and subdivide l of its edges m times
  each (``l`` branches of length ``m+1``, the rest plain leaves).
* ``S_n(l)`` — the centres of S_l and S_{n-l} joined by an edge.
* ``S_n[l]`` — the centre of S_{n-l} joined to a *leaf* of S_l.
* named shapes: ``A``-``E`` (the five order-7 trees of maximum degree
  3) and ``T_A``-``T_S`` (the remaining shapes of maximum degree n-4
  and n-5; the letters I and O are unused).

Every named tree of maximum degree n-4 or n-5 is a hub vertex 0, spokes
1..k (k = n-4 or n-5), and three or four extra vertices w_1..w_4 hanging
off the spokes; :data:`T_TREE_EDGES` records the extra edges.

The module also provides AHU canonical codes for free trees, exhaustive
enumeration of isomorphism classes by leaf extension, an independent
Pruefer-sequence enumerator used as a small-order test oracle, and
:func:`reconstruct_catalog`, which matches the named tags against the
exhaustively enumerated classes of a given maximum degree and fails
loudly on any mismatch.
"""

from __future__ import annotations

import functools
import heapq
import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import ParameterError, ReconstructionError, ShapeError, SizeError
from .graphs import Graph, bits, is_connected

# -- tree specifications ----------------------------------------------


@dataclass(frozen=True)
class TreeSpec:
    """A buildable description of a tree.

    Use the classmethod constructors; they validate parameters.  ``kind``
    is one of ``star``, ``subdivided_star``, ``two_star_bridge``,
    ``star_leaf_bridge``, ``named``, ``explicit``.
    """

    kind: str
    n: int
    ell: int | None = None
    m: int | None = None
    tag: str | None = None
    edge_list: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def star(cls, n: int) -> "TreeSpec":
        """S_n: centre 0, leaves 1..n-1."""
        if n < 1:
            raise ParameterError(f"star order must be >= 1, got {n}")
        return cls("star", n)

    @classmethod
    def subdivided_star(cls, n: int, ell: int, m: int) -> "TreeSpec":
        """S_n(l, m): S_{n-lm} with l edges subdivided m times each.

        Labelling: centre 0; branch b (0-based) is the chain
        ``0 - (1+b(m+1)) - ... - ((b+1)(m+1))``; plain leaves follow.
        Requires l >= 1, m >= 1 and l(m+1) <= n-1.
        """
        if ell < 1 or m < 1:
            raise ParameterError(f"S_n(l, m) needs l, m >= 1, got l={ell}, m={m}")
        if ell * (m + 1) > n - 1:
            raise ParameterError(
                f"S_{n}({ell},{m}) infeasible: {ell} branches of {m + 1} edges exceed {n - 1}"
            )
        return cls("subdivided_star", n, ell=ell, m=m)

    @classmethod
    def two_star_bridge(cls, n: int, ell: int) -> "TreeSpec":
        """S_n(l): centres of S_{n-l} and S_l joined by an edge.

        Labelling: 0 = centre of S_{n-l}, 1 = centre of S_l, 2..n-l-1+1 =
        leaves of the first star, the rest leaves of the second.
        Requires 2 <= l <= n-2.
        """
        if not 2 <= ell <= n - 2:
            raise ParameterError(f"S_{n}({ell}) needs 2 <= l <= n-2")
        return cls("two_star_bridge", n, ell=ell)

    @classmethod
    def star_leaf_bridge(cls, n: int, ell: int) -> "TreeSpec":
        """S_n[l]: centre of S_{n-l} joined to a leaf of S_l.

        Labelling: 0 = centre of S_{n-l}; 1 = the joined leaf of S_l;
        2 = centre of S_l; 3..l = remaining leaves of S_l; l+1..n-1 =
        remaining leaves of S_{n-l}.  Requires 2 <= l <= n-2.
        """
        if not 2 <= ell <= n - 2:
            raise ParameterError(f"S_{n}[{ell}] needs 2 <= l <= n-2")
        return cls("star_leaf_bridge", n, ell=ell)

    @classmethod
    def named(cls, tag: str, n: int) -> "TreeSpec":
        """A named catalog shape: ``A``-``E`` (n = 7) or ``T_A``-``T_S``."""
        if tag in ORDER7_EDGES:
            if n != 7:
                raise ParameterError(f"tree {tag} has order 7, got n={n}")
            return cls("named", n, tag=tag)
        if tag in T_TREE_EDGES:
            if n < _t_tree_min_order(tag):
                raise ParameterError(
                    f"{tag} needs order >= {_t_tree_min_order(tag)}, got {n}"
                )
            return cls("named", n, tag=tag)
        raise ParameterError(f"unknown named tree tag {tag!r}")

    @classmethod
    def explicit(cls, n: int, edges: Iterable[tuple[int, int]]) -> "TreeSpec":
        """An explicit tree given by its edge list on vertices 0..n-1."""
        g = Graph.from_edges(n, edges)
        if not is_tree(g):
            raise ShapeError("explicit edge list does not form a tree")
        return cls("explicit", n, edge_list=tuple(sorted(tuple(sorted(e)) for e in g.edges())))

    @classmethod
    def path(cls, n: int) -> "TreeSpec":
        """P_n, expressed through the family vocabulary."""
        if n < 1:
            raise ParameterError(f"path order must be >= 1, got {n}")
        if n <= 2:
            return cls.star(n)
        return cls.subdivided_star(n, 1, n - 2)

    def build(self) -> Graph:
        """Materialise the tree with the documented labelling."""
        if self.kind == "star":
            return Graph.star(self.n)
        if self.kind == "subdivided_star":
            n, ell, m = self.n, self.ell, self.m
            edges = []
            v = 1
            for _ in range(ell):
                prev = 0
                for _ in range(m + 1):
                    edges.append((prev, v))
                    prev = v
                    v += 1
            while v < n:
                edges.append((0, v))
                v += 1
            return Graph.from_edges(n, edges)
        if self.kind == "two_star_bridge":
            n, ell = self.n, self.ell
            edges = [(0, 1)]
            edges += [(0, v) for v in range(2, n - ell + 1)]
            edges += [(1, v) for v in range(n - ell + 1, n)]
            return Graph.from_edges(n, edges)
        if self.kind == "star_leaf_bridge":
            n, ell = self.n, self.ell
            edges = [(0, 1), (1, 2)]
            edges += [(2, v) for v in range(3, ell + 1)]
            edges += [(0, v) for v in range(ell + 1, n)]
            return Graph.from_edges(n, edges)
        if self.kind == "named":
            return _build_named(self.tag, self.n)
        if self.kind == "explicit":
            return Graph.from_edges(self.n, self.edge_list)
        raise ParameterError(f"unknown tree kind {self.kind!r}")


# -- named shapes ------------------------------------------------------

#: The five order-7 trees of maximum degree 3 (explicit edge lists).
ORDER7_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "A": ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6)),
    "B": ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)),
    "C": ((0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)),
    "D": ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)),
    "E": ((0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)),
}

#: Extra edges of the named hub trees, over hub 0 and spokes v_1..v_k.
#: ``T_A``-``T_C`` add three vertices w_1..w_3 (so k = n-4); the rest add
#: four (k = n-5).  Tokens ``v{i}``/``w{j}`` map to vertices i and k+j.
T_TREE_EDGES: dict[str, tuple[tuple[str, str], ...]] = {
    "T_A": (("v1", "w1"), ("v1", "w2"), ("w1", "w3")),
    "T_B": (("v1", "w1"), ("w1", "w2"), ("v2", "w3")),
    "T_C": (("v1", "w1"), ("v1", "w2"), ("v2", "w3")),
    "T_D": (("v1", "w1"), ("w1", "w2"), ("w1", "w3"), ("w2", "w4")),
    "T_E": (("v1", "w1"), ("v1", "w2"), ("v2", "w3"), ("v3", "w4")),
    "T_F": (("v1", "w1"), ("v1", "w2"), ("v2", "w3"), ("v2", "w4")),
    "T_G": (("v1", "w1"), ("v2", "w2"), ("v3", "w3"), ("w3", "w4")),
    "T_H": (("v1", "w1"), ("w1", "w2"), ("w2", "w3"), ("v2", "w4")),
    "T_J": (("v1", "w1"), ("v1", "w2"), ("w1", "w3"), ("v2", "w4")),
    "T_K": (("v1", "w1"), ("w1", "w2"), ("w2", "w3"), ("w2", "w4")),
    "T_L": (("v1", "w1"), ("w1", "w2"), ("w2", "w3"), ("v1", "w4")),
    "T_M": (("v1", "w1"), ("v1", "w2"), ("v1", "w3"), ("w1", "w4")),
    "T_N": (("v1", "w1"), ("v1", "w2"), ("w1", "w3"), ("w2", "w4")),
    "T_P": (("v1", "w1"), ("v1", "w2"), ("w2", "w3"), ("w2", "w4")),
    "T_Q": (("v1", "w1"), ("v1", "w2"), ("v1", "w3"), ("v2", "w4")),
    "T_R": (("v1", "w1"), ("w1", "w2"), ("v2", "w3"), ("v2", "w4")),
    "T_S": (("v1", "w1"), ("v2", "w2"), ("w2", "w3"), ("w2", "w4")),
}

#: Tags whose shape identification rests on indirect cross-checks rather
#: than an explicit drawing or definition in the source material.
PROVISIONAL_TAGS: frozenset[str] = frozenset(
    {"T_D", "T_E", "T_F", "T_J", "T_K", "T_L", "T_N", "T_Q"}
)


def _t_tree_extras(tag: str) -> int:
    return len({b for _, b in T_TREE_EDGES[tag]})


def _t_tree_min_order(tag: str) -> int:
    max_v = max(int(a[1:]) for a, _ in T_TREE_EDGES[tag] if a.startswith("v"))
    return 1 + max_v + _t_tree_extras(tag)


def _build_named(tag: str, n: int) -> Graph:
    if tag in ORDER7_EDGES:
        return Graph.from_edges(7, ORDER7_EDGES[tag])
    extras = _t_tree_extras(tag)
    k = n - 1 - extras

    def vertex(token: str) -> int:
        idx = int(token[1:])
        return idx if token[0] == "v" else k + idx

    edges = [(0, v) for v in range(1, k + 1)]
    edges += [(vertex(a), vertex(b)) for a, b in T_TREE_EDGES[tag]]
    return Graph.from_edges(n, edges)


# -- canonical forms ---------------------------------------------------


def is_tree(g: Graph) -> bool:
    """True iff ``g`` is connected with exactly order-1 edges."""
    return g.order >= 1 and g.edge_count() == g.order - 1 and is_connected(g)


def tree_centers(g: Graph) -> list[int]:
    """The one or two centre vertices of a tree (iterated leaf removal)."""
    n = g.order
    if n <= 2:
        return list(range(n))
    deg = g.degrees()
    removed = 0
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        for v in layer:
            removed |= 1 << v
        nxt = []
        for v in layer:
            remaining -= 1
            for u in bits(g.rows[v] & ~removed):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def rooted_code(g: Graph, root: int, parent: int = -1) -> str:
    """AHU code of the subtree of ``g`` rooted at ``root`` away from ``parent``.

    Two rooted trees are isomorphic iff their codes are equal.
    """
    kids = sorted(
        rooted_code(g, u, root) for u in bits(g.rows[root]) if u != parent
    )
    return "(" + "".join(kids) + ")"


def canonical_code(g: Graph) -> str:
    """Canonical form of a free tree: equal codes iff isomorphic.

    The tree is rooted at its centre; a bicentral tree is coded as the
    sorted pair of half codes so the two cases cannot collide.
    """
    if not is_tree(g):
        raise ShapeError("canonical_code expects a tree")
    centers = tree_centers(g)
    if len(centers) == 1:
        return "1" + rooted_code(g, centers[0])
    a, b = centers
    ca, cb = sorted((rooted_code(g, a, b), rooted_code(g, b, a)))
    return "2" + ca + cb


def is_isomorphic_tree(a: Graph, b: Graph) -> bool:
    return canonical_code(a) == canonical_code(b)


# -- enumeration -------------------------------------------------------

MAX_ENUM_ORDER = 18


@functools.lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes of trees on ``n`` vertices (1 <= n <= 18).

    Classes are produced by attaching a leaf to every vertex of every
    class one order down and deduplicating by canonical code (every tree
    arises this way, since removing a leaf yields a smaller tree).  The
    result is sorted by canonical code, so the order is deterministic.
    Orders above 14 take minutes; the hard cap keeps memory sane.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise SizeError(f"tree enumeration supports 1..{MAX_ENUM_ORDER}, got {n}")
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[str, Graph] = {}
    for t in enumerate_trees(n - 1):
        for v in range(n - 1):
            rows = list(t.rows) + [1 << v]
            rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            code = canonical_code(g)
            if code not in seen:
                seen[code] = g
    return tuple(seen[c] for c in sorted(seen))


def prufer_trees(n: int) -> frozenset[str]:
    """Canonical codes of all trees on ``n`` vertices via Pruefer sequences.

    Decodes every sequence in {0..n-1}^{n-2}, so it is exponential and
    capped at n <= 8; it exists as an independent oracle for
    :func:`enumerate_trees` in tests.
    """
    if not 1 <= n <= 8:
        raise SizeError(f"Pruefer enumeration is a small-order oracle (1..8), got {n}")
    if n == 1:
        return frozenset({canonical_code(Graph.empty(1))})
    if n == 2:
        return frozenset({canonical_code(Graph.path(2))})
    codes = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        codes.add(canonical_code(_prufer_decode(seq, n)))
    return frozenset(codes)


def _prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


# -- the tag catalog ---------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A named one-parameter tree family."""

    template: str  # display template, e.g. "S_n(4)" or "T_A" or "A"
    min_n: int
    maker: Callable[[int], TreeSpec]

    def tag_at(self, n: int) -> str:
        if self.template in ORDER7_EDGES:
            return self.template
        if self.template.startswith("S_n"):
            return f"S_{n}" + self.template[3:]
        return f"{self.template}({n})"


def _fam(template: str, min_n: int, maker: Callable[[int], TreeSpec]) -> Family:
    return Family(template, min_n, maker)


ORDER7_FAMILIES: tuple[Family, ...] = tuple(
    _fam(tag, 7, (lambda t: lambda n: TreeSpec.named(t, n))(tag))
    for tag in "ABCDE"
)

DELTA4_FAMILIES: tuple[Family, ...] = (
    _fam("S_n(4)", 6, lambda n: TreeSpec.two_star_bridge(n, 4)),
    _fam("S_n[4]", 6, lambda n: TreeSpec.star_leaf_bridge(n, 4)),
    _fam("S_n(1,3)", 5, lambda n: TreeSpec.subdivided_star(n, 1, 3)),
    _fam("S_n(3,1)", 7, lambda n: TreeSpec.subdivided_star(n, 3, 1)),
    _fam("T_A", 6, lambda n: TreeSpec.named("T_A", n)),
    _fam("T_B", 7, lambda n: TreeSpec.named("T_B", n)),
    _fam("T_C", 7, lambda n: TreeSpec.named("T_C", n)),
)

DELTA5_FAMILIES: tuple[Family, ...] = (
    _fam("S_n(5)", 7, lambda n: TreeSpec.two_star_bridge(n, 5)),
    _fam("S_n[5]", 7, lambda n: TreeSpec.star_leaf_bridge(n, 5)),
    _fam("S_n(1,4)", 6, lambda n: TreeSpec.subdivided_star(n, 1, 4)),
    _fam("S_n(4,1)", 9, lambda n: TreeSpec.subdivided_star(n, 4, 1)),
    _fam("S_n(2,2)", 7, lambda n: TreeSpec.subdivided_star(n, 2, 2)),
) + tuple(
    _fam(tag, _t_tree_min_order(tag), (lambda t: lambda n: TreeSpec.named(t, n))(tag))
    for tag in (
        "T_D", "T_E", "T_F", "T_G", "T_H", "T_J", "T_K",
        "T_L", "T_M", "T_N", "T_P", "T_Q", "T_R", "T_S",
    )
)


@dataclass(frozen=True)
class CatalogEntry:
    """One named isomorphism class of the reconstructed catalog.

    ``tree`` carries the family's documented labelling (hub first), not
    the enumeration representative.  ``provisional`` marks tags whose
    shape rests on indirect cross-checks.
    """

    tag: str
    family: str
    tree: Graph
    canon: str
    provisional: bool


def count_classes(n: int, delta: int) -> int:
    """Number of isomorphism classes of order-n trees with max degree ``delta``."""
    return sum(1 for t in enumerate_trees(n) if t.max_degree() == delta)


def reconstruct_catalog(n: int, delta: int) -> tuple[CatalogEntry, ...]:
    """Match named family tags against the enumerated classes of max
    degree ``delta`` in order ``n``.

    ``delta`` must be n-4 or n-5.  Families participate only when their
    order-n member actually has max degree ``delta`` (small orders shift
    some families into the other class).  Any unnamed class, unmatched
    tag expectation, or two tags landing on one class raises
    :class:`ReconstructionError` with a full diagnostic listing; a clean
    bijection is exactly what "the catalog is reconstructed" means.
    """
    if delta == n - 4 and n == 7:
        families = ORDER7_FAMILIES
    elif delta == n - 4 and n >= 8:
        families = DELTA4_FAMILIES
    elif delta == n - 5 and n >= 8:
        families = DELTA5_FAMILIES
    else:
        raise ParameterError(
            f"catalog classes have max degree n-4 or n-5 (order >= 7/8), got n={n}, delta={delta}"
        )
    classes = {
        canonical_code(t): t for t in enumerate_trees(n) if t.max_degree() == delta
    }
    matches: dict[str, list[tuple[Family, Graph]]] = {c: [] for c in classes}
    problems: list[str] = []
    for fam in families:
        if fam.min_n > n:
            continue
        built = fam.maker(n).build()
        if built.max_degree() != delta:
            continue
        code = canonical_code(built)
        # The enumeration is exhaustive, so a family of the right order
        # and degree always has a class to land on.
        matches[code].append((fam, built))
    entries = []
    for code, hits in matches.items():
        if not hits:
            from .graphs import graph6_encode

            problems.append(f"unnamed class: {graph6_encode(classes[code])}")
        elif len(hits) > 1:
            tags = ", ".join(f.tag_at(n) for f, _ in hits)
            problems.append(f"tag conflict: {tags} are isomorphic at n={n}")
    if problems:
        raise ReconstructionError(
            f"catalog reconstruction failed at n={n}, delta={delta}:\n  "
            + "\n  ".join(sorted(problems))
        )
    for fam in families:
        if fam.min_n > n:
            continue
        built = fam.maker(n).build()
        if built.max_degree() != delta:
            continue
        entries.append(
            CatalogEntry(
                tag=fam.tag_at(n),
                family=fam.template,
                tree=built,
                canon=canonical_code(built),
                provisional=fam.template in PROVISIONAL_TAGS,
            )
        )
    return tuple(entries)


def delta5_stability(n_hi: int = 14) -> tuple[int | None, dict[int, int]]:
    """Class counts of the max-degree-(n-5) series and its stability point.

    Returns ``(threshold, counts)`` where ``counts[n]`` is the number of
    order-n classes with max degree n-5 for n in 8..n_hi and
    ``threshold`` is the smallest n from which every count up to n_hi
    equals 19 (``None`` if that never happens).
    """
    counts = {n: count_classes(n, n - 5) for n in range(8, n_hi + 1)}
    threshold = None
    for n in range(8, n_hi + 1):
        if all(counts[m] == 19 for m in range(n, n_hi + 1)):
            threshold = n
            break
    return threshold, counts


# -- tag parsing -------------------------------------------------------

_T_TAG_RE = re.compile(r"^T_?([A-HJ-NP-S])(?:\((\d+)\))?$")
_S_TAG_RE = re.compile(r"^S_?(\d+|n)\((\d+)(?:,(\d+))?\)$")
_S_BRACKET_RE = re.compile(r"^S_?(\d+|n)\[(\d+)\]$")
_PLAIN_RE = re.compile(r"^([SP])_?(\d+|n)$")


def parse_tree_tag(text: str, n: int | None = None) -> TreeSpec:
    """Parse a tree tag such as ``A``, ``T_E(8)``, ``S_9(4)``, ``S_n[4]``,
    ``S_12``, or ``P_7`` into a :class:`TreeSpec`.

    Family templates written with a literal ``n`` (or a ``T_X`` tag
    without parentheses) need the ``n`` argument.  A tag that carries its
    own order must not contradict a given ``n``.
    """
    s = text.strip()

    def resolve(token: str) -> int:
        if token == "n":
            if n is None:
                raise ParameterError(f"tag {text!r} needs an explicit order n")
            return n
        value = int(token)
        if n is not None and n != value:
            raise ParameterError(f"tag {text!r} conflicts with n={n}")
        return value

    if s in ORDER7_EDGES:
        if n is not None and n != 7:
            raise ParameterError(f"tree {s} has order 7, got n={n}")
        return TreeSpec.named(s, 7)
    match = _T_TAG_RE.match(s)
    if match:
        letter, order = match.groups()
        if order is None:
            if n is None:
                raise ParameterError(f"tag {text!r} needs an explicit order n")
            order_n = n
        else:
            order_n = resolve(order)
        return TreeSpec.named(f"T_{letter}", order_n)
    match = _S_TAG_RE.match(s)
    if match:
        order_n = resolve(match.group(1))
        first = int(match.group(2))
        if match.group(3) is not None:
            return TreeSpec.subdivided_star(order_n, first, int(match.group(3)))
        return TreeSpec.two_star_bridge(order_n, first)
    match = _S_BRACKET_RE.match(s)
    if match:
        return TreeSpec.star_leaf_bridge(resolve(match.group(1)), int(match.group(2)))
    match = _PLAIN_RE.match(s)
    if match:
        order_n = resolve(match.group(2))
        if match.group(1) == "S":
            return TreeSpec.star(order_n)
        return TreeSpec.path(order_n)
    raise ParameterError(f"unrecognised tree tag {text!r}")
