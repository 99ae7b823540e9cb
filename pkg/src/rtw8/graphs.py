"""Bit-packed simple graphs and the graph6 interchange codec.

A :class:`Graph` stores one Python integer per vertex, whose bit ``u`` is
set iff that vertex is adjacent to ``u``.  Neighbourhood intersection,
degree counting and independence tests then become single word-parallel
integer operations, which is what makes the backtracking searches in
:mod:`rtw8.containment` fast enough for order-31 hosts.  Graphs are
immutable after construction; orders up to 128 are supported, which
comfortably covers every graph this package manipulates.

Vertex subsets ("masks") are plain ints with the same bit convention.
:func:`bits` iterates the members of a mask in ascending order.

The graph6 codec implements the standard printable-ASCII format
(6 bits per byte, offset 63, upper triangle in column-major order) and
is written directly against that byte layout so that it can serve as an
independent counterpart to third-party codecs in tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import Graph6ParseError, ParameterError, SizeError

MAX_ORDER = 128


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Return the bitmask with exactly the given vertex bits set."""
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..order-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask.  Use the
    classmethod constructors (or :func:`graph6_decode`); they guarantee a
    symmetric, irreflexive adjacency structure.
    """

    order: int
    rows: tuple[int, ...]

    # -- constructors -------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list.

        Args:
            order: Number of vertices (0..128).
            edges: Pairs ``(u, v)`` with ``u != v``; duplicates are merged.
        """
        if not 0 <= order <= MAX_ORDER:
            raise SizeError(f"graph order must be in 0..{MAX_ORDER}, got {order}")
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop edge ({u}, {v}) is not allowed")
            if not (0 <= u < order and 0 <= v < order):
                raise ParameterError(f"edge ({u}, {v}) out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        """The edgeless graph on ``order`` vertices."""
        if not 0 <= order <= MAX_ORDER:
            raise SizeError(f"graph order must be in 0..{MAX_ORDER}, got {order}")
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        """The complete graph K_order."""
        if not 0 <= order <= MAX_ORDER:
            raise SizeError(f"graph order must be in 0..{MAX_ORDER}, got {order}")
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << v) for v in range(order)))

    @classmethod
    def path(cls, order: int) -> "Graph":
        """The path P_order with vertices in path order 0-1-...-(order-1)."""
        return cls.from_edges(order, ((i, i + 1) for i in range(order - 1)))

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        """The cycle C_order (order >= 3), vertices in cyclic order."""
        if order < 3:
            raise ParameterError(f"a cycle needs at least 3 vertices, got {order}")
        edges = [(i, (i + 1) % order) for i in range(order)]
        return cls.from_edges(order, edges)

    @classmethod
    def star(cls, order: int) -> "Graph":
        """The star S_order: centre 0 joined to leaves 1..order-1."""
        if order < 1:
            raise ParameterError(f"a star needs at least 1 vertex, got {order}")
        return cls.from_edges(order, ((0, v) for v in range(1, order)))

    @classmethod
    def wheel(cls, rim: int) -> "Graph":
        """The wheel W_rim: cycle 0..rim-1 plus hub ``rim`` joined to all.

        The result has order ``rim + 1``.
        """
        if rim < 3:
            raise ParameterError(f"a wheel needs rim length >= 3, got {rim}")
        edges = [(i, (i + 1) % rim) for i in range(rim)]
        edges += [(rim, i) for i in range(rim)]
        return cls.from_edges(rim + 1, edges)

    @classmethod
    def complete_multipartite(cls, sizes: Iterable[int]) -> "Graph":
        """The complete multipartite graph with the given part sizes.

        Parts occupy consecutive vertex ranges in the given order.
        """
        parts = list(sizes)
        if any(s < 1 for s in parts):
            raise ParameterError(f"part sizes must be positive, got {parts}")
        order = sum(parts)
        if order > MAX_ORDER:
            raise SizeError(f"total order {order} exceeds {MAX_ORDER}")
        full = (1 << order) - 1
        rows = []
        start = 0
        for s in parts:
            part_mask = ((1 << s) - 1) << start
            for _ in range(s):
                rows.append(full ^ part_mask)
            start += s
        return cls(order, tuple(rows))

    # -- basic queries ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        if self.order == 0:
            raise ParameterError("min_degree of the empty graph is undefined")
        return min(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        if self.order == 0:
            raise ParameterError("max_degree of the empty graph is undefined")
        return max(r.bit_count() for r in self.rows)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as pairs (u, v) with u < v, in lexicographic order."""
        for u in range(self.order):
            high = self.rows[u] >> (u + 1)
            for off in bits(high):
                yield (u, u + 1 + off)

    def vertices_mask(self) -> int:
        return (1 << self.order) - 1

    def check(self) -> None:
        """Validate the adjacency invariants (used by property tests).

        Raises ParameterError when a row refers to an out-of-range vertex,
        contains a loop, or breaks symmetry.
        """
        if not 0 <= self.order <= MAX_ORDER:
            raise ParameterError(f"order {self.order} out of range")
        if len(self.rows) != self.order:
            raise ParameterError("row count does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"row {v} refers to vertices >= order")
            if (row >> v) & 1:
                raise ParameterError(f"loop at vertex {v}")
        for u in range(self.order):
            for v in bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise ParameterError(f"asymmetric edge ({u}, {v})")

    # -- derived graphs -----------------------------------------------

    def complement(self) -> "Graph":
        """The complement graph on the same vertex set."""
        full = (1 << self.order) - 1
        return Graph(
            self.order,
            tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.rows)),
        )

    def induced(self, subset: int | Iterable[int]) -> "Graph":
        """The subgraph induced by ``subset`` (mask or vertex iterable).

        Vertices are re-indexed 0..k-1 preserving ascending order.
        """
        mask = subset if isinstance(subset, int) else mask_of(subset)
        if mask & ~self.vertices_mask():
            raise ParameterError("subset refers to vertices outside the graph")
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.rows[v] & mask):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """The disjoint union; ``b``'s vertices are shifted up by ``a.order``."""
    order = a.order + b.order
    if order > MAX_ORDER:
        raise SizeError(f"union order {order} exceeds {MAX_ORDER}")
    rows = list(a.rows) + [row << a.order for row in b.rows]
    return Graph(order, tuple(rows))


def connected_components(g: Graph) -> list[int]:
    """Return the vertex masks of the connected components.

    Components are ordered by their smallest vertex.
    """
    seen = 0
    comps = []
    full = g.vertices_mask()
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return len(connected_components(g)) == 1


def random_graph(order: int, rng: random.Random, p: float = 0.5) -> Graph:
    """A random graph where each edge appears independently.

    Densities 0.25, 0.5 and 0.75 take a fast word-parallel path; other
    values fall back to per-edge sampling.

    Args:
        order: Number of vertices.
        rng: Seeded random source (determinism is the caller's seed).
        p: Edge probability.
    """
    if not 0 <= order <= MAX_ORDER:
        raise SizeError(f"graph order must be in 0..{MAX_ORDER}, got {order}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must be in [0, 1], got {p}")
    rows = [0] * order
    for j in range(1, order):
        if p == 0.5:
            col = rng.getrandbits(j)
        elif p == 0.25:
            col = rng.getrandbits(j) & rng.getrandbits(j)
        elif p == 0.75:
            col = rng.getrandbits(j) | rng.getrandbits(j)
        else:
            col = 0
            for i in range(j):
                if rng.random() < p:
                    col |= 1 << i
        rows[j] |= col
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= 1 << j
            col ^= low
    return Graph(order, tuple(rows))


# -- graph6 codec -----------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Encode a graph in graph6 format (no trailing newline).

    The byte layout is the standard one: a size header, then the upper
    triangle of the adjacency matrix read column by column (column j
    contributes bits (0,j), (1,j), ..., (j-1,j)), packed 6 bits per
    printable byte with offset 63, zero-padded to a byte boundary.
    """
    n = g.order
    if n > MAX_ORDER:
        raise SizeError(f"graph6 supports order <= {MAX_ORDER} here, got {n}")
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    cols = []
    for j in range(1, n):
        low = g.rows[j] & ((1 << j) - 1)
        # format() emits bit j-1 first; the stream wants bit 0 first.
        cols.append(format(low, f"0{j}b")[::-1])
    stream = "".join(cols)
    stream += "0" * (-len(stream) % 6)
    body = "".join(
        chr(63 + int(stream[i : i + 6], 2)) for i in range(0, len(stream), 6)
    )
    return header + body


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` prefix allowed).

    Raises:
        Graph6ParseError: naming the byte offset of the first bad byte.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6ParseError("empty graph6 input", 0)
    data = s.encode("ascii", errors="replace")
    pos = 0

    def byte_at(i: int) -> int:
        if i >= len(data):
            raise Graph6ParseError("truncated graph6 input", len(data))
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b!r} outside graph6 range 63..126", i)
        return b

    first = byte_at(0)
    if first != 126:  # '~'
        n = first - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError("8-byte size headers exceed the supported order", 1)
        n = 0
        for i in (1, 2, 3):
            n = (n << 6) | (byte_at(i) - 63)
        pos = 4
    if n > MAX_ORDER:
        raise Graph6ParseError(f"order {n} exceeds the supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) != pos + nbytes:
        if len(data) < pos + nbytes:
            raise Graph6ParseError("truncated graph6 input", len(data))
        raise Graph6ParseError("trailing bytes after graph6 payload", pos + nbytes)
    stream = "".join(format(byte_at(i) - 63, "06b") for i in range(pos, pos + nbytes))
    for k in range(nbits, len(stream)):
        if stream[k] == "1":
            raise Graph6ParseError("nonzero padding bits", pos + k // 6)
    rows = [0] * n
    off = 0
    for j in range(1, n):
        seg = stream[off : off + j]
        off += j
        col = int(seg[::-1], 2)
        rows[j] |= col
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= 1 << j
            col ^= low
    return Graph(n, tuple(rows))
