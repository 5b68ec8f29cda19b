"""Immutable small graphs stored as per-vertex neighbourhood bitmasks.

A vertex set is a plain ``int`` whose bit ``v`` is set iff ``v`` is a member.
All graphs have at most ``MAX_ORDER`` vertices so every set fits one word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

VertexSet = int


class GraphError(ValueError):
    pass


def members(s: VertexSet) -> Iterator[int]:
    """Yield the members of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def vset(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def size(s: VertexSet) -> int:
    return s.bit_count()


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"neighbour of {v} out of range")
            if row >> v & 1:
                raise GraphError(f"loop at {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in members(self.adj[v] & ((1 << v) - 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbourhood(self, s: VertexSet) -> VertexSet:
        """Open neighbourhood N(S): vertices outside ``s`` with a neighbour in ``s``."""
        out = 0
        for v in members(s):
            out |= self.adj[v]
        return out & ~s

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """G[S] with vertices relabelled by increasing original index."""
    keep = list(members(s & g.vertices))
    if len(keep) == g.n:
        return g
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertices & ~(1 << v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def add_vertex(g: Graph, nbrs: VertexSet) -> Graph:
    """Append vertex ``g.n`` adjacent to exactly ``nbrs``."""
    if g.n >= MAX_ORDER:
        raise GraphError(f"cannot exceed {MAX_ORDER} vertices")
    if nbrs & ~g.vertices:
        raise GraphError("neighbour set outside the graph")
    bit = 1 << g.n
    rows = tuple(row | bit if nbrs >> v & 1 else row for v, row in enumerate(g.adj))
    return Graph(g.n + 1, rows + (nbrs,))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        out = 0
        for u in members(row):
            out |= 1 << perm[u]
        rows[perm[v]] = out
    return Graph(g.n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(rows))


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``g`` (or of ``g[within]``), ordered by smallest member."""
    todo = g.vertices if within is None else within & g.vertices
    out = []
    while todo:
        comp = todo & -todo
        frontier = comp
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= g.adj[v]
            frontier = reach & todo & ~comp
            comp |= frontier
        out.append(comp)
        todo &= ~comp
    return out


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    s = g.vertices if within is None else within & g.vertices
    return len(components(g, s)) <= 1


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((s & ~g.adj[v] & ~(1 << v)) == 0 for v in members(s))


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not (g.adj[v] & s) for v in members(s))


def is_complete_to(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    return all((b & ~g.adj[v]) == 0 for v in members(a))


def is_anticomplete_to(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    return all(not (g.adj[v] & b) for v in members(a))
