"""Criticality predicates and the structural facts every vertex-critical graph obeys."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import patterns
from .canon import are_isomorphic
from .coloring import chromatic_number, is_k_colorable
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    components,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    is_complete_to,
    is_connected,
    members,
    vset,
)
from .reports import ClaimReport, holds, not_applicable, violated


def has_chromatic_number(g: Graph, k: int) -> bool:
    if k == 0:
        return g.n == 0
    return is_k_colorable(g, k) is not None and is_k_colorable(g, k - 1) is None


def is_k_vertex_critical(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    if not has_chromatic_number(g, k):
        return False
    return all(is_k_colorable(delete_vertex(g, v), k - 1) is not None for v in range(g.n))


def is_k_critical(g: Graph, k: int) -> bool:
    """chi(g) = k and deleting any one vertex or edge lowers the chromatic number."""
    if not is_k_vertex_critical(g, k):
        return False
    return all(is_k_colorable(delete_edge(g, u, v), k - 1) is not None for u, v in g.edges())


def _cliques(g: Graph):
    """All nonempty cliques, by size then lexicographically."""
    layer = [1 << v for v in range(g.n)]
    while layer:
        yield from layer
        nxt = []
        for c in layer:
            top = c.bit_length() - 1
            common = g.vertices
            for v in members(c):
                common &= g.adj[v]
            common &= ~((2 << top) - 1)
            nxt.extend(c | (1 << w) for w in members(common))
        layer = nxt


def find_clique_cutset(g: Graph) -> Optional[VertexSet]:
    if not is_connected(g):
        raise GraphError("clique cutset search needs a connected graph")
    for k in _cliques(g):
        rest = g.vertices & ~k
        if rest and len(components(g, rest)) > 1:
            return k
    return None


def find_comparable_pair(g: Graph) -> Optional[tuple[int, int]]:
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] >> v & 1:
                continue
            if adj[u] & ~adj[v] == 0 or adj[v] & ~adj[u] == 0:
                return u, v
    return None


def mixed_on(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` adjacent to some but not all of ``s``."""
    out = 0
    for x in members(g.vertices & ~s):
        seen = g.adj[x] & s
        if seen and seen != s:
            out |= 1 << x
    return out


def is_homogeneous(g: Graph, s: VertexSet) -> bool:
    return mixed_on(g, s) == 0


def homogeneous_closure(g: Graph, seed: VertexSet) -> VertexSet:
    """Smallest homogeneous set containing ``seed``."""
    s = seed
    while True:
        extra = mixed_on(g, s)
        if not extra:
            return s
        s |= extra


def homogeneous_family(g: Graph) -> list[VertexSet]:
    """Proper homogeneous sets reachable from pair closures and overlapping unions."""
    full = g.vertices
    family = set()
    for u, v in combinations(range(g.n), 2):
        c = homogeneous_closure(g, (1 << u) | (1 << v))
        if c != full:
            family.add(c)
    frontier = list(family)
    while frontier:
        grown = []
        for a in frontier:
            for b in list(family):
                if a & b and a & ~b and b & ~a:
                    c = a | b
                    if c != full and c not in family:
                        family.add(c)
                        grown.append(c)
        frontier = grown
    return sorted(family, key=lambda s: tuple(members(s)))


def find_homogeneous_sets(g: Graph) -> list[VertexSet]:
    """All maximal homogeneous sets S with 2 <= |S| < n."""
    family = homogeneous_family(g)
    return [s for s in family if not any(s != t and s & ~t == 0 for t in family)]


@dataclass(frozen=True)
class XYObstruction:
    x: VertexSet
    y: VertexSet


def is_xy_obstruction(g: Graph, x: VertexSet, y: VertexSet, chi=chromatic_number) -> bool:
    if not x or not y or x & y:
        return False
    if g.neighbourhood(x) & y:
        return False
    if not is_complete_to(g, y, g.neighbourhood(x)):
        return False
    return chi(induced_subgraph(g, x)) <= chi(induced_subgraph(g, y))


def find_xy_obstruction(g: Graph, size_bound: int = 4) -> Optional[XYObstruction]:
    """Disjoint nonempty X, Y that are anticomplete, with chi(X) <= chi(Y) and Y complete to N(X).

    Searches all X, Y with at most ``size_bound`` vertices, then pairs built from
    the components of each homogeneous set regardless of size.
    """
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    cache: dict[VertexSet, int] = {}

    def chi(s: VertexSet) -> int:
        if s not in cache:
            cache[s] = chromatic_number(induced_subgraph(g, s))
        return cache[s]

    verts = list(range(g.n))
    for r in range(1, min(size_bound, g.n) + 1):
        for xs in combinations(verts, r):
            x = vset(xs)
            nx = g.neighbourhood(x)
            cand = 0
            for y in members(g.vertices & ~x & ~nx):
                if nx & ~g.adj[y] == 0:
                    cand |= 1 << y
            if not cand:
                continue
            need = chi(x)
            pool = list(members(cand))
            for ry in range(need, min(size_bound, len(pool)) + 1):
                for ys in combinations(pool, ry):
                    y = vset(ys)
                    if chi(y) >= need:
                        return XYObstruction(x, y)

    for s in homogeneous_family(g):
        parts = components(g, s)
        for a in parts:
            others = s & ~a
            for y in [b for b in parts if b != a] + ([others] if len(parts) > 2 else []):
                if is_complete_to(g, y, g.neighbourhood(a)) and chi(a) <= chi(y):
                    return XYObstruction(a, y)
    return None


def check_lemma6(g: Graph) -> ClaimReport:
    """Connected pieces of homogeneous sets in a 5-vertex-critical P5-free graph are K1, K2, K3 or C5.

    Returns NotApplicable when ``g`` is not 5-vertex-critical and P5-free;
    otherwise Violated with the first offending component as witness.
    """
    claim = "lemma-6"
    if not patterns.is_free(g, [patterns.path(5)]):
        return not_applicable(claim, "graph contains an induced P5")
    if not is_k_vertex_critical(g, 5):
        return not_applicable(claim, "graph is not 5-vertex-critical")
    allowed = {
        1: [patterns.build_pattern(patterns.complete(1))],
        2: [patterns.build_pattern(patterns.complete(2))],
        3: [patterns.build_pattern(patterns.complete(3)), patterns.build_pattern(patterns.cycle(5))],
    }
    seen = set()
    for s in homogeneous_family(g):
        for a in components(g, s):
            if a in seen:
                continue
            seen.add(a)
            h = induced_subgraph(g, a)
            k = chromatic_number(h)
            if k in allowed and not any(are_isomorphic(h, t) for t in allowed[k]):
                return violated(claim, a, f"homogeneous component with chromatic number {k} is not K1/K2/K3/C5")
    return holds(claim)
