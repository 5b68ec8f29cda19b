"""Canonical labelling by individualisation-refinement.

The search refines an ordered vertex partition to an equitable one, then
branches on the vertices of the first smallest non-singleton cell. Every leaf
is a discrete partition, i.e. a labelling; the canonical labelling is the leaf
whose relabelled adjacency rows are lexicographically smallest. Branches are
pruned with the automorphisms discovered at equal leaves (orbit pruning among
automorphisms that fix the current prefix pointwise).
"""

from __future__ import annotations

from .graph import Graph, relabel, vset
from .graph6 import to_graph6

CanonicalKey = bytes


def _refine(adj, cells):
    while True:
        masks = [vset(c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        cells = out
        if not split:
            return cells


def _certificate(adj, order):
    pos = [0] * len(order)
    for p, v in enumerate(order):
        pos[v] = p
    rows = []
    for v in order:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << pos[low.bit_length() - 1]
            r ^= low
        rows.append(row)
    return tuple(rows), pos


def _orbits(n, generators):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for v, w in enumerate(gamma):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best = None
        self.best_pos = None
        self.autos: list[tuple[int, ...]] = []

    def run(self):
        cells = _refine(self.adj, [list(range(self.n))]) if self.n else []
        self._descend(cells, [])
        return self.best, self.best_pos

    def _descend(self, cells, prefix):
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            cert, pos = _certificate(self.adj, [c[0] for c in cells])
            if self.best is None or cert < self.best:
                self.best, self.best_pos = cert, pos
            elif cert == self.best:
                inv = [0] * self.n
                for v, p in enumerate(self.best_pos):
                    inv[p] = v
                self.autos.append(tuple(inv[pos[v]] for v in range(self.n)))
            return
        index = cells.index(target)
        tried: list[int] = []
        for v in target:
            fixing = [a for a in self.autos if all(a[u] == u for u in prefix)]
            if fixing and tried:
                orbit = _orbits(self.n, fixing)
                if any(orbit[t] == orbit[v] for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in target if u != v]
            child = cells[:index] + [[v], rest] + cells[index + 1:]
            self._descend(_refine(self.adj, child), prefix + [v])


def canonical_labelling(g: Graph) -> list[int]:
    """Return ``pos`` with ``pos[v]`` the canonical position of vertex ``v``."""
    _, pos = _Search(g).run()
    return list(pos) if pos is not None else []


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labelling(g))


def canonical_form(g: Graph) -> CanonicalKey:
    """Canonical key: the graph6 bytes of the canonically relabelled graph."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest member) of each vertex under Aut(g)."""
    search = _Search(g)
    search.run()
    return _orbits(g.n, search.autos)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
