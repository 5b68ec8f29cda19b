"""Exact colouring: k-colourability by DSATUR backtracking, chromatic and clique numbers."""

from __future__ import annotations

from typing import Optional

from .graph import Graph, VertexSet, induced_subgraph, members

Coloring = list[int]


def maximum_clique(g: Graph) -> VertexSet:
    """A maximum clique, found by branch and bound with a greedy-colouring bound."""
    adj = g.adj
    best = 0
    best_size = 0

    def colour_bound(p: int) -> list[tuple[int, int]]:
        # greedy sequential colouring of p; returns (vertex, colour) in bound order
        out = []
        colour = 0
        left = p
        while left:
            colour += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                left &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(clique: int, size: int, p: int) -> None:
        nonlocal best, best_size
        order = colour_bound(p)
        for v, c in reversed(order):
            if size + c <= best_size:
                return
            grown = clique | (1 << v)
            rest = p & adj[v]
            if rest:
                expand(grown, size + 1, rest)
            elif size + 1 > best_size:
                best, best_size = grown, size + 1
            p &= ~(1 << v)

    if g.n:
        expand(0, 0, g.vertices)
    return best


def clique_number(g: Graph) -> int:
    return maximum_clique(g).bit_count()


def is_proper(g: Graph, colors: Coloring) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


def is_k_colorable(g: Graph, k: int, seed_clique: Optional[VertexSet] = None) -> Optional[Coloring]:
    """Return a proper colouring with colours ``0..k-1`` or None.

    Vertices of ``seed_clique`` (a maximum clique by default) are precoloured
    ``0, 1, ...`` which removes the colour permutation symmetry among them.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n == 0:
        return []
    if k == 0:
        return None
    adj = g.adj
    clique = maximum_clique(g) if seed_clique is None else seed_clique
    if clique.bit_count() > k:
        return None
    colour = [-1] * g.n
    classes = [0] * k
    for c, v in enumerate(members(clique)):
        colour[v] = c
        classes[c] = 1 << v
    opened = clique.bit_count()

    def solve(uncoloured: int, opened: int) -> bool:
        if not uncoloured:
            return True
        pick = -1
        pick_key = (-1, -1)
        pick_free = 0
        for v in members(uncoloured):
            row = adj[v]
            free = 0
            for c in range(opened):
                if not classes[c] & row:
                    free |= 1 << c
            sat = opened - free.bit_count()
            key = (sat, (row & uncoloured).bit_count())
            if key > pick_key:
                pick, pick_key, pick_free = v, key, free
                if not free and opened == k:
                    return False
        rest = uncoloured & ~(1 << pick)
        bit = 1 << pick
        for c in members(pick_free):
            classes[c] |= bit
            colour[pick] = c
            if solve(rest, opened):
                return True
            classes[c] &= ~bit
        if opened < k:
            classes[opened] |= bit
            colour[pick] = opened
            if solve(rest, opened + 1):
                return True
            classes[opened] &= ~bit
        colour[pick] = -1
        return False

    if solve(g.vertices & ~clique, opened):
        return colour
    return None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    clique = maximum_clique(g)
    k = clique.bit_count()
    while is_k_colorable(g, k, clique) is None:
        k += 1
    return k


def chromatic_of_subset(g: Graph, s: VertexSet) -> int:
    return chromatic_number(induced_subgraph(g, s))
