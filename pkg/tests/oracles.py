"""Deliberately naive reference implementations used only by the tests.

None of these import the search code under test; they work from edge lists
and exhaustive enumeration so that agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np


def edge_set(g) -> frozenset:
    return frozenset((u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1)


def permuted(edges, perm) -> frozenset:
    return frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in edges)


def isomorphic_brute(g, h) -> bool:
    if g.n != h.n:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    return any(permuted(eg, p) == eh for p in permutations(range(g.n)))


def labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield frozenset(p for j, p in enumerate(pairs) if bits >> j & 1)


def class_count_brute(n: int) -> int:
    """Isomorphism classes of n-vertex graphs by orbit-marking under all n! relabellings."""
    seen = set()
    count = 0
    perms = list(permutations(range(n)))
    for edges in labelled_graphs(n):
        if edges in seen:
            continue
        count += 1
        for p in perms:
            seen.add(permuted(edges, p))
    return count


_ASSIGN: dict[tuple[int, int], np.ndarray] = {}


def _assignments(n: int, k: int) -> np.ndarray:
    if (n, k) not in _ASSIGN:
        grids = np.indices((k,) * n, dtype=np.int8).reshape(n, -1).T
        _ASSIGN[(n, k)] = grids
    return _ASSIGN[(n, k)]


def chi_brute(g) -> int:
    """Smallest k admitting a proper assignment, tested over all k^n assignments at once."""
    if g.n == 0:
        return 0
    edges = np.array(sorted(edge_set(g)), dtype=np.int64).reshape(-1, 2)
    if len(edges) == 0:
        return 1
    for k in range(2, g.n + 1):
        a = _assignments(g.n, k)
        if (a[:, edges[:, 0]] != a[:, edges[:, 1]]).all(axis=1).any():
            return k
    return g.n


def omega_brute(g) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(g.adj[u] >> v & 1 for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def perfect_by_subsets(g) -> bool:
    """chi == omega on every induced subgraph, with a bitmask DP for both."""
    n = g.n
    full = 1 << n
    clique = [False] * full
    clique[0] = True
    independent = [False] * full
    independent[0] = True
    for mask in range(1, full):
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        clique[mask] = clique[rest] and (g.adj[v] & rest) == rest
        independent[mask] = independent[rest] and (g.adj[v] & rest) == 0
    omega = [0] * full
    chi = [0] * full
    for mask in range(1, full):
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        omega[mask] = max(omega[rest], omega[mask & g.adj[v]] + 1)
        best = n + 1
        sub = mask
        while sub:
            # colour classes containing the lowest vertex
            if sub >> v & 1 and independent[sub]:
                best = min(best, chi[mask & ~sub] + 1)
            sub = (sub - 1) & mask
        chi[mask] = best
        if chi[mask] != omega[mask]:
            return False
    return True


def induced_contains_brute(g, h) -> bool:
    """h isomorphic to an induced subgraph of g, by trying every vertex subset and ordering."""
    eh = edge_set(h)
    for vs in combinations(range(g.n), h.n):
        for order in permutations(vs):
            if all(((g.adj[order[a]] >> order[b] & 1) == 1) == ((a, b) in eh) for a, b in combinations(range(h.n), 2)):
                return True
    return False


def subgraph_contains_brute(g, h) -> bool:
    eh = edge_set(h)
    for vs in combinations(range(g.n), h.n):
        for order in permutations(vs):
            if all(g.adj[order[a]] >> order[b] & 1 for a, b in eh):
                return True
    return False


def vertex_critical_brute(g, k: int) -> bool:
    from critgraph.graph import delete_vertex

    return chi_brute(g) == k and all(chi_brute(delete_vertex(g, v)) == k - 1 for v in range(g.n))
