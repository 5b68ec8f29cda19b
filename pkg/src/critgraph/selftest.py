"""Small built-in oracle checks, cheap enough to run from the command line.

Each check compares a library routine against a naive re-derivation that
shares no code with it (exhaustive permutations, exhaustive colourings).
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from . import catalog, patterns
from .canon import canonical_form
from .coloring import chromatic_number
from .criticality import is_k_vertex_critical
from .enumeration import EnumSpec, enumerate_all_graphs, enumerate_critical, graphs_up_to
from .graph import Graph

Result = tuple[str, bool, str]


def _labelled(n: int) -> Iterator[frozenset]:
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield frozenset(p for j, p in enumerate(pairs) if bits >> j & 1)


def _classes_by_permutation(n: int) -> int:
    seen = set()
    count = 0
    for edges in _labelled(n):
        if edges in seen:
            continue
        count += 1
        for perm in permutations(range(n)):
            seen.add(frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
    return count


def _chi_brute(g: Graph) -> int:
    edges = g.edges()
    for k in range(1, g.n + 1):
        for cols in product(range(k), repeat=g.n):
            if all(cols[u] != cols[v] for u, v in edges):
                return k
    return 0


def _iso_class_counts() -> Result:
    want = [_classes_by_permutation(n) for n in range(1, 6)]
    got = [enumerate_all_graphs(n) for n in range(1, 6)]
    return "isomorphism classes n<=5", got == want, f"{got}"


def _canonical_invariance() -> Result:
    g = catalog.catalog_graph("F3")
    key = canonical_form(g)
    for shift in range(1, g.n):
        perm = [(v + shift) % g.n for v in range(g.n)]
        h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        if canonical_form(h) != key:
            return "canonical form invariance", False, f"shift {shift}"
    return "canonical form invariance", True, ""


def _chi_small() -> Result:
    for g in graphs_up_to(6):
        if chromatic_number(g) != _chi_brute(g):
            return "chromatic number n<=6", False, f"{g}"
    return "chromatic number n<=6", True, ""


def _catalog() -> Result:
    bad = [c.name for c in catalog.verify_catalog() if not c.ok]
    return "catalog", not bad, ", ".join(bad)


def _enumeration_oracle() -> Result:
    p5 = patterns.path(5)
    got = enumerate_critical(EnumSpec(4, (p5,), 6), workers=1).graphs
    want = sorted(
        (canonical_form(g).decode() for g in graphs_up_to(6)
         if g.n and patterns.is_free(g, [p5]) and is_k_vertex_critical(g, 4)),
        key=lambda s: (len(s), s),
    )
    return "4-vertex-critical P5-free n<=6", sorted(got, key=lambda s: (len(s), s)) == want, f"{got}"


CHECKS = (_iso_class_counts, _canonical_invariance, _chi_small, _catalog, _enumeration_oracle)


def run_selftest() -> Iterator[Result]:
    for check in CHECKS:
        yield check()
