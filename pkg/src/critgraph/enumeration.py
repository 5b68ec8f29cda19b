"""Isomorph-free generation of vertex-critical graphs by canonical augmentation.

Graphs are grown one vertex at a time.  A child ``h = g + v`` is kept only if
``v`` may be the canonical deletion of ``h``: the deleted vertex is chosen
among the vertices of maximum ``(degree, neighbour degrees)`` invariant, with
ties broken by the canonical labelling, and ``h - v`` must be isomorphic to
``h - w`` for that chosen ``w``.  Each isomorphism class therefore has a
unique parent class, so the search space is a tree; children of one parent
are additionally de-duplicated by canonical key.

Pruning only uses hereditary properties (induced-pattern freeness and
k-colourability), which every induced subgraph, in particular the canonical
parent, inherits.
"""

from __future__ import annotations

import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional

from . import patterns
from .canon import canonical_form, canonical_labelling
from .coloring import is_k_colorable
from .criticality import find_clique_cutset, find_comparable_pair, is_k_vertex_critical
from .graph import Graph, add_vertex, delete_vertex, is_connected, members, relabel
from .graph6 import from_graph6, to_graph6

log = logging.getLogger(__name__)

Sink = Callable[[str], None]


@dataclass(frozen=True)
class EnumSpec:
    k: int
    forbidden: tuple = ()
    n_max: int = 12
    split: tuple[int, int] = (0, 1)
    split_order: int = 5
    prune_forbidden: bool = True
    prune_colouring: bool = True
    time_limit: Optional[float] = None

    def __post_init__(self):
        residue, modulus = self.split
        if modulus < 1 or not 0 <= residue < modulus:
            raise ValueError(f"bad split {self.split}")
        if not 0 <= self.n_max <= 64:
            raise ValueError("n_max must be in 0..64")
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass
class EnumResult:
    graphs: list[str] = field(default_factory=list)
    counts: dict[int, int] = field(default_factory=dict)
    nodes_explored: int = 0
    wall_time: float = 0.0
    complete: bool = True

    def merge(self, other: "EnumResult") -> None:
        self.graphs.extend(other.graphs)
        self.nodes_explored += other.nodes_explored
        self.complete = self.complete and other.complete

    def finish(self) -> None:
        self.graphs = sorted(set(self.graphs), key=lambda s: (from_graph6(s).n, s))
        counts: dict[int, int] = {}
        for s in self.graphs:
            n = from_graph6(s).n
            counts[n] = counts.get(n, 0) + 1
        self.counts = dict(sorted(counts.items()))


class _Interrupted(Exception):
    pass


def _deletion_candidates(h: Graph) -> int:
    """Vertices of ``h`` with the largest (degree, sorted neighbour degrees) invariant."""
    degs = [row.bit_count() for row in h.adj]
    top = max(degs)
    tied = [u for u in range(h.n) if degs[u] == top]
    if len(tied) == 1:
        return 1 << tied[0]
    keys = {u: sorted(degs[w] for w in members(h.adj[u])) for u in tied}
    best = max(keys.values())
    out = 0
    for u in tied:
        if keys[u] == best:
            out |= 1 << u
    return out


class _Tree:
    """Depth-first canonical augmentation with hooks for pruning and acceptance."""

    def __init__(self, n_max: int, keep: Callable[[Graph, Graph, object], object],
                 visit: Callable[[Graph, object], None], split=(0, 1), split_order: int = 0,
                 leaf_filter: Optional[Callable[[Graph, int], bool]] = None,
                 deadline: Optional[float] = None):
        self.n_max = n_max
        self.keep = keep
        self.visit = visit
        self.residue, self.modulus = split
        self.split_order = split_order if self.modulus > 1 else 0
        self.leaf_filter = leaf_filter
        self.deadline = deadline
        self.nodes = 0
        self.at_split = 0

    def run(self, root: Graph, state) -> None:
        self._node(root, state)

    def _owned(self, order: int) -> bool:
        if not self.split_order:
            return True
        if order < self.split_order:
            return self.residue == 0
        return True

    def _node(self, g: Graph, state) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Interrupted
        if self.split_order and g.n == self.split_order:
            mine = self.at_split % self.modulus == self.residue
            self.at_split += 1
            if not mine:
                return
        if self._owned(g.n):
            self.visit(g, state)
        if g.n >= self.n_max:
            return
        for h, child_state in self._children(g, state):
            self._node(h, child_state)

    def _children(self, g: Graph, state):
        n = g.n
        leaf = n + 1 == self.n_max
        seen = set()
        out = []
        parent_key = None
        for nbrs in range(1 << n):
            if leaf and self.leaf_filter is not None and not self.leaf_filter(g, nbrs):
                continue
            h = add_vertex(g, nbrs)
            cands = _deletion_candidates(h)
            if not cands >> n & 1:
                continue
            child_state = self.keep(g, h, state)
            if child_state is None:
                continue
            pos = canonical_labelling(h)
            if cands != 1 << n:
                w = max(members(cands), key=lambda u: pos[u])
                if w != n:
                    if parent_key is None:
                        parent_key = canonical_form(g)
                    if canonical_form(delete_vertex(h, w)) != parent_key:
                        continue
            key = relabel(h, pos).adj
            if key in seen:
                continue
            seen.add(key)
            out.append((h, child_state))
        return out


def _critical_leaf_filter(k: int):
    """Cheap necessary conditions for the final order: min degree and no comparable pair."""

    def ok(g: Graph, nbrs: int) -> bool:
        if nbrs.bit_count() < k - 1:
            return False
        adj = g.adj
        for u in range(g.n):
            d = adj[u].bit_count() + (nbrs >> u & 1)
            if d < k - 1:
                return False
        n = g.n
        rows = [row | (1 << n) if nbrs >> u & 1 else row for u, row in enumerate(adj)] + [nbrs]
        for u in range(n + 1):
            ru = rows[u]
            for v in range(u + 1, n + 1):
                if ru >> v & 1:
                    continue
                rv = rows[v]
                if ru & ~rv == 0 or rv & ~ru == 0:
                    return False
        return True

    return ok


def is_acceptable_critical(g: Graph, k: int) -> bool:
    """Full acceptance test for an emitted graph (cheap necessary conditions first)."""
    if g.n == 0:
        return False
    if min(g.degrees()) < k - 1 or not is_connected(g):
        return False
    if find_comparable_pair(g) is not None:
        return False
    if find_clique_cutset(g) is not None:
        return False
    return is_k_vertex_critical(g, k)


def _run_shard(spec: EnumSpec) -> EnumResult:
    forbidden = [patterns.as_graph(p) for p in spec.forbidden]
    k = spec.k
    result = EnumResult()

    def keep(g: Graph, h: Graph, colouring):
        v = g.n
        if spec.prune_forbidden and patterns.find_forbidden(h, forbidden, anchor=v) is not None:
            return None
        if not spec.prune_colouring:
            return True
        used = 0
        for u in members(h.adj[v]):
            used |= 1 << colouring[u]
        free = ~used & ((1 << k) - 1)
        if free:
            return colouring + [(free & -free).bit_length() - 1]
        col = is_k_colorable(h, k)
        return col

    def visit(g: Graph, colouring) -> None:
        if g.n == 0:
            return
        if not spec.prune_forbidden and not patterns.is_free(g, forbidden):
            return
        if is_acceptable_critical(g, k):
            result.graphs.append(canonical_form(g).decode("ascii"))

    deadline = None if spec.time_limit is None else time.monotonic() + spec.time_limit
    tree = _Tree(spec.n_max, keep, visit, spec.split, spec.split_order, _critical_leaf_filter(k), deadline)
    try:
        tree.run(Graph.empty(0), [])
    except (_Interrupted, KeyboardInterrupt):
        result.complete = False
    result.nodes_explored = tree.nodes
    return result


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("CRITGRAPH_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_critical(spec: EnumSpec, sink: Optional[Sink] = None, workers: Optional[int] = None) -> EnumResult:
    """All k-vertex-critical, forbidden-free graphs of order <= n_max in this shard.

    Output is sorted by (order, canonical graph6) and identical for any worker count.
    """
    start = time.monotonic()
    workers = workers or _thread_count()
    residue, modulus = spec.split
    if workers == 1:
        result = _run_shard(spec)
    else:
        subs = [replace(spec, split=(residue + modulus * j, modulus * workers)) for j in range(workers)]
        result = EnumResult()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_shard, subs):
                result.merge(part)
    result.finish()
    result.wall_time = time.monotonic() - start
    if sink is not None:
        for line in result.graphs:
            sink(line)
    log.info("enumerated %d graphs, %d nodes, %.2fs", len(result.graphs), result.nodes_explored, result.wall_time)
    return result


def enumerate_all_graphs(n: int, sink: Optional[Callable[[Graph], None]] = None) -> int:
    """Visit one representative of every isomorphism class of order exactly ``n``."""
    count = 0

    def visit(g: Graph, _state) -> None:
        nonlocal count
        if g.n == n:
            count += 1
            if sink is not None:
                sink(g)

    _Tree(n, lambda g, h, s: True, visit).run(Graph.empty(0), None)
    return count


def graphs_up_to(n: int) -> list[Graph]:
    out: list[Graph] = []

    def visit(g: Graph, _state) -> None:
        out.append(g)

    _Tree(n, lambda g, h, s: True, visit).run(Graph.empty(0), None)
    return out


def write_graph6(lines: Iterable[str], stream=sys.stdout) -> None:
    for line in lines:
        stream.write(line + "\n")


__all__ = [
    "EnumSpec",
    "EnumResult",
    "enumerate_critical",
    "enumerate_all_graphs",
    "graphs_up_to",
    "is_acceptable_critical",
    "to_graph6",
]
