"""Named patterns, induced/non-induced containment and odd hole search."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from .canon import automorphism_orbits
from .graph import Graph, VertexSet, complement, disjoint_union, members, vset
from .graph6 import from_graph6

Embedding = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    """A named forbidden graph.

    ``kind`` is one of ``path``, ``cycle``, ``complete``, ``complete_bipartite``,
    ``bull``, ``2K2``, ``union`` or ``custom``; ``args`` holds its parameters
    (orders, part sizes, member patterns, or a graph for ``custom``).
    """

    kind: str
    args: tuple = ()

    def __str__(self) -> str:
        if self.kind == "path":
            return f"P{self.args[0]}"
        if self.kind == "cycle":
            return f"C{self.args[0]}"
        if self.kind == "complete":
            return f"K{self.args[0]}"
        if self.kind == "complete_bipartite":
            return f"K{self.args[0]},{self.args[1]}"
        if self.kind == "bull":
            return "bull"
        if self.kind == "2K2":
            return "2K2"
        if self.kind == "union":
            return "+".join(str(p) for p in self.args)
        from .graph6 import to_graph6
        return "g6:" + to_graph6(self.args[0])


def path(t: int) -> Pattern:
    return Pattern("path", (t,))


def cycle(t: int) -> Pattern:
    return Pattern("cycle", (t,))


def complete(n: int) -> Pattern:
    return Pattern("complete", (n,))


def complete_bipartite(r: int, s: int) -> Pattern:
    return Pattern("complete_bipartite", (r, s))


BULL = Pattern("bull")
TWO_K2 = Pattern("2K2")


def custom(g: Graph) -> Pattern:
    return Pattern("custom", (g,))


def union(*parts: Pattern) -> Pattern:
    return Pattern("union", tuple(parts))


def build_pattern(p: Pattern) -> Graph:
    kind, args = p.kind, p.args
    if kind == "path":
        (t,) = args
        if t < 1:
            raise ValueError("path needs t >= 1")
        return Graph.from_edges(t, [(i, i + 1) for i in range(t - 1)])
    if kind == "cycle":
        (t,) = args
        if t < 3:
            raise ValueError("cycle needs t >= 3")
        return Graph.from_edges(t, [(i, (i + 1) % t) for i in range(t)])
    if kind == "complete":
        (n,) = args
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        r, s = args
        if r < 1 or s < 1:
            raise ValueError("complete bipartite parts must be nonempty")
        return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])
    if kind == "bull":
        # triangle 0-1-2 with pendants 3 on 0 and 4 on 2
        return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)])
    if kind == "2K2":
        return Graph.from_edges(4, [(0, 1), (2, 3)])
    if kind == "union":
        return disjoint_union(*(build_pattern(q) for q in args))
    if kind == "custom":
        return args[0]
    raise ValueError(f"unknown pattern kind {kind!r}")


_SIMPLE = re.compile(r"^(\d*)([PCK])(\d+)(?:,(\d+))?$")


def parse_pattern(text: str) -> Pattern:
    """Parse CLI names such as ``P5``, ``C5``, ``K5``, ``K2,3``, ``bull``, ``2K2``, ``g6:Dhc``."""
    text = text.strip()
    if text.lower() == "bull":
        return BULL
    if text.startswith("g6:"):
        return custom(from_graph6(text[3:]))
    if "+" in text:
        return union(*(parse_pattern(part) for part in text.split("+")))
    m = _SIMPLE.match(text)
    if not m:
        raise ValueError(f"unrecognised pattern {text!r}")
    mult, letter, a, b = m.groups()
    if b is not None:
        if letter != "K":
            raise ValueError(f"unrecognised pattern {text!r}")
        base = complete_bipartite(int(a), int(b))
    else:
        base = {"P": path, "C": cycle, "K": complete}[letter](int(a))
    if mult:
        if base == complete(2) and mult == "2":
            return TWO_K2
        return union(*([base] * int(mult)))
    return base


def parse_pattern_list(text: str) -> list[Pattern]:
    """Parse a comma separated list; ``K2,3`` keeps its comma."""
    tokens: list[str] = []
    for part in re.split(r"[,;\s]+", text.strip()):
        if part.isdigit() and tokens and re.fullmatch(r"\d*K\d+", tokens[-1]):
            tokens[-1] += "," + part
        elif part:
            tokens.append(part)
    return [parse_pattern(t) for t in tokens]


PatternLike = Union[Pattern, Graph]


def as_graph(p: PatternLike) -> Graph:
    return p if isinstance(p, Graph) else build_pattern(p)


@lru_cache(maxsize=1024)
def _orbit_representatives(h: Graph) -> list[int]:
    return sorted(set(automorphism_orbits(h)))


@lru_cache(maxsize=1024)
def _plan(h: Graph, first: Optional[int]):
    """Order pattern vertices so each one sees as many placed vertices as possible."""
    order: list[int] = []
    left = set(range(h.n))
    if first is not None:
        order.append(first)
        left.discard(first)
    while left:
        placed = vset(order)
        nxt = max(left, key=lambda v: ((h.adj[v] & placed).bit_count(), h.degree(v), -v))
        order.append(nxt)
        left.discard(nxt)
    steps = []
    for k, p in enumerate(order):
        before = order[:k]
        nbr = tuple(i for i, q in enumerate(before) if h.adj[p] >> q & 1)
        non = tuple(i for i, q in enumerate(before) if not h.adj[p] >> q & 1)
        steps.append((p, h.degree(p), nbr, non))
    return tuple(order), tuple(steps)


def _search(g: Graph, h: Graph, induced: bool, anchor: Optional[int]) -> Optional[Embedding]:
    if h.n > g.n:
        return None
    if h.n == 0:
        return ()
    degs = g.degrees()
    by_degree = [0] * (g.n + 1)
    for v, d in enumerate(degs):
        by_degree[d] |= 1 << v
    at_least = [0] * (g.n + 2)
    for d in range(g.n, -1, -1):
        at_least[d] = at_least[d + 1] | by_degree[d]
    adj = g.adj
    full = g.vertices

    firsts = [None] if anchor is None else _orbit_representatives(h)
    for first in firsts:
        order, steps = _plan(h, first)
        if max(h.degree(p) for p in order) > g.n - 1:
            return None
        image = [0] * h.n

        def extend(k: int, used: int) -> bool:
            if k == h.n:
                return True
            p, dp, nbr, non = steps[k]
            cand = full & ~used & at_least[dp]
            if k == 0 and anchor is not None:
                cand &= 1 << anchor
            for i in nbr:
                cand &= adj[image[i]]
            if induced:
                for i in non:
                    cand &= ~adj[image[i]]
            while cand:
                low = cand & -cand
                x = low.bit_length() - 1
                image[k] = x
                if extend(k + 1, used | low):
                    return True
                cand ^= low
            return False

        if extend(0, 0):
            out = [0] * h.n
            for k, p in enumerate(order):
                out[p] = image[k]
            return tuple(out)
    return None


def contains_induced(g: Graph, h: PatternLike, anchor: Optional[int] = None) -> Optional[Embedding]:
    """Embedding of ``h`` as an induced subgraph of ``g``; ``emb[p]`` is the host vertex of ``p``.

    With ``anchor`` set, only embeddings whose image contains that host vertex count.
    """
    return _search(g, as_graph(h), True, anchor)


def contains_subgraph(g: Graph, h: PatternLike, anchor: Optional[int] = None) -> Optional[Embedding]:
    """Embedding of ``h`` as a (not necessarily induced) subgraph of ``g``."""
    return _search(g, as_graph(h), False, anchor)


def find_forbidden(g: Graph, patterns: Iterable[PatternLike], anchor: Optional[int] = None):
    """First ``(pattern, embedding)`` found among ``patterns``, or None."""
    for p in patterns:
        emb = contains_induced(g, p, anchor)
        if emb is not None:
            return p, emb
    return None


def is_free(g: Graph, patterns: Iterable[PatternLike]) -> bool:
    return find_forbidden(g, patterns) is None


def find_odd_hole(g: Graph) -> Optional[VertexSet]:
    """Vertex set of an induced odd cycle of length at least 5, or None."""
    adj = g.adj
    for s in range(g.n):
        above = g.vertices & ~((2 << s) - 1)
        # induced paths from s, the smallest hole vertex; `shadow` = N(interior)
        stack = [(p1, (1 << s) | (1 << p1), 0) for p1 in members(adj[s] & above)]
        while stack:
            last, on_path, shadow = stack.pop()
            length = on_path.bit_count()
            for x in members(adj[last] & above & ~on_path & ~shadow):
                if adj[x] >> s & 1:
                    if length + 1 >= 5 and length % 2 == 0:
                        return on_path | (1 << x)
                    continue
                stack.append((x, on_path | (1 << x), shadow | adj[last]))
    return None


def find_odd_antihole(g: Graph) -> Optional[VertexSet]:
    return find_odd_hole(complement(g))


def is_perfect(g: Graph) -> bool:
    return find_odd_hole(g) is None and find_odd_antihole(g) is None
