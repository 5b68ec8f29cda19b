"""Named fixture graphs: the forbidden family F = {K5, F1, ..., F9} and a few small helpers.

For every F_i, vertices 0..4 are the rim cycle v1..v5 (v_j is vertex j-1)
and the remaining vertices follow in the order of ``labels``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

_RIM = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    order: int
    five_vertex_critical: bool
    labels: tuple[str, ...]


def _rim_graph(extra: dict[str, tuple[int, ...]], links: list[tuple[str, str]]) -> tuple[Graph, tuple[str, ...]]:
    labels = ("v1", "v2", "v3", "v4", "v5") + tuple(extra)
    index = {name: i for i, name in enumerate(labels)}
    edges = list(_RIM)
    for name, spokes in extra.items():
        edges.extend((index[name], j - 1) for j in spokes)
    edges.extend((index[a], index[b]) for a, b in links)
    return Graph.from_edges(len(labels), edges), labels


# spokes name rim positions 1..5 as in the drawing
ALL = (1, 2, 3, 4, 5)

_F = {
    "F1": ({"s51": ALL, "s52": ALL}, [("s51", "s52")]),
    "F2": ({"s5": ALL, "s41": (1, 2, 3, 5), "s42": (1, 2, 4, 5)}, [("s5", "s41"), ("s5", "s42")]),
    "F3": (
        {"s51": ALL, "s52": ALL, "s41": (1, 2, 3, 5), "s42": (1, 2, 4, 5)},
        [("s41", "s51"), ("s42", "s52")],
    ),
    "F4": ({"s5": ALL, "s41": (1, 3, 4, 5), "s42": (1, 2, 3, 4)}, [("s5", "s41"), ("s5", "s42")]),
    "F5": (
        {"s41": (1, 3, 4, 5), "s42": (1, 2, 3, 4), "s51": ALL, "s52": ALL},
        [("s41", "s51"), ("s42", "s52")],
    ),
    "F6": (
        {"s51": ALL, "s52": ALL, "s41": (1, 2, 5), "s42": (1, 2, 5)},
        [("s41", "s51"), ("s42", "s52"), ("s41", "s42")],
    ),
    "F7": (
        {"s51": ALL, "s52": ALL, "s41": (1, 2, 3), "s42": (1, 4, 5)},
        [("s41", "s51"), ("s42", "s52")],
    ),
    "F8": (
        {"s51": ALL, "s52": ALL, "s41": (2, 3, 4), "s42": (3, 4, 5)},
        [("s41", "s51"), ("s42", "s52"), ("s41", "s42")],
    ),
    "F9": (
        {"s321": (1, 2, 3), "s322": (1, 2, 3), "s351": (1, 4, 5), "s352": (1, 4, 5)},
        [("s321", "s322"), ("s351", "s352")],
    ),
}


def _build() -> dict[str, CatalogEntry]:
    out = {}
    k5 = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    out["K5"] = CatalogEntry("K5", k5, 5, True, ("v1", "v2", "v3", "v4", "v5"))
    for name, (extra, links) in _F.items():
        g, labels = _rim_graph(extra, links)
        out[name] = CatalogEntry(name, g, g.n, True, labels)
    c5, labels = _rim_graph({}, [])
    out["C5"] = CatalogEntry("C5", c5, 5, False, labels)
    w5, labels = _rim_graph({"w": ALL}, [])
    out["W5"] = CatalogEntry("W5", w5, 6, False, labels)
    bull = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4)])
    out["bull"] = CatalogEntry("bull", bull, 5, False, ("t1", "t2", "t3", "p1", "p3"))
    return out


CATALOG: dict[str, CatalogEntry] = _build()

FORBIDDEN_FAMILY = ("K5", "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9")


def catalog_graph(name: str) -> Graph:
    try:
        return CATALOG[name].graph
    except KeyError:
        raise KeyError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG)}") from None


def forbidden_family() -> list[Graph]:
    return [CATALOG[name].graph for name in FORBIDDEN_FAMILY]


@dataclass
class CatalogCheck:
    name: str
    order_ok: bool
    critical_ok: bool
    c5_ok: bool

    @property
    def ok(self) -> bool:
        return self.order_ok and self.critical_ok and self.c5_ok


def verify_catalog() -> list[CatalogCheck]:
    """Recheck orders, 5-vertex-criticality and induced C5 presence for every entry."""
    from .c5 import find_induced_c5
    from .criticality import is_k_vertex_critical

    out = []
    for entry in CATALOG.values():
        g = entry.graph
        critical = is_k_vertex_critical(g, 5)
        has_c5 = find_induced_c5(g) is not None
        expect_c5 = entry.name.startswith("F") or entry.name in ("C5", "W5")
        out.append(CatalogCheck(entry.name, g.n == entry.order, critical == entry.five_vertex_critical, has_c5 == expect_c5))
    return out
