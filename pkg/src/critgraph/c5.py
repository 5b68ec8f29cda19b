"""Decomposition around an induced 5-cycle and the executable claim registry.

Cycle positions are 1..5 and all position arithmetic wraps into 1..5, so
``S2(i) = S(v[i-1], v[i+1])``, ``S3(i) = S(v[i-1], v[i], v[i+1])`` and
``S4(i) = S(all but v[i])``.  A set ``X`` of positions is stored as a 5-bit
mask with bit ``j-1`` standing for ``v_j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import patterns
from .catalog import FORBIDDEN_FAMILY, forbidden_family
from .coloring import chromatic_number
from .criticality import is_k_vertex_critical
from .graph6 import to_graph6
from .graph import (
    Graph,
    VertexSet,
    add_vertex,
    components,
    delete_vertex,
    induced_subgraph,
    is_clique,
    members,
    vset,
)
from .reports import ClaimReport, holds, not_applicable, violated

P5_BULL = (patterns.path(5), patterns.BULL)

Cycle = tuple[int, int, int, int, int]


def pos(i: int) -> int:
    return (i - 1) % 5 + 1


def _mask(*positions: int) -> int:
    out = 0
    for i in positions:
        out |= 1 << (pos(i) - 1)
    return out


def find_induced_c5(g: Graph) -> Optional[Cycle]:
    """Lexicographically least induced 5-cycle ``(v1, ..., v5)`` with v1 its smallest vertex and v2 < v5."""
    for c in iter_induced_c5(g):
        return c
    return None


def iter_induced_c5(g: Graph):
    """Every induced 5-cycle once, in lexicographic order of the normalised tuple."""
    adj = g.adj
    for s in range(g.n):
        above = g.vertices & ~((2 << s) - 1)
        for a in members(adj[s] & above):
            for x in members(adj[a] & above & ~adj[s]):
                for y in members(adj[x] & above & ~adj[s] & ~adj[a] & ~(1 << a)):
                    for b in members(adj[y] & adj[s] & above & ~adj[a] & ~adj[x] & ~((2 << a) - 1)):
                        yield (s, a, x, y, b)


def is_induced_c5(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) != 5 or len(set(cycle)) != 5:
        return False
    for j in range(5):
        for k in range(j + 1, 5):
            want = (k - j) in (1, 4)
            if g.has_edge(cycle[j], cycle[k]) != want:
                return False
    return True


@dataclass
class C5Partition:
    cycle: Cycle
    raw: dict[int, VertexSet]
    S0: VertexSet = 0
    S5: VertexSet = 0
    S2: dict[int, VertexSet] = field(default_factory=dict)
    S3: dict[int, VertexSet] = field(default_factory=dict)
    S4: dict[int, VertexSet] = field(default_factory=dict)

    def S(self, *positions: int) -> VertexSet:
        return self.raw.get(_mask(*positions), 0)

    @property
    def S1(self) -> VertexSet:
        return self.S_m(1)

    def S_m(self, m: int) -> VertexSet:
        out = 0
        for x, s in self.raw.items():
            if x.bit_count() == m:
                out |= s
        return out

    def excluded(self) -> dict[str, VertexSet]:
        """The S(X) that must be empty in a (P5, bull)-free graph."""
        out = {"S1": self.S1}
        out["S(i,i+1)"] = 0
        out["S(i-2,i,i+2)"] = 0
        for i in range(1, 6):
            out["S(i,i+1)"] |= self.S(i, i + 1)
            out["S(i-2,i,i+2)"] |= self.S(i - 2, i, i + 2)
        return out

    def to_dict(self) -> dict:
        out = {
            "cycle": list(self.cycle),
            "S0": list(members(self.S0)),
            "S5": list(members(self.S5)),
        }
        for name, table in (("S2", self.S2), ("S3", self.S3), ("S4", self.S4)):
            out[name] = {str(i): list(members(table[i])) for i in range(1, 6)}
        out["raw"] = {
            ",".join(str(j + 1) for j in range(5) if x >> j & 1): list(members(s))
            for x, s in sorted(self.raw.items())
            if s
        }
        return out


def partition_around_c5(g: Graph, cycle: Sequence[int]) -> C5Partition:
    if not is_induced_c5(g, cycle):
        raise ValueError(f"{tuple(cycle)} is not an induced 5-cycle")
    cycle = tuple(cycle)
    on_cycle = vset(cycle)
    raw: dict[int, VertexSet] = {}
    for v in members(g.vertices & ~on_cycle):
        x = 0
        for j, c in enumerate(cycle):
            if g.adj[v] >> c & 1:
                x |= 1 << j
        raw[x] = raw.get(x, 0) | (1 << v)
    part = C5Partition(cycle, raw)
    part.S0 = raw.get(0, 0)
    part.S5 = raw.get(0b11111, 0)
    for i in range(1, 6):
        part.S2[i] = part.S(i - 1, i + 1)
        part.S3[i] = part.S(i - 1, i, i + 1)
        part.S4[i] = part.S(i - 2, i - 1, i + 1, i + 2)
    return part


# ---------------------------------------------------------------- helpers


def _complete_witness(g: Graph, a: VertexSet, b: VertexSet) -> Optional[tuple[int, int]]:
    for x in members(a):
        miss = b & ~g.adj[x] & ~(1 << x)
        if miss:
            return x, (miss & -miss).bit_length() - 1
    return None


def _anticomplete_witness(g: Graph, a: VertexSet, b: VertexSet) -> Optional[tuple[int, int]]:
    for x in members(a):
        hit = b & g.adj[x]
        if hit:
            return x, (hit & -hit).bit_length() - 1
    return None


def _shrink_to_chromatic(g: Graph, s: VertexSet, above: int) -> VertexSet:
    """Vertex-minimal subset of ``s`` whose chromatic number still exceeds ``above``."""
    for v in list(members(s)):
        t = s & ~(1 << v)
        if chromatic_number(induced_subgraph(g, t)) > above:
            s = t
    return s


def induced_p3s(g: Graph, s: VertexSet):
    """Induced paths u-v-w inside ``g[s]`` with u < w."""
    for v in members(s):
        nb = g.adj[v] & s
        for u in members(nb):
            for w in members(nb & ~g.adj[u] & ~((2 << u) - 1)):
                yield u, v, w


def _component_counts(g: Graph, s: VertexSet) -> dict[str, list[VertexSet]]:
    out: dict[str, list[VertexSet]] = {"K1": [], "K2": [], "K3": [], "other": []}
    for c in components(g, s):
        k = c.bit_count()
        if k <= 3 and is_clique(g, c):
            out[f"K{k}"].append(c)
        else:
            out["other"].append(c)
    return out


# ------------------------------------------------------------- properties

PROPERTY_TEXT = {
    1: "S2(i) is complete to S2(i+1) u S3(i+1)",
    2: "S2(i) is anticomplete to S2(i+2)",
    3: "S2(i) is anticomplete to S3(i+2)",
    4: "S2(i) is anticomplete to S4(i)",
    5: "S2(i) u S3(i) is complete to S4(i+2)",
    6: "S2(i) is complete to S4(i+1) u S5",
    7: "S3(i) is complete to S3(i+1)",
}


def _property_sets(part: C5Partition, number: int, i: int) -> tuple[bool, VertexSet, VertexSet]:
    S2, S3, S4 = part.S2, part.S3, part.S4
    if number == 1:
        return True, S2[i], S2[pos(i + 1)] | S3[pos(i + 1)]
    if number == 2:
        return False, S2[i], S2[pos(i + 2)]
    if number == 3:
        return False, S2[i], S3[pos(i + 2)]
    if number == 4:
        return False, S2[i], S4[i]
    if number == 5:
        return True, S2[i] | S3[i], S4[pos(i + 2)]
    if number == 6:
        return True, S2[i], S4[pos(i + 1)] | part.S5
    if number == 7:
        return True, S3[i], S3[pos(i + 1)]
    raise ValueError(f"no property {number}")


def check_neighborhood_properties(g: Graph, part: C5Partition, assume_free: bool = False) -> list[ClaimReport]:
    """One report per property (1..7) and position i (1..5), 35 in total."""
    if not assume_free:
        hit = patterns.find_forbidden(g, P5_BULL)
        if hit is not None:
            reason = f"graph contains an induced {hit[0]}"
            return [not_applicable(f"property-{k}", reason, i) for k in range(1, 8) for i in range(1, 6)]
    out = []
    for k in range(1, 8):
        for i in range(1, 6):
            complete, a, b = _property_sets(part, k, i)
            bad = _complete_witness(g, a, b) if complete else _anticomplete_witness(g, a, b)
            if bad is None:
                out.append(holds(f"property-{k}", PROPERTY_TEXT[k], i))
            else:
                out.append(violated(f"property-{k}", bad, PROPERTY_TEXT[k], i))
    return out


def check_partition_emptiness(part: C5Partition) -> list[ClaimReport]:
    out = []
    for name, s in part.excluded().items():
        rid = f"empty-{name}"
        out.append(holds(rid) if not s else violated(rid, s, f"{name} should be empty"))
    return out


# ----------------------------------------------------------------- claims


@dataclass(frozen=True)
class Assumptions:
    """Which hypotheses to take on trust instead of verifying.

    (a) the graph is (P5, bull)-free, (b) it is 5-vertex-critical,
    (c) it has no member of the forbidden family as a subgraph.  Unless set
    explicitly, (c) follows (b): a critical graph containing some F as a
    subgraph is F itself, so trusting criticality of a non-F graph covers it.
    """

    assume_free: bool = False
    assume_critical: bool = False
    assume_f_free: Optional[bool] = None

    @property
    def f_free_assumed(self) -> bool:
        return self.assume_critical if self.assume_f_free is None else self.assume_f_free

    @classmethod
    def everything(cls) -> "Assumptions":
        return cls(True, True, True)


class ClaimContext:
    """Lazily computed sets shared by the claim checks for one graph and cycle."""

    def __init__(self, g: Graph, part: C5Partition, assumptions: Assumptions = Assumptions()):
        self.g = g
        self.part = part
        self.assumptions = assumptions
        self._chi: dict[VertexSet, int] = {}
        self._gate: Optional[tuple[str, tuple[str, ...]]] = None
        p = part
        self.S0, self.S5 = p.S0, p.S5
        self.S2, self.S3, self.S4 = p.S2, p.S3, p.S4
        self.L = p.S0 & g.neighbourhood(p.S5)
        self.R = p.S0 & ~self.L
        self.Ri = {i: p.S2[i] & g.neighbourhood(p.S3[i]) for i in range(1, 6)}
        self.Li = {i: p.S2[i] & ~self.Ri[i] for i in range(1, 6)}

    def chi(self, s: VertexSet) -> int:
        if s not in self._chi:
            self._chi[s] = chromatic_number(induced_subgraph(self.g, s))
        return self._chi[s]

    def nbhd_in(self, v: int, s: VertexSet) -> VertexSet:
        return self.g.adj[v] & s

    def gate(self) -> tuple[str, tuple[str, ...]]:
        """(failure reason or '', names of assumed hypotheses)."""
        if self._gate is None:
            a = self.assumptions
            assumed = []
            reason = ""
            if a.assume_free:
                assumed.append("P5-bull-free")
            else:
                hit = patterns.find_forbidden(self.g, P5_BULL)
                if hit is not None:
                    reason = f"hypothesis (a) fails: induced {hit[0]}"
            if not reason:
                if a.f_free_assumed:
                    assumed.append("F-subgraph-free")
                else:
                    for name, f in zip(FORBIDDEN_FAMILY, forbidden_family()):
                        if patterns.contains_subgraph(self.g, f) is not None:
                            reason = f"hypothesis (c) fails: subgraph isomorphic to {name}"
                            break
            if not reason:
                if a.assume_critical:
                    assumed.append("5-vertex-critical")
                elif not is_k_vertex_critical(self.g, 5):
                    reason = "hypothesis (b) fails: not 5-vertex-critical"
            self._gate = (reason, tuple(assumed))
        return self._gate


ClaimCheck = Callable[[ClaimContext], ClaimReport]
CLAIMS: dict[str, tuple[str, ClaimCheck]] = {}


def _claim(claim_id: str, statement: str):
    def register(fn: ClaimCheck) -> ClaimCheck:
        CLAIMS[claim_id] = (statement, fn)
        return fn

    return register


@_claim("S5-independent", "S5 is an independent set")
def _s5_independent(c: ClaimContext) -> ClaimReport:
    for x in members(c.S5):
        hit = c.g.adj[x] & c.S5
        if hit:
            return violated("S5-independent", [x, (hit & -hit).bit_length() - 1], "edge inside S5")
    return holds("S5-independent")


@_claim("coloring-number", "chi(S3(i)) <= 2, chi(S2(i) u S3(i)) <= 3, chi(S4(i)) <= 2, chi(S5 u S0) <= 4")
def _coloring_number(c: ClaimContext) -> ClaimReport:
    cid = "coloring-number"
    for i in range(1, 6):
        for s, bound, name in (
            (c.S3[i], 2, "S3(i)"),
            (c.S2[i] | c.S3[i], 3, "S2(i) u S3(i)"),
            (c.S4[i], 2, "S4(i)"),
        ):
            if c.chi(s) > bound:
                w = _shrink_to_chromatic(c.g, s, bound)
                return violated(cid, w, f"chi({name}) > {bound}", i)
    s = c.S5 | c.S0
    if c.chi(s) > 4:
        return violated(cid, _shrink_to_chromatic(c.g, s, 4), "chi(S5 u S0) > 4")
    return holds(cid)


@_claim("S0-nbhd", "N(S0) is contained in S5")
def _s0_nbhd(c: ClaimContext) -> ClaimReport:
    bad = c.g.neighbourhood(c.S0) & ~c.S5
    if bad:
        x = (bad & -bad).bit_length() - 1
        y = (c.g.adj[x] & c.S0 & -(c.g.adj[x] & c.S0)).bit_length() - 1
        return violated("S0-nbhd", [x, y], "neighbour of S0 outside S5")
    return holds("S0-nbhd")


@_claim("S0-color", "every component of G[S0] has chromatic number 4")
def _s0_color(c: ClaimContext) -> ClaimReport:
    for a in components(c.g, c.S0):
        if c.chi(a) != 4:
            return violated("S0-color", a, f"component of S0 with chromatic number {c.chi(a)}")
    return holds("S0-color")


@_claim("S0-connected", "G[S0] is connected")
def _s0_connected(c: ClaimContext) -> ClaimReport:
    comps = components(c.g, c.S0)
    if len(comps) > 1:
        return violated("S0-connected", comps[0] | comps[1], "S0 has two components")
    return holds("S0-connected")


@_claim("S0-4chromatic", "G[S0] is a connected 4-chromatic graph")
def _s0_4chromatic(c: ClaimContext) -> ClaimReport:
    if not c.S0:
        return not_applicable("S0-4chromatic", "S0 is empty")
    for sub in (_s0_color(c), _s0_connected(c)):
        if sub.violated:
            return violated("S0-4chromatic", sub.witness, sub.reason)
    return holds("S0-4chromatic")


@_claim("NS0-eq-S5", "N(S0) = S5")
def _ns0_eq_s5(c: ClaimContext) -> ClaimReport:
    if not c.S0:
        return not_applicable("NS0-eq-S5", "S0 is empty")
    n0 = c.g.neighbourhood(c.S0)
    extra = n0 & ~c.S5
    if extra:
        x = (extra & -extra).bit_length() - 1
        y = (c.g.adj[x] & c.S0 & -(c.g.adj[x] & c.S0)).bit_length() - 1
        return violated("NS0-eq-S5", [x, y], "neighbour of S0 outside S5")
    missing = c.S5 & ~n0
    if missing:
        return violated("NS0-eq-S5", [(missing & -missing).bit_length() - 1], "vertex of S5 anticomplete to S0")
    return holds("NS0-eq-S5")


@_claim("L-S5", "if R is nonempty then L is complete to S5 and N(R) = L")
def _l_s5(c: ClaimContext) -> ClaimReport:
    if not c.R:
        return not_applicable("L-S5", "R is empty")
    bad = _complete_witness(c.g, c.L, c.S5)
    if bad:
        return violated("L-S5", bad, "L not complete to S5")
    nr = c.g.neighbourhood(c.R)
    diff = nr ^ c.L
    if diff:
        return violated("L-S5", [(diff & -diff).bit_length() - 1], "N(R) differs from L")
    return holds("L-S5")


@_claim("LR-components", "each component of G[L] is complete or anticomplete to each component of G[R]")
def _lr_components(c: ClaimContext) -> ClaimReport:
    for lc in components(c.g, c.L):
        for rc in components(c.g, c.R):
            on = _anticomplete_witness(c.g, lc, rc)
            off = _complete_witness(c.g, lc, rc)
            if on and off:
                return violated("LR-components", list(on) + list(off), "L component mixed on R component")
    return holds("LR-components")


def _size_claim(claim_id: str, s: VertexSet, bound: int, what: str, index: Optional[int] = None) -> ClaimReport:
    if s.bit_count() > bound:
        return violated(claim_id, s, f"|{what}| = {s.bit_count()} > {bound}", index)
    return holds(claim_id, index=index)


@_claim("R-le-8", "|R| <= 8")
def _r_le_8(c: ClaimContext) -> ClaimReport:
    return _size_claim("R-le-8", c.R, 8, "R")


@_claim("L-le-8", "if R is nonempty then |L| <= 8")
def _l_le_8(c: ClaimContext) -> ClaimReport:
    if not c.R:
        return not_applicable("L-le-8", "R is empty")
    return _size_claim("L-le-8", c.L, 8, "L")


@_claim("S0-le-16", "if R is nonempty then |S0| <= 16")
def _s0_le_16(c: ClaimContext) -> ClaimReport:
    if not c.R:
        return not_applicable("S0-le-16", "R is empty")
    return _size_claim("S0-le-16", c.S0, 16, "S0")


@_claim("S0-le-13", "if R is empty then |S0| <= 13")
def _s0_le_13(c: ClaimContext) -> ClaimReport:
    if c.R:
        return not_applicable("S0-le-13", "R is nonempty")
    return _size_claim("S0-le-13", c.S0, 13, "S0")


@_claim("S4i-S5", "S4(i) is not anticomplete to S5 for at most one i")
def _s4i_s5(c: ClaimContext) -> ClaimReport:
    touching = []
    for i in range(1, 6):
        hit = _anticomplete_witness(c.g, c.S4[i], c.S5)
        if hit:
            touching.append(hit)
    if len(touching) > 1:
        return violated("S4i-S5", list(touching[0]) + list(touching[1]), "two S4(i) touch S5")
    return holds("S4i-S5")


@_claim("S5-le-2^16", "|S5| <= 2^|S0| (hence <= 2^16)")
def _s5_bound(c: ClaimContext) -> ClaimReport:
    bound = 2 ** c.S0.bit_count()
    return _size_claim("S5-le-2^16", c.S5, min(bound, 2**16), "S5")


@_claim("P3-same-nbhd", "ends of an induced P3 in G[R(i)] have the same neighbourhood in S3(i)")
def _p3_same(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        for u, v, w in induced_p3s(c.g, c.Ri[i]):
            diff = c.nbhd_in(u, c.S3[i]) ^ c.nbhd_in(w, c.S3[i])
            if diff:
                z = (diff & -diff).bit_length() - 1
                return violated("P3-same-nbhd", [u, v, w, z], "P3 ends differ on S3(i)", i)
    return holds("P3-same-nbhd")


@_claim("Li-le-8", "|L(i)| <= 8")
def _li_le_8(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        r = _size_claim("Li-le-8", c.Li[i], 8, "L(i)", i)
        if r.violated:
            return r
    return holds("Li-le-8")


def _fig3_completion(c: ClaimContext, i: int, u: int, v: int, w: int) -> bool:
    g, R, S3 = c.g, c.Ri[i], c.S3[i]
    adj = g.adj
    nu = adj[u] & S3
    if (adj[w] & S3) != nu or nu & adj[v]:
        return False
    rest = R & ~vset((u, v, w))
    ss = [s for s in members(rest & adj[u] & adj[v] & ~adj[w]) if adj[s] & S3 == nu]
    ts = [t for t in members(rest & adj[v] & adj[w] & ~adj[u]) if adj[t] & S3 == nu]
    return any(not adj[s] >> t & 1 for s in ss for t in ts)


@_claim("P3-fig3", "an induced P3 u-v-w in G[R(i)] extends to the two-triangle graph on {u,v,w,s,t}")
def _p3_fig3(c: ClaimContext) -> ClaimReport:
    found = False
    for i in range(1, 6):
        for u, v, w in induced_p3s(c.g, c.Ri[i]):
            found = True
            if not _fig3_completion(c, i, u, v, w):
                return violated("P3-fig3", [u, v, w], "P3 without the two-triangle completion", i)
    if not found:
        return not_applicable("P3-fig3", "no G[R(i)] contains an induced P3")
    return holds("P3-fig3")


@_claim("Ri-P3-free", "G[R(i)] is P3-free")
def _ri_p3_free(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        for u, v, w in induced_p3s(c.g, c.Ri[i]):
            return violated("Ri-P3-free", [u, v, w], "induced P3 in R(i)", i)
    return holds("Ri-P3-free")


@_claim("Ri-K1-K2-counts", "G[R(i)] has at most 2^|L(i)| K1-components and 5 K2-components")
def _ri_k1_k2(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        counts = _component_counts(c.g, c.Ri[i])
        if len(counts["K1"]) > 2 ** c.Li[i].bit_count():
            w = 0
            for s in counts["K1"]:
                w |= s
            return violated("Ri-K1-K2-counts", w, "too many K1-components in R(i)", i)
        if len(counts["K2"]) > 5:
            w = 0
            for s in counts["K2"]:
                w |= s
            return violated("Ri-K1-K2-counts", w, "more than 5 K2-components in R(i)", i)
    return holds("Ri-K1-K2-counts")


@_claim("Ri-K3-count", "G[R(i)] has at most one K3-component")
def _ri_k3(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        k3 = _component_counts(c.g, c.Ri[i])["K3"]
        if len(k3) > 1:
            return violated("Ri-K3-count", k3[0] | k3[1], "two K3-components in R(i)", i)
    return holds("Ri-K3-count")


def _isolated(c: ClaimContext, s: VertexSet) -> VertexSet:
    out = 0
    for v in members(s):
        if not c.g.adj[v] & s:
            out |= 1 << v
    return out


@_claim("S3-trivial-bound", "G[S3(i)] has at most 2^|S2(i) u S5| K1-components")
def _s3_trivial(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        iso = _isolated(c, c.S3[i])
        if iso.bit_count() > 2 ** (c.S2[i] | c.S5).bit_count():
            return violated("S3-trivial-bound", iso, "too many K1-components in S3(i)", i)
    return holds("S3-trivial-bound")


@_claim("S4-trivial-bound", "G[S4(i)] has at most 2^|S5| K1-components")
def _s4_trivial(c: ClaimContext) -> ClaimReport:
    for i in range(1, 6):
        iso = _isolated(c, c.S4[i])
        if iso.bit_count() > 2 ** c.S5.bit_count():
            return violated("S4-trivial-bound", iso, "too many K1-components in S4(i)", i)
    return holds("S4-trivial-bound")


def _bipartite_components(c: ClaimContext, s: VertexSet) -> list[VertexSet]:
    return [a for a in components(c.g, s) if c.chi(a) == 2]


@_claim(
    "S4i-2chromatic",
    "if chi(S4(i)) = 2 then S3(i+2) = S3(i+3) = 0, chi(S4(j)) <= 1 for j != i, "
    "chi(S3(j)) <= 1 for j in {i-1, i, i+1}, and G[S4(i)] has at most five 2-chromatic components",
)
def _s4i_2chromatic(c: ClaimContext) -> ClaimReport:
    cid = "S4i-2chromatic"
    hits = [i for i in range(1, 6) if c.chi(c.S4[i]) == 2]
    if not hits:
        return not_applicable(cid, "no S4(i) has chromatic number 2")
    for i in hits:
        for j in (i + 2, i + 3):
            if c.S3[pos(j)]:
                return violated(cid, c.S3[pos(j)], f"S3({pos(j)}) nonempty", i)
        for j in range(1, 6):
            if j != i and c.chi(c.S4[j]) > 1:
                return violated(cid, _shrink_to_chromatic(c.g, c.S4[j], 1), f"S4({j}) has an edge", i)
        for j in (i - 1, i, i + 1):
            if c.chi(c.S3[pos(j)]) > 1:
                return violated(cid, _shrink_to_chromatic(c.g, c.S3[pos(j)], 1), f"S3({pos(j)}) has an edge", i)
        bip = _bipartite_components(c, c.S4[i])
        if len(bip) > 5:
            w = 0
            for a in bip:
                w |= a
            return violated(cid, w, "more than five 2-chromatic components in S4(i)", i)
    return holds(cid)


@_claim(
    "S3i-2chromatic",
    "if chi(S3(i)) = 2 then S3(i-1) = S3(i+1) = S4(i-2) = S4(i+2) = 0, chi(S4(j)) <= 1 for j in {i-1, i, i+1}, "
    "chi(S3(j)) <= 1 for j in {i-2, i+2}, and G[S3(i)] has at most 2^|S2(i)| + 4 2-chromatic components",
)
def _s3i_2chromatic(c: ClaimContext) -> ClaimReport:
    cid = "S3i-2chromatic"
    hits = [i for i in range(1, 6) if c.chi(c.S3[i]) == 2]
    if not hits:
        return not_applicable(cid, "no S3(i) has chromatic number 2")
    for i in hits:
        for table, name, js in ((c.S3, "S3", (i - 1, i + 1)), (c.S4, "S4", (i - 2, i + 2))):
            for j in js:
                if table[pos(j)]:
                    return violated(cid, table[pos(j)], f"{name}({pos(j)}) nonempty", i)
        for table, name, js in ((c.S4, "S4", (i - 1, i, i + 1)), (c.S3, "S3", (i - 2, i + 2))):
            for j in js:
                if c.chi(table[pos(j)]) > 1:
                    w = _shrink_to_chromatic(c.g, table[pos(j)], 1)
                    return violated(cid, w, f"{name}({pos(j)}) has an edge", i)
        bip = _bipartite_components(c, c.S3[i])
        if len(bip) > 2 ** c.S2[i].bit_count() + 4:
            w = 0
            for a in bip:
                w |= a
            return violated(cid, w, "too many 2-chromatic components in S3(i)", i)
    return holds(cid)


CLAIM_IDS = tuple(CLAIMS)


def check_claim(g: Graph, part: C5Partition, claim_id: str, assumptions: Assumptions = Assumptions(),
                context: Optional[ClaimContext] = None) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim id {claim_id!r}")
    ctx = context or ClaimContext(g, part, assumptions)
    reason, assumed = ctx.gate()
    if reason:
        return not_applicable(claim_id, reason)
    report = CLAIMS[claim_id][1](ctx)
    if assumed:
        report = ClaimReport(report.id, report.status, report.witness, report.reason, report.index, assumed)
    return report


def check_claims(g: Graph, part: C5Partition, ids: Optional[Iterable[str]] = None,
                 assumptions: Assumptions = Assumptions()) -> list[ClaimReport]:
    ctx = ClaimContext(g, part, assumptions)
    return [check_claim(g, part, cid, assumptions, ctx) for cid in (ids or CLAIM_IDS)]


def claim_report_json(g: Graph, part: C5Partition, reports: Sequence[ClaimReport]) -> dict:
    return {"graph": to_graph6(g), "cycle": list(part.cycle), "reports": [r.to_dict() for r in reports]}


# --------------------------------------------------------------- samplers


def random_free_graph(n: int, edge_prob: float, seed: int, forbidden=P5_BULL) -> Graph:
    """G(n, p) sample with one vertex of some forbidden embedding deleted until none is left."""
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_prob]
    g = Graph.from_edges(n, edges)
    while True:
        hit = patterns.find_forbidden(g, forbidden)
        if hit is None:
            return g
        emb = hit[1]
        g = delete_vertex(g, emb[rng.randrange(len(emb))])


def random_c5_graph(n: int, edge_prob: float, seed: int, forbidden=P5_BULL, tries: int = 60) -> Graph:
    """Grow a forbidden-free graph from a 5-cycle on vertices 0..4.

    Each new vertex draws a uniformly random neighbourhood on the cycle (all 32
    subsets, including those a free graph cannot realise) and random neighbours
    among the earlier extra vertices; draws that create a forbidden pattern are
    rejected. The result may have fewer
    than ``n`` vertices if ``tries`` draws in a row fail.
    """
    rng = random.Random(seed)
    g = Graph.from_edges(5, [(j, (j + 1) % 5) for j in range(5)])
    while g.n < n:
        for _ in range(tries):
            x = rng.randrange(32)
            nbrs = vset(j for j in range(5) if x >> j & 1)
            for v in range(5, g.n):
                if rng.random() < edge_prob:
                    nbrs |= 1 << v
            h = add_vertex(g, nbrs)
            if patterns.find_forbidden(h, forbidden, anchor=g.n) is None:
                g = h
                break
        else:
            return g
    return g
